#ifndef SQEC_POLYPARSE_HPP
#define SQEC_POLYPARSE_HPP

#include "laurent.hpp"

namespace sqec {

/// Parse an insertion-grammar expression into a Laurent polynomial:
///   expr := ('-')? term (('+'|'-') term)*
///   term := factor ('*' factor)*
///   factor := atom ('^' int)?
///   atom := rational | 'i' | var | '(' expr ')'
/// Variables are t (rank 1) or t1..tr; exponents are integers, possibly
/// negative (negative powers only of monomials). Diagnostics carry
/// line:column positions.
LaurentPoly parse_poly(const std::string& src, int rank);

/// Constant expressions ("3/2", "-1", "1/2+1/2*i", ...).
GaussianRational parse_gaussian(const std::string& src);

} // namespace sqec

#endif
