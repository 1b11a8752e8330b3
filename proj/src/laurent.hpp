#ifndef SQEC_LAURENT_HPP
#define SQEC_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "gaussian.hpp"

namespace sqec {

/// Exponent vector in the u-variables, u_i = t_i^{1/2}. The torus character
/// t^w for a weight w in Z^r is the monomial with exponent vector 2w.
using ExpVec = std::vector<int>;

ExpVec expvec_add(const ExpVec& a, const ExpVec& b);
ExpVec expvec_sub(const ExpVec& a, const ExpVec& b);

/// Graded-lex order, greatest first: higher total degree wins, ties broken
/// lexicographically. begin() of the term map is the leading term.
struct GradedLexGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

bool lex_greater(const ExpVec& a, const ExpVec& b);

/// Multivariate Laurent polynomial over Q(i) in u_1..u_r. No zero
/// coefficients are stored; the zero polynomial has an empty term map.
class LaurentPoly {
public:
    using TermMap = std::map<ExpVec, GaussianRational, GradedLexGreater>;

    explicit LaurentPoly(int rank) : rank_(rank) {}

    static LaurentPoly zero(int rank) { return LaurentPoly(rank); }
    static LaurentPoly one(int rank) { return constant(rank, GaussianRational(1)); }
    static LaurentPoly constant(int rank, const GaussianRational& c);
    static LaurentPoly monomial(int rank, const ExpVec& e, const GaussianRational& c);
    /// u_i^power
    static LaurentPoly u_power(int rank, int var, int power);
    /// t^w = u^{2w} for a weight vector w
    static LaurentPoly t_weight(int rank, const std::vector<int>& w);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the exponent vector (zero if absent).
    GaussianRational coeff(const ExpVec& e) const;
    GaussianRational constant_term() const;

    void add_term(const ExpVec& e, const GaussianRational& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly scaled(const GaussianRational& c) const;
    LaurentPoly shifted(const ExpVec& e) const;

    bool operator==(const LaurentPoly& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Componentwise minimum/maximum exponent over all terms (zero poly: all 0).
    ExpVec min_exponents() const;
    ExpVec max_exponents() const;

    /// Substitute u_var = 1 (exponent slot collapses to 0).
    LaurentPoly eval_var_one(int var) const;
    /// Substitute every u_i = v: rank-1 result with exponent sums.
    LaurentPoly diagonal() const;
    /// Evaluate at u = (1,...,1).
    GaussianRational eval_all_one() const;

    bool has_negative_exponents() const;

    /// Exact division (throws internal_convention_error if not divisible).
    LaurentPoly exact_div(const LaurentPoly& d) const;
    bool divisible_by(const LaurentPoly& d) const;

    /// Largest k with (u_var - 1)^k dividing this (zero poly: 0).
    int order_at_var_one(int var) const;

    /// Canonical rendering against t with half-integer exponents.
    std::string str() const;

    /// Pure-lex-greatest term (leading coefficient used for unit normalization).
    const std::pair<const ExpVec, GaussianRational>& lex_leading() const;

private:
    int rank_;
    TermMap terms_;
};

/// Gcd of two Laurent polynomials, as polynomials after factoring out unit
/// monomials; the result is monomial-free with lex-leading coefficient 1.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// d-th cyclotomic polynomial as a rank-1 polynomial in u (cached).
const LaurentPoly& cyclotomic(int d);

std::string term_str(const GaussianRational& c, const ExpVec& e, const std::string& varname);
std::string join_terms(const std::vector<std::string>& parts);

} // namespace sqec

#endif
