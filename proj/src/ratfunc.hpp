#ifndef SQEC_RATFUNC_HPP
#define SQEC_RATFUNC_HPP

#include <variant>

#include "laurent.hpp"

namespace sqec {

struct PoleReport {
    int order = 0;
    bool operator==(const PoleReport& o) const { return order == o.order; }
};

using LimitResult = std::variant<GaussianRational, PoleReport>;

/// Rational function in the u-variables, kept in canonical form: numerator
/// and denominator coprime, denominator a monomial-free polynomial whose
/// lex-greatest term has coefficient 1; any unit monomial lives in the
/// numerator. Equal fractions compare equal structurally.
class RatFunc {
public:
    explicit RatFunc(int rank) : num_(rank), den_(LaurentPoly::one(rank)) {}
    RatFunc(const LaurentPoly& n) : num_(n), den_(LaurentPoly::one(n.rank())) { normalize(); }
    RatFunc(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) { normalize(); }

    static RatFunc constant(int rank, const GaussianRational& c) {
        return RatFunc(LaurentPoly::constant(rank, c));
    }
    static RatFunc one(int rank) { return RatFunc(LaurentPoly::one(rank)); }

    int rank() const { return num_.rank(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const;
    RatFunc pow(long k) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    bool has_half_exponents() const;

    std::string str() const;

private:
    void normalize();
    LaurentPoly num_, den_;
};

/// Nonequivariant limit u -> 1: cancels common (u_i - 1) factors, then
/// evaluates. A surviving pole is reported with its order along the
/// diagonal u_1 = ... = u_r, not raised as an error.
LimitResult limit_at_identity(const RatFunc& f);

bool limit_exists(const LimitResult& r);

} // namespace sqec

#endif
