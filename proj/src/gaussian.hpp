#ifndef SQEC_GAUSSIAN_HPP
#define SQEC_GAUSSIAN_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace sqec {

/// Exact element of Q(i), stored as two canonical GMP rationals.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(const mpq_class& re) : re_(re), im_(0) { canon(); }
    GaussianRational(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) { canon(); }
    GaussianRational(long num, long den);

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }
    static GaussianRational i_pow(long k);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    GaussianRational inverse() const;
    GaussianRational pow(long k) const;

    /// Canonical square root in Q(i) if one exists (root with re > 0, or
    /// re == 0 and im >= 0).
    std::optional<GaussianRational> sqrt() const;

    /// Canonical rendering: "0", "3/2", "i", "-i", "2*i", "1/2+1/2*i", "1-i", ...
    std::string str() const;

    /// Deterministic total order (re lex im); used for tie-breaking, not math.
    bool less(const GaussianRational& o) const {
        if (re_ != o.re_) return re_ < o.re_;
        return im_ < o.im_;
    }

private:
    void canon() {
        re_.canonicalize();
        im_.canonicalize();
    }
    mpq_class re_, im_;
};

/// Exact square root of a rational if it is a perfect square (arg >= 0).
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

std::string rational_str(const mpq_class& q);

} // namespace sqec

#endif
