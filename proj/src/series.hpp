#ifndef SQEC_SERIES_HPP
#define SQEC_SERIES_HPP

#include "ratfunc.hpp"

namespace sqec {

/// Truncated series in one formal variable s with Q(i) coefficients.
/// Coefficients are tracked for degrees lo..hi; everything below lo is
/// exactly zero and everything above hi is unknown. A finite pole order
/// (lo < 0) is allowed so K-theoretic fixed-point factors are representable.
class PowerSeries {
public:
    explicit PowerSeries(int order) : lo_(0), hi_(order), c_(order + 1) {}
    PowerSeries(int lo, std::vector<GaussianRational> coeffs);

    static PowerSeries constant(const GaussianRational& c, int order);
    static PowerSeries variable(int order); // s
    /// e^{a s} to the given order, exact factorial coefficients.
    static PowerSeries exp_linear(const GaussianRational& a, int order);

    int lo() const { return lo_; }
    int order() const { return hi_; }

    /// Coefficient of s^k; exact zero below lo, error above the order.
    GaussianRational coeff(int k) const;

    bool is_zero_window() const;
    /// Smallest degree with a nonzero tracked coefficient, or nullopt.
    std::optional<int> valuation() const;

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    PowerSeries scaled(const GaussianRational& c) const;

    /// Multiplicative inverse; the input must have a nonzero valuation
    /// coefficient inside the window.
    PowerSeries inverse() const;

    PowerSeries truncated(int new_hi) const;

    bool equal_upto(const PowerSeries& o, int upto) const;

    std::string str() const;

    int window_size() const { return hi_ - lo_ + 1; }

private:
    int lo_, hi_;
    std::vector<GaussianRational> c_; // degrees lo_..hi_
};

/// Unique square root with constant term 1 of a series with constant term 1.
PowerSeries series_sqrt_unit(const PowerSeries& p);

/// Substitute t = e^s (u = e^{s/2}); rank-1 inputs only. Rational functions
/// may acquire a finite pole at s = 0, carried explicitly in the window.
PowerSeries exp_substitute(const LaurentPoly& p, int order);
PowerSeries exp_substitute(const RatFunc& f, int order);

/// Interpret a rank-1 integer-exponent rational function as a function of
/// the Chow variable and expand it as a Laurent series in s (t -> s).
PowerSeries chow_expand(const RatFunc& f, int order);

} // namespace sqec

#endif
