#include "series.hpp"

#include <algorithm>

#include "error.hpp"

namespace sqec {

PowerSeries::PowerSeries(int lo, std::vector<GaussianRational> coeffs)
    : lo_(lo), hi_(lo + (int)coeffs.size() - 1), c_(std::move(coeffs)) {
    if (c_.empty()) fail(errc::internal_convention_error, "empty series window");
}

PowerSeries PowerSeries::constant(const GaussianRational& c, int order) {
    PowerSeries p(order);
    p.c_[0] = c;
    return p;
}

PowerSeries PowerSeries::variable(int order) {
    PowerSeries p(order);
    if (order >= 1) p.c_[1] = GaussianRational(1);
    return p;
}

PowerSeries PowerSeries::exp_linear(const GaussianRational& a, int order) {
    PowerSeries p(order);
    GaussianRational term(1);
    p.c_[0] = term;
    for (int k = 1; k <= order; ++k) {
        term = term * a / GaussianRational(k);
        p.c_[k] = term;
    }
    return p;
}

GaussianRational PowerSeries::coeff(int k) const {
    if (k < lo_) return GaussianRational(0);
    if (k > hi_) fail(errc::internal_convention_error, "series coefficient beyond truncation order");
    return c_[k - lo_];
}

bool PowerSeries::is_zero_window() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<int> PowerSeries::valuation() const {
    for (int k = lo_; k <= hi_; ++k)
        if (!c_[k - lo_].is_zero()) return k;
    return std::nullopt;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    int lo = std::min(a.lo_, b.lo_), hi = std::min(a.hi_, b.hi_);
    if (hi < lo) fail(errc::internal_convention_error, "series windows do not overlap in +");
    std::vector<GaussianRational> c(hi - lo + 1);
    for (int k = lo; k <= hi; ++k) c[k - lo] = a.coeff(k) + b.coeff(k);
    return PowerSeries(lo, std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    int lo = a.lo_ + b.lo_;
    int hi = std::min(a.hi_ + b.lo_, b.hi_ + a.lo_);
    if (hi < lo) fail(errc::internal_convention_error, "series windows do not overlap in *");
    std::vector<GaussianRational> c(hi - lo + 1);
    for (int i = a.lo_; i <= a.hi_; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = b.lo_; j <= b.hi_; ++j) {
            int d = i + j;
            if (d < lo || d > hi) continue;
            c[d - lo] += a.coeff(i) * b.coeff(j);
        }
    }
    return PowerSeries(lo, std::move(c));
}

PowerSeries PowerSeries::scaled(const GaussianRational& k) const {
    PowerSeries r = *this;
    for (auto& x : r.c_) x *= k;
    return r;
}

PowerSeries PowerSeries::inverse() const {
    auto v = valuation();
    if (!v) fail(errc::invalid_ratfunc, "inverse of zero series window");
    int n = hi_ - *v; // number of known terms beyond the valuation, inclusive
    // (sum_{k>=v} c_k s^k)^{-1} = s^{-v} * (unit)^{-1}
    std::vector<GaussianRational> u(n + 1);
    GaussianRational lead = coeff(*v);
    std::vector<GaussianRational> inv(n + 1);
    for (int k = 0; k <= n; ++k) u[k] = coeff(*v + k);
    inv[0] = lead.inverse();
    for (int k = 1; k <= n; ++k) {
        GaussianRational acc(0);
        for (int j = 1; j <= k; ++j) acc += u[j] * inv[k - j];
        inv[k] = -acc / lead;
    }
    return PowerSeries(-*v, std::move(inv));
}

PowerSeries PowerSeries::truncated(int new_hi) const {
    if (new_hi > hi_) fail(errc::internal_convention_error, "cannot extend series window");
    if (new_hi < lo_) fail(errc::internal_convention_error, "empty truncation window");
    std::vector<GaussianRational> c(c_.begin(), c_.begin() + (new_hi - lo_ + 1));
    return PowerSeries(lo_, std::move(c));
}

bool PowerSeries::equal_upto(const PowerSeries& o, int upto) const {
    if (upto > hi_ || upto > o.hi_)
        fail(errc::internal_convention_error, "comparison beyond series truncation");
    for (int k = std::min(lo_, o.lo_); k <= upto; ++k)
        if (coeff(k) != o.coeff(k)) return false;
    return true;
}

std::string PowerSeries::str() const {
    std::vector<std::string> parts;
    for (int k = lo_; k <= hi_; ++k) {
        GaussianRational c = coeff(k);
        if (c.is_zero()) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? "s" : "s^" + std::to_string(k));
        if (mono.empty()) {
            parts.push_back(c.str());
        } else if (c.is_one()) {
            parts.push_back(mono);
        } else if (c == GaussianRational(-1)) {
            parts.push_back("-" + mono);
        } else if (c.re() != 0 && c.im() != 0) {
            parts.push_back("(" + c.str() + ")*" + mono);
        } else {
            parts.push_back(c.str() + "*" + mono);
        }
    }
    return join_terms(parts);
}

PowerSeries series_sqrt_unit(const PowerSeries& p) {
    if (p.lo() > 0 || !p.coeff(0).is_one())
        fail(errc::not_unit_series, "square root requires constant term 1");
    for (int k = p.lo(); k < 0; ++k)
        if (!p.coeff(k).is_zero()) fail(errc::not_unit_series, "square root requires constant term 1");
    int n = p.order();
    std::vector<GaussianRational> q(n + 1);
    q[0] = GaussianRational(1);
    GaussianRational two(2);
    for (int d = 1; d <= n; ++d) {
        GaussianRational acc = p.coeff(d);
        for (int j = 1; j < d; ++j) acc -= q[j] * q[d - j];
        q[d] = acc / two;
    }
    return PowerSeries(0, std::move(q));
}

PowerSeries exp_substitute(const LaurentPoly& p, int order) {
    if (p.rank() != 1) fail(errc::unsupported_rank, "exp substitution is rank-1 only");
    PowerSeries acc = PowerSeries::constant(GaussianRational(0), order);
    for (const auto& [e, c] : p.terms()) {
        GaussianRational a(e[0], 2); // u^e = e^{(e/2) s}
        acc = acc + PowerSeries::exp_linear(a, order).scaled(c);
    }
    return acc;
}

PowerSeries exp_substitute(const RatFunc& f, int order) {
    if (f.rank() != 1) fail(errc::unsupported_rank, "exp substitution is rank-1 only");
    if (f.is_zero()) return PowerSeries::constant(GaussianRational(0), order);
    int vd = f.den().order_at_var_one(0);
    int work = order + 2 * vd;
    PowerSeries num = exp_substitute(f.num(), work);
    PowerSeries den = exp_substitute(f.den(), work);
    PowerSeries r = num * den.inverse();
    return r.truncated(std::min(r.order(), order));
}

PowerSeries chow_expand(const RatFunc& f, int order) {
    if (f.rank() != 1) fail(errc::unsupported_rank, "Chow expansion is rank-1 only");
    if (f.has_half_exponents())
        fail(errc::invalid_ratfunc, "Chow classes carry integer exponents only");
    if (f.is_zero()) return PowerSeries::constant(GaussianRational(0), order);
    if (f.num().min_exponents()[0] / 2 > order)
        return PowerSeries::constant(GaussianRational(0), order); // valuation beyond the window
    auto to_series = [&](const LaurentPoly& p, int hi) {
        int lo = p.is_zero() ? 0 : p.min_exponents()[0] / 2;
        std::vector<GaussianRational> c(hi - lo + 1);
        for (const auto& [e, k] : p.terms()) {
            int d = e[0] / 2;
            if (d <= hi) c[d - lo] += k;
        }
        return PowerSeries(lo, std::move(c));
    };
    int vn = f.num().min_exponents()[0] / 2; // possibly negative
    int slack = std::max(0, -vn);
    PowerSeries num = to_series(f.num(), order + slack);
    PowerSeries den = to_series(f.den(), order + slack);
    PowerSeries r = num * den.inverse();
    return r.truncated(std::min(r.order(), order));
}

} // namespace sqec
