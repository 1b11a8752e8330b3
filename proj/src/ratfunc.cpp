#include "ratfunc.hpp"

#include "error.hpp"

namespace sqec {

void RatFunc::normalize() {
    if (num_.rank() != den_.rank()) fail(errc::shape_error, "rank mismatch in rational function");
    if (den_.is_zero()) fail(errc::invalid_ratfunc, "zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly::one(rank());
        return;
    }
    // factor each side as (unit monomial) * (polynomial with min exponent 0)
    ExpVec sn = num_.min_exponents(), sd = den_.min_exponents();
    ExpVec neg_sn(sn.size()), neg_sd(sd.size());
    for (std::size_t i = 0; i < sn.size(); ++i) {
        neg_sn[i] = -sn[i];
        neg_sd[i] = -sd[i];
    }
    LaurentPoly n = num_.shifted(neg_sn), d = den_.shifted(neg_sd);
    LaurentPoly g = laurent_gcd(n, d);
    if (!g.is_one()) {
        n = n.exact_div(g);
        d = d.exact_div(g);
    }
    // the unit monomial goes to the numerator
    n = n.shifted(expvec_sub(sn, sd));
    GaussianRational lc = d.lex_leading().second;
    if (!lc.is_one()) {
        GaussianRational inv = lc.inverse();
        n = n.scaled(inv);
        d = d.scaled(inv);
    }
    num_ = n;
    den_ = d;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // work over the lcm so shared denominator factors are not reintroduced
    LaurentPoly g = laurent_gcd(a.den_, b.den_);
    if (g.is_one()) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    LaurentPoly db = b.den_.exact_div(g);
    LaurentPoly da = a.den_.exact_div(g);
    return RatFunc(a.num_ * db + b.num_ * da, a.den_ * db);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) fail(errc::invalid_ratfunc, "division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const { return one(rank()) / *this; }

RatFunc RatFunc::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    RatFunc acc = one(rank()), base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

bool RatFunc::has_half_exponents() const {
    auto odd = [](const LaurentPoly& p) {
        for (const auto& [e, c] : p.terms())
            for (int x : e)
                if (x % 2 != 0) return true;
        return false;
    };
    return odd(num_) || odd(den_);
}

namespace {

bool needs_parens(const LaurentPoly& p, const std::string& s) {
    return p.term_count() > 1 || s.find('*') != std::string::npos || (!s.empty() && s[0] == '-');
}

} // namespace

std::string RatFunc::str() const {
    std::string ns = num_.str();
    if (den_.is_one()) return ns;
    std::string ds = den_.str();
    if (needs_parens(num_, ns)) ns = "(" + ns + ")";
    if (needs_parens(den_, ds)) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

LimitResult limit_at_identity(const RatFunc& f) {
    LaurentPoly n = f.num(), d = f.den();
    int rank = f.rank();
    for (int v = 0; v < rank; ++v) {
        int on = n.is_zero() ? 0 : n.order_at_var_one(v);
        int od = d.order_at_var_one(v);
        int k = std::min(on, od);
        if (k > 0) {
            LaurentPoly lin = LaurentPoly::u_power(rank, v, 1) - LaurentPoly::one(rank);
            for (int i = 0; i < k; ++i) {
                n = n.exact_div(lin);
                d = d.exact_div(lin);
            }
        }
    }
    GaussianRational dv = d.eval_all_one();
    if (!dv.is_zero()) return n.eval_all_one() / dv;
    // surviving pole: measure orders along the diagonal u_i = v
    LaurentPoly nd = n.diagonal(), dd = d.diagonal();
    if (dd.is_zero()) return PoleReport{0}; // denominator vanishes identically on the diagonal
    int od = dd.order_at_var_one(0);
    int on = nd.is_zero() ? od : nd.order_at_var_one(0);
    return PoleReport{od - on};
}

bool limit_exists(const LimitResult& r) { return std::holds_alternative<GaussianRational>(r); }

} // namespace sqec
