#include "classcalc.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"

namespace sqec {

bool weight_is_zero(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

Weight weight_negated(const Weight& w) {
    Weight r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r[i] = -w[i];
    return r;
}

bool weight_lex_positive(const Weight& w) {
    for (int x : w) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;
}

WeightRep::WeightRep(int r, std::vector<Weight> ws) : rank(r), weights(std::move(ws)) {
    for (const auto& w : weights)
        if ((int)w.size() != rank) fail(errc::shape_error, "weight vector length != torus rank");
}

bool WeightRep::has_zero_weight() const {
    return std::any_of(weights.begin(), weights.end(), weight_is_zero);
}

WeightRep WeightRep::dual() const {
    std::vector<Weight> ws;
    ws.reserve(weights.size());
    for (const auto& w : weights) ws.push_back(weight_negated(w));
    return WeightRep(rank, ws);
}

Weight WeightRep::weight_sum() const {
    Weight s(rank, 0);
    for (const auto& w : weights)
        for (int i = 0; i < rank; ++i) s[i] += w[i];
    return s;
}

namespace {

std::map<Weight, int> multiset_of(const std::vector<Weight>& ws) {
    std::map<Weight, int> m;
    for (const auto& w : ws) ++m[w];
    return m;
}

} // namespace

OrthWeightRep::OrthWeightRep(int rank, std::vector<Weight> weights,
                             std::optional<std::vector<Weight>> half, int sign)
    : rank_(rank), weights_(std::move(weights)), sign_(sign) {
    if (sign_ != 1 && sign_ != -1) fail(errc::bad_half_selection, "sign must be +1 or -1");
    for (const auto& w : weights_)
        if ((int)w.size() != rank_) fail(errc::shape_error, "weight vector length != torus rank");
    if (weights_.size() % 2 != 0)
        fail(errc::odd_rank_unsupported, "orthogonal weight multiset has odd rank");
    for (const auto& w : weights_)
        if (weight_is_zero(w)) fail(errc::zero_weight, "zero weight in orthogonal representation");
    auto mult = multiset_of(weights_);
    for (const auto& [w, m] : mult) {
        auto it = mult.find(weight_negated(w));
        if (it == mult.end() || it->second != m)
            fail(errc::not_negation_closed, "weight multiset is not closed under negation");
    }
    if (half) {
        half_ = std::move(*half);
    } else {
        // default: the lexicographically-positive member of every pair
        for (const auto& [w, m] : mult)
            if (weight_lex_positive(w)) half_.insert(half_.end(), m, w);
    }
    for (const auto& w : half_)
        if ((int)w.size() != rank_) fail(errc::shape_error, "half weight length != torus rank");
    if (half_.size() * 2 != weights_.size())
        fail(errc::bad_half_selection, "positive half must pick one weight per pair");
    auto hm = multiset_of(half_);
    for (const auto& [w, m] : hm) {
        auto it = mult.find(w);
        if (it == mult.end() || m > it->second)
            fail(errc::bad_half_selection, "half selects a weight not present often enough");
    }
    // per pair class {w,-w} with multiplicity m each, exactly m picks
    for (const auto& [w, m] : mult) {
        if (!weight_lex_positive(w)) continue;
        int picked = 0;
        if (auto it = hm.find(w); it != hm.end()) picked += it->second;
        if (auto it = hm.find(weight_negated(w)); it != hm.end()) picked += it->second;
        if (picked != m)
            fail(errc::bad_half_selection, "half must select one weight from each pair");
    }
}

OrthWeightRep OrthWeightRep::with_half(std::vector<Weight> half, int sign) const {
    return OrthWeightRep(rank_, weights_, std::move(half), sign);
}

int OrthWeightRep::flip_distance(const std::vector<Weight>& a, const std::vector<Weight>& b) {
    auto ma = multiset_of(a);
    auto mb = multiset_of(b);
    int d = 0;
    for (const auto& [w, m] : ma) {
        int n = 0;
        if (auto it = mb.find(w); it != mb.end()) n = it->second;
        d += std::max(0, m - n);
    }
    return d;
}

OrthWeightRep OrthWeightRep::reduced_by(const std::vector<Weight>& k) const {
    std::vector<Weight> half = half_, weights = weights_;
    for (const auto& w : k) {
        auto h = std::find(half.begin(), half.end(), w);
        if (h == half.end()) fail(errc::bad_half_selection, "reduction weight not in positive half");
        half.erase(h);
        auto a = std::find(weights.begin(), weights.end(), w);
        if (a == weights.end()) fail(errc::internal_convention_error, "pair bookkeeping broken");
        weights.erase(a);
        auto b = std::find(weights.begin(), weights.end(), weight_negated(w));
        if (b == weights.end()) fail(errc::internal_convention_error, "pair bookkeeping broken");
        weights.erase(b);
    }
    return OrthWeightRep(rank_, weights, half, sign_);
}

namespace {

// <w,t> as a Chow class: sum_i w_i t_i, stored with doubled u-exponents
LaurentPoly chow_linear_form(int rank, const Weight& w) {
    LaurentPoly p(rank);
    for (int i = 0; i < rank; ++i) {
        if (w[i] == 0) continue;
        ExpVec e(rank, 0);
        e[i] = 2;
        p.add_term(e, GaussianRational(w[i]));
    }
    return p;
}

LaurentPoly one_minus_t_minus_w(int rank, const Weight& w) {
    return LaurentPoly::one(rank) - LaurentPoly::t_weight(rank, weight_negated(w));
}

} // namespace

ChowClass euler(const WeightRep& rep) {
    LaurentPoly p = LaurentPoly::one(rep.rank);
    for (const auto& w : rep.weights) p *= chow_linear_form(rep.rank, w);
    return {RatFunc(p)};
}

ChowClass sqrt_euler(const OrthWeightRep& rep) {
    LaurentPoly p = LaurentPoly::constant(rep.rank(), GaussianRational(rep.sign()));
    for (const auto& w : rep.positive_half()) p *= chow_linear_form(rep.rank(), w);
    return {RatFunc(p)};
}

KClass k_euler(const WeightRep& rep) {
    LaurentPoly p = LaurentPoly::one(rep.rank);
    for (const auto& w : rep.weights) p *= one_minus_t_minus_w(rep.rank, w);
    return {RatFunc(p)};
}

KClass sqrt_det(const WeightRep& rep) {
    Weight s = rep.weight_sum();
    ExpVec e(rep.rank);
    for (int i = 0; i < rep.rank; ++i) e[i] = s[i]; // u^{sum w} = t^{(sum w)/2}
    return {RatFunc(LaurentPoly::monomial(rep.rank, e, GaussianRational(1)))};
}

KClass k_sqrt_euler(const OrthWeightRep& rep) {
    LaurentPoly p = LaurentPoly::constant(rep.rank(), GaussianRational(rep.sign()));
    for (const auto& w : rep.positive_half()) p *= one_minus_t_minus_w(rep.rank(), w);
    WeightRep half = rep.half_rep();
    return {RatFunc(p) * sqrt_det(half).value};
}

KClass k_chern_poly(const WeightRep& rep, const GaussianRational& x) {
    LaurentPoly p = LaurentPoly::one(rep.rank);
    for (const auto& w : rep.weights) {
        LaurentPoly f = LaurentPoly::one(rep.rank) + one_minus_t_minus_w(rep.rank, w).scaled(x);
        p *= f;
    }
    return {RatFunc(p)};
}

KClass anderson_epsilon(const OrthWeightRep& rep) {
    WeightRep half = rep.half_rep();
    KClass c = k_chern_poly(half.dual(), GaussianRational(-1, 2));
    KClass e = k_euler(half);
    RatFunc v = c.value * e.value;
    if (rep.sign() < 0) v = -v;
    return {v};
}

mpq_class catalan_sqrt_coeff(int i) {
    if (i < 1) fail(errc::shape_error, "Catalan coefficient index must be >= 1");
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), 2 * (i - 1), i - 1);
    mpz_class catalan = binom / (i); // C_{i-1} = binom(2i-2, i-1)/i
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * i - 1); // 2^{2i-1}
    mpq_class a(catalan, den);
    a.canonicalize();
    return a;
}

namespace {

// (1-x)^i = sum_j binom(i,j) (-x)^j, dense coefficients
std::vector<mpq_class> one_minus_x_pow(int i) {
    std::vector<mpq_class> c(i + 1);
    mpz_class b;
    for (int j = 0; j <= i; ++j) {
        mpz_bin_uiui(b.get_mpz_t(), i, j);
        c[j] = mpq_class(b) * ((j % 2 == 0) ? 1 : -1);
    }
    return c;
}

std::vector<mpq_class> poly_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    std::vector<mpq_class> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

} // namespace

std::vector<mpq_class> sq_poly(int k) {
    if (k < 1) fail(errc::shape_error, "Sq_k requires k >= 1");
    std::vector<mpq_class> out(k + 1);
    out[0] = 1;
    for (int i = 1; i <= k; ++i) {
        mpq_class ai = catalan_sqrt_coeff(i);
        std::vector<mpq_class> p = one_minus_x_pow(i);
        for (int j = 0; j <= i; ++j) out[j] -= ai * p[j];
    }
    return out;
}

bool sq_xhalf_identity_holds(int k) {
    // T_k(x) = 1 - sum_{i<=k} a_i x^i; T_k^2 - (1-x) - 2 a_{k+1} x^{k+1} = O(x^{k+2})
    std::vector<mpq_class> t(k + 1);
    t[0] = 1;
    for (int i = 1; i <= k; ++i) t[i] = -catalan_sqrt_coeff(i);
    std::vector<mpq_class> sq = poly_mul(t, t);
    sq[0] -= 1;
    sq[1] += 1;
    sq[k + 1] -= 2 * catalan_sqrt_coeff(k + 1);
    for (int j = 0; j <= k + 1; ++j)
        if (sq[j] != 0) return false;
    return true;
}

bool sq_divisibility_holds(int k) {
    // Sq_k(v^2) - v divisible by (1-v)^{k+1}
    std::vector<mpq_class> s = sq_poly(k);
    std::vector<mpq_class> p(2 * k + 1);
    for (int j = 0; j <= k; ++j) p[2 * j] = s[j];
    p[1] -= 1;
    for (int round = 0; round <= k; ++round) {
        mpq_class val = 0;
        for (const auto& c : p) val += c;
        if (val != 0) return false; // (1-v) does not divide
        // p = (1-v) q gives p_j = q_j - q_{j-1}, so q_j = p_j + q_{j-1}
        int d = (int)p.size() - 1;
        if (d == 0) {
            p = {mpq_class(0)};
            continue;
        }
        std::vector<mpq_class> q(d);
        q[0] = p[0];
        for (int j = 1; j < d; ++j) q[j] = p[j] + q[j - 1];
        p = std::move(q);
    }
    return true;
}

PowerSeries nilpotent_sqrt(const PowerSeries& p) {
    if (p.lo() > 0 || !p.coeff(0).is_one())
        fail(errc::not_unipotent, "element is not of the form 1 + nilpotent");
    for (int k = p.lo(); k < 0; ++k)
        if (!p.coeff(k).is_zero()) fail(errc::not_unipotent, "element is not of the form 1 + nilpotent");
    int n = p.order();
    PowerSeries m = PowerSeries::constant(GaussianRational(1), n) - p; // 1 - E, valuation >= 1
    PowerSeries acc = PowerSeries::constant(GaussianRational(1), n);
    PowerSeries pw = m;
    for (int i = 1; i <= n; ++i) {
        mpq_class ai = catalan_sqrt_coeff(i);
        acc = acc - pw.scaled(GaussianRational(ai));
        if (i < n) pw = (pw * m).truncated(n);
    }
    return acc;
}

PowerSeries todd_series(const WeightRep& rep, int order) {
    if (rep.rank != 1) fail(errc::unsupported_rank, "Todd series is rank-1 only");
    int work = order + (int)rep.weights.size() + 2;
    PowerSeries acc = PowerSeries::constant(GaussianRational(1), work);
    for (const auto& w : rep.weights) {
        int wv = w[0];
        if (wv == 0) continue; // trivial summand contributes td = 1
        // td_w = (w s) / (1 - e^{-w s})
        PowerSeries den = PowerSeries::constant(GaussianRational(1), work) -
                          PowerSeries::exp_linear(GaussianRational(-wv), work);
        std::vector<GaussianRational> nc(work);
        nc[0] = GaussianRational(wv);
        PowerSeries num(1, std::move(nc)); // (w s), tracked on degrees 1..work
        acc = acc * (num * den.inverse());
    }
    return acc.truncated(std::min(acc.order(), order));
}

PowerSeries sqrt_todd_series(const WeightRep& rep, int order) {
    return series_sqrt_unit(todd_series(rep, order));
}

PowerSeries todd_series_virtual(const WeightRep& pos, const WeightRep& neg, int order) {
    int work = order + 2;
    PowerSeries p = todd_series(pos, work);
    PowerSeries n = todd_series(neg, work);
    return (p * n.inverse()).truncated(order);
}

PowerSeries ch_series(const KClass& kc, int order) { return exp_substitute(kc.value, order); }

} // namespace sqec
