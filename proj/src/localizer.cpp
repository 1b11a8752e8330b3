#include "localizer.hpp"

#include <algorithm>

#include "error.hpp"

namespace sqec {

std::vector<std::string> validate_datum(const FixedComponentDatum& d, int torus_rank) {
    std::vector<std::string> errs;
    if (d.t_moving.rank != torus_rank)
        errs.push_back(d.name + ": t_moving rank != torus rank");
    if (d.e_moving.rank() != torus_rank)
        errs.push_back(d.name + ": e_moving rank != torus rank");
    if (d.t_moving.has_zero_weight())
        errs.push_back(d.name + ": ZeroMovingWeight in t_moving");
    // e_moving is negation-closed, zero-free and of even rank by construction
    if (d.insertion && d.insertion->rank() != torus_rank)
        errs.push_back(d.name + ": insertion rank != torus rank");
    if (d.insertion && d.insertion->has_half_exponents())
        errs.push_back(d.name + ": insertion must have integer exponents");
    if (d.fixed_k_contribution && d.fixed_k_contribution->rank() != torus_rank)
        errs.push_back(d.name + ": fixed_k_contribution rank != torus rank");
    return errs;
}

static void require_valid(const std::vector<FixedComponentDatum>& data, int torus_rank) {
    std::vector<std::string> all;
    for (const auto& d : data) {
        auto e = validate_datum(d, torus_rank);
        all.insert(all.end(), e.begin(), e.end());
    }
    if (!all.empty()) {
        std::string msg;
        for (const auto& e : all) msg += (msg.empty() ? "" : "; ") + e;
        fail(errc::zero_weight, msg);
    }
}

ChowClass sqrt_euler_normal(const FixedComponentDatum& d) {
    return {euler(d.t_moving).value / sqrt_euler(d.e_moving).value};
}

KClass k_sqrt_euler_normal(const FixedComponentDatum& d) {
    RatFunc num = k_euler(d.t_moving).value * sqrt_det(d.t_moving).value;
    return {num / k_sqrt_euler(d.e_moving).value};
}

namespace {

// Rank-1 sums carry denominators in cyclotomic-factored form: the factors
// recur across fixed points (they all come from torus weights), so keeping
// exponent maps avoids every intermediate gcd; one normalization happens at
// the end. Denominators with a non-cyclotomic residue fall back to the
// generic pairwise route.
struct FactoredFrac {
    LaurentPoly num{1};
    std::map<int, int> cyc; // d -> exponent of Phi_d
};

std::optional<FactoredFrac> factor_denominator(const RatFunc& f) {
    FactoredFrac out;
    out.num = f.num();
    LaurentPoly den = f.den();
    int deg = den.is_zero() ? 0 : den.max_exponents()[0];
    // phi(d) can be far below d, so the index cap must exceed the degree
    int cap = std::min(6 * deg + 6, 512);
    for (int d = 1; d <= cap && !den.is_constant(); ++d) {
        const LaurentPoly& phi = cyclotomic(d);
        if (phi.max_exponents()[0] > den.max_exponents()[0]) continue;
        while (den.divisible_by(phi)) {
            den = den.exact_div(phi);
            ++out.cyc[d];
        }
    }
    if (!den.is_constant()) return std::nullopt;
    GaussianRational c = den.constant_term();
    if (!c.is_one()) out.num = out.num.scaled(c.inverse());
    return out;
}

FactoredFrac combine(const FactoredFrac& a, const FactoredFrac& b) {
    FactoredFrac out;
    LaurentPoly mul_a = LaurentPoly::one(1), mul_b = LaurentPoly::one(1);
    for (const auto& [d, ea] : a.cyc) out.cyc[d] = ea;
    for (const auto& [d, eb] : b.cyc) {
        auto it = out.cyc.find(d);
        if (it == out.cyc.end() || it->second < eb) out.cyc[d] = eb;
    }
    for (const auto& [d, e] : out.cyc) {
        int ea = 0, eb = 0;
        if (auto it = a.cyc.find(d); it != a.cyc.end()) ea = it->second;
        if (auto it = b.cyc.find(d); it != b.cyc.end()) eb = it->second;
        for (int k = ea; k < e; ++k) mul_a *= cyclotomic(d);
        for (int k = eb; k < e; ++k) mul_b *= cyclotomic(d);
    }
    out.num = a.num * mul_a + b.num * mul_b;
    return out;
}

RatFunc generic_balanced_sum(std::vector<RatFunc> cur, int rank) {
    if (cur.empty()) return RatFunc(rank);
    while (cur.size() > 1) {
        std::vector<RatFunc> next;
        next.reserve((cur.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < cur.size(); i += 2) next.push_back(cur[i] + cur[i + 1]);
        if (cur.size() % 2 == 1) next.push_back(cur.back());
        cur = std::move(next);
    }
    return cur[0];
}

RatFunc balanced_sum(const std::vector<RatFunc>& xs, int rank) {
    if (xs.empty()) return RatFunc(rank);
    if (rank == 1) {
        std::vector<FactoredFrac> cur;
        cur.reserve(xs.size());
        for (const auto& f : xs) {
            auto ff = factor_denominator(f);
            if (!ff) return generic_balanced_sum(xs, rank);
            cur.push_back(std::move(*ff));
        }
        while (cur.size() > 1) {
            std::vector<FactoredFrac> next;
            next.reserve((cur.size() + 1) / 2);
            for (std::size_t i = 0; i + 1 < cur.size(); i += 2)
                next.push_back(combine(cur[i], cur[i + 1]));
            if (cur.size() % 2 == 1) next.push_back(cur.back());
            cur = std::move(next);
        }
        LaurentPoly den = LaurentPoly::one(1);
        for (const auto& [d, e] : cur[0].cyc)
            for (int k = 0; k < e; ++k) den *= cyclotomic(d);
        return RatFunc(cur[0].num, den);
    }
    return generic_balanced_sum(xs, rank);
}

} // namespace

LocalizationResult chow_invariant(const std::vector<FixedComponentDatum>& data, int torus_rank) {
    require_valid(data, torus_rank);
    LocalizationResult res;
    res.theory = Theory::chow;
    res.rank = torus_rank;
    std::vector<RatFunc> parts;
    for (const auto& d : data) {
        RatFunc c = RatFunc::constant(torus_rank, d.fixed_contribution);
        if (d.insertion) c *= *d.insertion;
        c /= sqrt_euler_normal(d).value;
        res.per_point.emplace_back(d.name, c);
        parts.push_back(c);
    }
    res.total = balanced_sum(parts, torus_rank);
    return res;
}

LocalizationResult k_invariant(const std::vector<FixedComponentDatum>& data, int torus_rank) {
    require_valid(data, torus_rank);
    LocalizationResult res;
    res.theory = Theory::ktheory;
    res.rank = torus_rank;
    std::vector<RatFunc> parts;
    for (const auto& d : data) {
        RatFunc c = d.k_fixed(torus_rank) / k_sqrt_euler_normal(d).value;
        res.per_point.emplace_back(d.name, c);
        parts.push_back(c);
    }
    res.total = balanced_sum(parts, torus_rank);
    return res;
}

RRCheck rr_consistency(const FixedComponentDatum& d, int order) {
    if (d.t_moving.rank != 1) fail(errc::unsupported_rank, "Riemann-Roch check is rank-1 only");
    auto errs = validate_datum(d, 1);
    if (!errs.empty()) fail(errc::zero_weight, errs.front());

    int work = order + (int)d.t_moving.size() + (int)d.e_moving.all_weights().size() + 2;

    RatFunc k_contrib = d.k_fixed(1) / k_sqrt_euler_normal(d).value;
    PowerSeries lhs = exp_substitute(k_contrib, work);

    // virtual tangent rep at the point: T^m + (T^m)* - E^m
    std::vector<Weight> pos = d.t_moving.weights;
    for (const auto& w : d.t_moving.dual().weights) pos.push_back(w);
    WeightRep pos_rep(1, pos);
    WeightRep neg_rep(1, d.e_moving.all_weights());
    PowerSeries sqrt_td = series_sqrt_unit(todd_series_virtual(pos_rep, neg_rep, work));

    RatFunc chow_contrib =
        RatFunc::constant(1, d.fixed_contribution) / sqrt_euler_normal(d).value;
    PowerSeries rhs = sqrt_td * chow_expand(chow_contrib, work);

    int upto = std::min({order, lhs.order(), rhs.order()});
    return {lhs.truncated(upto), rhs.truncated(upto), lhs.equal_upto(rhs, upto)};
}

FixedComponentDatum dt3_double(const DT3Datum& d3) {
    if (d3.f0_moving.rank != d3.f1_moving.rank)
        fail(errc::shape_error, "f0/f1 rank mismatch");
    if (d3.f0_moving.has_zero_weight() || d3.f1_moving.has_zero_weight())
        fail(errc::zero_weight, "DT3 moving weights must be nonzero");
    int rank = d3.f0_moving.rank;
    std::vector<Weight> e_weights = d3.f1_moving.weights;
    for (const auto& w : d3.f1_moving.weights) e_weights.push_back(weight_negated(w));
    FixedComponentDatum d;
    d.name = "dt3";
    d.fixed_contribution = d3.fixed_contribution;
    d.t_moving = d3.f0_moving;
    d.e_moving = OrthWeightRep(rank, e_weights, d3.f1_moving.weights, 1);
    return d;
}

DT3Check dt3_check(const DT3Datum& d3) {
    FixedComponentDatum doubled = dt3_double(d3);
    int rank = d3.f0_moving.rank;
    GaussianRational fixed = d3.fixed_contribution;

    DT3Check out{RatFunc(rank), RatFunc(rank), RatFunc(rank), RatFunc(rank), false, false};

    out.chow_contribution = RatFunc::constant(rank, fixed) / sqrt_euler_normal(doubled).value;
    out.chow_threefold =
        RatFunc::constant(rank, fixed) * euler(d3.f1_moving).value / euler(d3.f0_moving).value;
    out.chow_ok = out.chow_contribution == out.chow_threefold;

    out.k_contribution = RatFunc::constant(rank, fixed) / k_sqrt_euler_normal(doubled).value;
    // Nekrasov-Okounkov-twisted 3-fold contribution:
    //   e_K(F_1^m)/e_K(F_0^m) * t^{(sum F_1 - sum F_0)/2}
    Weight s1 = d3.f1_moving.weight_sum(), s0 = d3.f0_moving.weight_sum();
    ExpVec e(rank);
    for (int i = 0; i < rank; ++i) e[i] = s1[i] - s0[i];
    RatFunc twist(LaurentPoly::monomial(rank, e, GaussianRational(1)));
    out.k_threefold = RatFunc::constant(rank, fixed) * k_euler(d3.f1_moving).value /
                      k_euler(d3.f0_moving).value * twist;
    out.k_ok = out.k_contribution == out.k_threefold;
    return out;
}

KClass sqrt_star(int weight, const KClass& f) {
    if (f.value.rank() != 1) fail(errc::unsupported_rank, "sqrt_star is rank-1 only");
    RatFunc half(LaurentPoly::u_power(1, 0, weight)); // u^w = t^{w/2}
    return {f.value * half};
}

} // namespace sqec
