// Acceptance suite: one line per criterion, exact checks, wall-clock budgets.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jobio.hpp"
#include "sqec.h"
#include "testkit.hpp"

using namespace sqec;
using nlohmann::json;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        ok = false;
        note = std::string(" [exception: ") + e.what() + "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget_seconds) {
        ok = false;
        note += " [over budget]";
    }
    if (!ok) ++failures;
    std::printf("%s  criterion %d: %s (%.2fs, budget %.0fs)%s\n", ok ? "PASS" : "FAIL", number,
                title.c_str(), secs, budget_seconds, note.c_str());
    std::fflush(stdout);
}

RatFunc tpow(int w) { return RatFunc(LaurentPoly::t_weight(1, {w})); }
RatFunc upow(int e) { return RatFunc(LaurentPoly::u_power(1, 0, e)); }
RatFunc c_(long v) { return RatFunc::constant(1, GaussianRational(v)); }

OrthWeightRep orep1(std::vector<int> pairs_pos, std::vector<int> half, int sign) {
    std::vector<Weight> ws, hs;
    for (int w : pairs_pos) {
        ws.push_back({w});
        ws.push_back({-w});
    }
    for (int h : half) hs.push_back({h});
    return OrthWeightRep(1, ws, hs, sign);
}

bool squaring_identity() {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        testkit::Rng rng(seed);
        int n = (int)(rng.raw() % 7);
        int rank = 1 + (int)(rng.raw() % 4);
        auto rep = testkit::gen_orth_rep(rng, n, rank);
        RatFunc ke = k_sqrt_euler(rep).value;
        RatFunc target = k_euler(rep.full_rep()).value;
        if (n % 2 == 1) target = -target;
        if (ke * ke != target) return false;
        RatFunc ce = sqrt_euler(rep).value;
        RatFunc ctarget = euler(rep.full_rep()).value;
        if (n % 2 == 1) ctarget = -ctarget;
        if (ce * ce != ctarget) return false;
    }
    return true;
}

bool half_choice_independence() {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        testkit::Rng rng(seed);
        int n = (int)(rng.raw() % 6); // 0..5, exhaustive 2^n halves
        int rank = 1 + (int)(rng.raw() % 4);
        auto rep = testkit::gen_orth_rep(rng, n, rank);
        RatFunc k0 = k_sqrt_euler(rep).value;
        RatFunc c0 = sqrt_euler(rep).value;
        for (const auto& [half, parity] : testkit::enumerate_halves(rep)) {
            int sign = parity % 2 == 0 ? rep.sign() : -rep.sign();
            auto alt = rep.with_half(half, sign);
            if (k_sqrt_euler(alt).value != k0) return false;
            if (sqrt_euler(alt).value != c0) return false;
        }
    }
    return true;
}

bool whitney_and_reduction() {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        testkit::Rng rng(seed);
        int rank = 1 + (int)(rng.raw() % 4);
        auto a = testkit::gen_orth_rep(rng, (int)(rng.raw() % 4), rank);
        auto b = testkit::gen_orth_rep(rng, (int)(rng.raw() % 4), rank);
        std::vector<Weight> ws = a.all_weights(), hs = a.positive_half();
        for (const auto& w : b.all_weights()) ws.push_back(w);
        for (const auto& w : b.positive_half()) hs.push_back(w);
        OrthWeightRep sum(rank, ws, hs, a.sign() * b.sign());
        if (sqrt_euler(sum).value != sqrt_euler(a).value * sqrt_euler(b).value) return false;
        if (k_sqrt_euler(sum).value != k_sqrt_euler(a).value * k_sqrt_euler(b).value) return false;

        int n = sum.pairs();
        int k = n == 0 ? 0 : (int)(rng.raw() % (std::uint64_t)(n + 1));
        std::vector<Weight> kws(sum.positive_half().begin(), sum.positive_half().begin() + k);
        auto reduced = sum.reduced_by(kws);
        WeightRep krep(rank, kws);
        if (sqrt_euler(sum).value != sqrt_euler(reduced).value * euler(krep).value) return false;
        if (k_sqrt_euler(sum).value !=
            k_sqrt_euler(reduced).value * k_euler(krep).value * sqrt_det(krep).value)
            return false;
    }
    return true;
}

bool catalan_suite() {
    if (catalan_sqrt_coeff(1) != mpq_class(1, 2)) return false;
    if (catalan_sqrt_coeff(2) != mpq_class(1, 8)) return false;
    auto s2 = sq_poly(2); // 1 - (1-x)/2 - (1-x)^2/8
    if (s2[0] != mpq_class(3, 8) || s2[1] != mpq_class(3, 4) || s2[2] != mpq_class(-1, 8))
        return false;
    for (int k = 1; k <= 12; ++k) {
        if (!sq_xhalf_identity_holds(k)) return false;
        if (!sq_divisibility_holds(k)) return false;
    }
    return true;
}

bool riemann_roch_bridge() {
    // worked case: E^m = {1,-1} gives 2 sinh(s/2) on both pipelines
    FixedComponentDatum d;
    d.name = "worked";
    d.t_moving = WeightRep(1, {});
    d.e_moving = orep1({1}, {1}, 1);
    RRCheck rr = rr_consistency(d, 8);
    if (!rr.equal) return false;
    if (rr.lhs.coeff(1) != GaussianRational(1)) return false;
    if (rr.lhs.coeff(3) != GaussianRational(1, 24)) return false;
    if (rr.lhs.coeff(5) != GaussianRational(1, 1920)) return false;

    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        testkit::Rng rng(seed);
        FixedComponentDatum p;
        p.name = "P";
        int nt = (int)(rng.raw() % 3);
        std::vector<Weight> tm;
        for (int i = 0; i < nt; ++i) {
            int w = 0;
            while (w == 0) w = rng.range(-4, 4);
            tm.push_back({w});
        }
        p.t_moving = WeightRep(1, tm);
        p.e_moving = testkit::gen_orth_rep(rng, (int)(rng.raw() % 3), 1, 4);
        p.fixed_contribution = GaussianRational(rng.flip() ? 1 : -1);
        if (!rr_consistency(p, 8).equal) return false;
    }
    return true;
}

bool dt3_suite() {
    DT3Datum worked{WeightRep(1, {{1}, {1}}), WeightRep(1, {{3}}), GaussianRational(1)};
    auto cw = dt3_check(worked);
    if (!cw.chow_ok || !cw.k_ok) return false;
    if (cw.chow_contribution != c_(3) / tpow(1)) return false;
    if (cw.chow_threefold != c_(3) / tpow(1)) return false;

    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        testkit::Rng rng(seed);
        auto gen = [&]() {
            int n = (int)(rng.raw() % 6);
            std::vector<Weight> ws;
            for (int i = 0; i < n; ++i) {
                int w = 0;
                while (w == 0) w = rng.range(-6, 6);
                ws.push_back({w});
            }
            return WeightRep(1, ws);
        };
        DT3Datum d3{gen(), gen(), GaussianRational(rng.flip() ? 1 : -1)};
        auto c = dt3_check(d3);
        if (!c.chow_ok || !c.k_ok) return false;
    }
    return true;
}

bool sign_conventions() {
    QMat id2 = QMat::identity(2);
    QuadraticSpace c2{id2};
    Orientation o{GaussianRational(1)};
    QMat plus(2, 1), minus(2, 1);
    plus.at(0, 0) = GaussianRational(1);
    plus.at(1, 0) = -GaussianRational::i();
    minus.at(0, 0) = GaussianRational(1);
    minus.at(1, 0) = GaussianRational::i();
    if (isotropic_sign(c2, o, Subspace{plus}) != 1) return false;
    if (isotropic_sign(c2, o, Subspace{minus}) != -1) return false;

    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        testkit::Rng rng(seed);
        int n = 1 + (int)(rng.raw() % 4);
        auto rep = testkit::gen_orth_rep(rng, n, 1 + (int)(rng.raw() % 2));
        auto bridge = testkit::weightrep_to_quadspace(rep);
        if (isotropic_sign(bridge.space, bridge.orientation, bridge.lambda) != rep.sign())
            return false;
        for (const auto& [half, parity] : testkit::enumerate_halves(rep)) {
            Subspace alt = testkit::bridge_half_subspace(rep, half);
            int expect = parity % 2 == 0 ? rep.sign() : -rep.sign();
            if (isotropic_sign(bridge.space, bridge.orientation, alt) != expect) return false;
        }
    }
    return true;
}

bool anderson_relation() {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        testkit::Rng rng(seed);
        int n = (int)(rng.raw() % 6);
        auto rep = testkit::gen_orth_rep(rng, n, 1);
        RatFunc cosh = RatFunc::one(1);
        for (const auto& w : rep.positive_half()) cosh *= (upow(w[0]) + upow(-w[0])) / c_(2);
        if (k_sqrt_euler(rep).value != anderson_epsilon(rep).value / cosh) return false;
    }
    return true;
}

bool end_to_end() {
    // two-point cancellation, exercised through the shared C API
    json job = {
        {"torus_rank", 1},
        {"theory", "chow"},
        {"points", json::array()},
    };
    for (int i = 0; i < 2; ++i) {
        job["points"].push_back(
            json{{"name", i == 0 ? "P1" : "P2"},
                 {"fixed_contribution", i == 0 ? "1" : "-1"},
                 {"t_moving", json::array({json::array({1})})},
                 {"e_moving", json{{"weights", json::array({json::array({2}), json::array({-2})})},
                                   {"positive_half", json::array({json::array({2})})},
                                   {"sign", 1}}}});
    }
    sqec_ctx* ctx = nullptr;
    if (sqec_ctx_new(&ctx) != SQEC_OK) return false;
    char* out = nullptr;
    int rc = sqec_localize(ctx, job.dump().c_str(), &out);
    bool ok = rc == SQEC_OK;
    if (ok) {
        json doc = json::parse(out);
        ok = doc["total"] == "0";
        sqec_string_free(out);
    }
    sqec_ctx_free(ctx);
    if (!ok) return false;

    // permutation invariance is literal equality
    testkit::Rng rng(4242);
    std::vector<FixedComponentDatum> data;
    for (int i = 0; i < 8; ++i) {
        FixedComponentDatum d;
        d.name = "P" + std::to_string(i);
        d.fixed_contribution = GaussianRational(rng.flip() ? 1 : -1);
        int nt = 1 + (int)(rng.raw() % 3);
        std::vector<Weight> tm;
        for (int k = 0; k < nt; ++k) {
            int w = 0;
            while (w == 0) w = rng.range(-6, 6);
            tm.push_back({w});
        }
        d.t_moving = WeightRep(1, tm);
        d.e_moving = testkit::gen_orth_rep(rng, (int)(rng.raw() % 4), 1);
        data.push_back(d);
    }
    RatFunc base = k_invariant(data, 1).total;
    for (int trial = 0; trial < 3; ++trial) {
        for (std::size_t i = data.size(); i > 1; --i) std::swap(data[i - 1], data[rng.raw() % i]);
        if (k_invariant(data, 1).total != base) return false;
    }

    // the worked nonequivariant limit
    RatFunc f(LaurentPoly::t_weight(1, {1}) - LaurentPoly::t_weight(1, {-1}),
              LaurentPoly::u_power(1, 0, 1) - LaurentPoly::u_power(1, 0, -1));
    auto lim = limit_at_identity(f);
    if (!limit_exists(lim) || std::get<GaussianRational>(lim) != GaussianRational(2)) return false;

    // desk-scale run: 1000 fixed points, up to 12 pairs each, rank 1
    std::vector<FixedComponentDatum> big;
    testkit::Rng prng(2024);
    for (int i = 0; i < 1000; ++i) {
        FixedComponentDatum d;
        d.name = "P" + std::to_string(i);
        d.fixed_contribution = GaussianRational(prng.flip() ? 1 : -1);
        int nt = (int)(prng.raw() % 13);
        std::vector<Weight> tm;
        for (int k = 0; k < nt; ++k) {
            int w = 0;
            while (w == 0) w = prng.range(-6, 6);
            tm.push_back({w});
        }
        d.t_moving = WeightRep(1, tm);
        d.e_moving = testkit::gen_orth_rep(prng, (int)(prng.raw() % 13), 1);
        big.push_back(d);
    }
    LocalizationResult kres = k_invariant(big, 1);
    LocalizationResult cres = chow_invariant(big, 1);
    if (kres.per_point.size() != 1000 || cres.per_point.size() != 1000) return false;
    if (kres.total.den().is_zero()) return false;
    return true;
}

} // namespace

int main() {
    criterion(1, "squaring identity, 300 seeded reps, both theories", 5, squaring_identity);
    criterion(2, "half-choice independence, exhaustive halves, 100 seeded reps", 10,
              half_choice_independence);
    criterion(3, "Whitney and reduction identities, 200 seeded instances", 5,
              whitney_and_reduction);
    criterion(4, "Catalan square-root suite, k <= 12", 1, catalan_suite);
    criterion(5, "Riemann-Roch bridge to order 8, 100 seeded rank-1 data", 10,
              riemann_roch_bridge);
    criterion(6, "local CY4 reduction, 500 seeded DT3 data, both theories", 10, dt3_suite);
    criterion(7, "sign conventions and bridge soundness", 10, sign_conventions);
    criterion(8, "Anderson relation, 200 seeded reps", 5, anderson_relation);
    criterion(9, "localization engine end-to-end and desk-scale performance", 30, end_to_end);
    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
