#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "error.hpp"
#include "series.hpp"
#include "testkit.hpp"

using namespace sqec;

namespace {

GaussianRational rand_gauss(testkit::Rng& rng) {
    mpq_class re(rng.range(-20, 20), rng.range(1, 12));
    mpq_class im(rng.range(-20, 20), rng.range(1, 12));
    re.canonicalize();
    im.canonicalize();
    return GaussianRational(re, im);
}

LaurentPoly rand_poly(testkit::Rng& rng, int rank, int nterms, int mag) {
    LaurentPoly p(rank);
    for (int i = 0; i < nterms; ++i) {
        ExpVec e(rank);
        for (int j = 0; j < rank; ++j) e[j] = rng.range(-mag, mag);
        p.add_term(e, rand_gauss(rng));
    }
    return p;
}

RatFunc u_(int e) { return RatFunc(LaurentPoly::u_power(1, 0, e)); }

} // namespace

TEST_CASE("gaussian rational field axioms on random samples") {
    testkit::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        GaussianRational a = rand_gauss(rng), b = rand_gauss(rng), c = rand_gauss(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == GaussianRational(1));
            CHECK((b / a) * a == b);
        }
    }
}

TEST_CASE("gaussian square roots") {
    CHECK(*GaussianRational(-1).sqrt() == GaussianRational::i());
    CHECK(*GaussianRational(4).sqrt() == GaussianRational(2));
    CHECK(!GaussianRational(3).sqrt().has_value());
    CHECK(!GaussianRational(-3).sqrt().has_value());
    // 2i = (1+i)^2
    GaussianRational z(mpq_class(0), mpq_class(2));
    auto r = z.sqrt();
    REQUIRE(r.has_value());
    CHECK(*r * *r == z);
    testkit::Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        GaussianRational w = rand_gauss(rng);
        auto s = (w * w).sqrt();
        REQUIRE(s.has_value());
        CHECK(*s * *s == w * w);
    }
}

TEST_CASE("gaussian rendering") {
    CHECK(GaussianRational(0).str() == "0");
    CHECK(GaussianRational(3, 2).str() == "3/2");
    CHECK(GaussianRational::i().str() == "i");
    CHECK((-GaussianRational::i()).str() == "-i");
    CHECK(GaussianRational(mpq_class(1, 2), mpq_class(1, 2)).str() == "1/2+1/2*i");
    CHECK(GaussianRational(mpq_class(1), mpq_class(-1)).str() == "1-i");
    CHECK(GaussianRational(mpq_class(0), mpq_class(-3)).str() == "-3*i");
}

TEST_CASE("laurent ring axioms on random samples") {
    testkit::Rng rng(21);
    for (int rank = 1; rank <= 3; ++rank) {
        for (int i = 0; i < 60; ++i) {
            LaurentPoly a = rand_poly(rng, rank, 4, 3);
            LaurentPoly b = rand_poly(rng, rank, 4, 3);
            LaurentPoly c = rand_poly(rng, rank, 3, 3);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a - a == LaurentPoly::zero(rank));
            CHECK(a * LaurentPoly::one(rank) == a);
        }
    }
}

TEST_CASE("laurent rendering follows the canonical string contract") {
    LaurentPoly p = LaurentPoly::t_weight(1, {1}) - LaurentPoly::t_weight(1, {-1});
    CHECK(p.str() == "t - t^-1");
    CHECK(LaurentPoly::u_power(1, 0, 3).str() == "t^(3/2)");
    CHECK(LaurentPoly::u_power(1, 0, -1).str() == "t^(-1/2)");
    LaurentPoly q = LaurentPoly::t_weight(2, {2, 1});
    CHECK(q.str() == "t1^2*t2");
    LaurentPoly half = LaurentPoly::u_power(1, 0, 1) + LaurentPoly::u_power(1, 0, -1);
    CHECK(half.str() == "t^(1/2) + t^(-1/2)");
    CHECK((LaurentPoly::one(1).scaled(GaussianRational(3, 2)) * LaurentPoly::t_weight(1, {1})).str() ==
          "3/2*t");
    CHECK(LaurentPoly::zero(2).str() == "0");
}

TEST_CASE("normalize: spec worked examples") {
    // (t - t^-1)/(t^(1/2) - t^(-1/2)) -> t^(1/2) + t^(-1/2)
    RatFunc f(LaurentPoly::t_weight(1, {1}) - LaurentPoly::t_weight(1, {-1}),
              LaurentPoly::u_power(1, 0, 1) - LaurentPoly::u_power(1, 0, -1));
    CHECK(f.is_polynomial());
    CHECK(f.num().str() == "t^(1/2) + t^(-1/2)");

    // 0/(1-t) -> 0/1
    RatFunc z(LaurentPoly::zero(1), LaurentPoly::one(1) - LaurentPoly::t_weight(1, {1}));
    CHECK(z.is_zero());
    CHECK(z.den().is_one());

    // (2t)/2 -> t
    RatFunc g(LaurentPoly::t_weight(1, {1}).scaled(GaussianRational(2)),
              LaurentPoly::constant(1, GaussianRational(2)));
    CHECK(g == RatFunc(LaurentPoly::t_weight(1, {1})));
}

TEST_CASE("normalize is idempotent and multiplicative on random fractions") {
    testkit::Rng rng(31);
    for (int rank = 1; rank <= 2; ++rank) {
        for (int i = 0; i < 40; ++i) {
            LaurentPoly a = rand_poly(rng, rank, 3, 2);
            LaurentPoly b = rand_poly(rng, rank, 2, 2);
            LaurentPoly c = rand_poly(rng, rank, 2, 2);
            if (b.is_zero() || c.is_zero()) continue;
            RatFunc f(a * c, b * c); // non-canonical input, built with a common factor
            RatFunc g(a, b);
            CHECK(f == g); // gcd removal finds the canonical representative
            RatFunc prod = f * g;
            RatFunc prod2(a * a, b * b);
            CHECK(prod == prod2);
        }
    }
}

TEST_CASE("ratfunc zero denominator is rejected") {
    CHECK_THROWS_AS(RatFunc(LaurentPoly::one(1), LaurentPoly::zero(1)), Error);
}

TEST_CASE("limit at identity: spec worked examples") {
    RatFunc f(LaurentPoly::t_weight(1, {1}) - LaurentPoly::t_weight(1, {-1}),
              LaurentPoly::u_power(1, 0, 1) - LaurentPoly::u_power(1, 0, -1));
    auto l1 = limit_at_identity(f);
    REQUIRE(limit_exists(l1));
    CHECK(std::get<GaussianRational>(l1) == GaussianRational(2));

    auto l2 = limit_at_identity(RatFunc(LaurentPoly::t_weight(1, {3})));
    REQUIRE(limit_exists(l2));
    CHECK(std::get<GaussianRational>(l2) == GaussianRational(1));

    RatFunc pole(LaurentPoly::one(1), LaurentPoly::one(1) - LaurentPoly::t_weight(1, {1}));
    auto l3 = limit_at_identity(pole);
    REQUIRE(!limit_exists(l3));
    CHECK(std::get<PoleReport>(l3).order == 1);
}

TEST_CASE("limit is multiplicative when both limits exist") {
    testkit::Rng rng(41);
    int hits = 0;
    for (int i = 0; i < 300; ++i) {
        LaurentPoly a = rand_poly(rng, 1, 3, 3);
        LaurentPoly b = rand_poly(rng, 1, 2, 3);
        LaurentPoly c = rand_poly(rng, 1, 3, 3);
        LaurentPoly d = rand_poly(rng, 1, 2, 3);
        if (b.is_zero() || d.is_zero()) continue;
        RatFunc f(a, b), g(c, d);
        auto lf = limit_at_identity(f), lg = limit_at_identity(g);
        if (!limit_exists(lf) || !limit_exists(lg)) continue;
        auto lfg = limit_at_identity(f * g);
        REQUIRE(limit_exists(lfg));
        CHECK(std::get<GaussianRational>(lfg) ==
              std::get<GaussianRational>(lf) * std::get<GaussianRational>(lg));
        ++hits;
    }
    CHECK(hits > 50);
}

TEST_CASE("exp substitution: spec worked examples") {
    // t^(1/2) - t^(-1/2) = 2 sinh(s/2) = s + s^3/24
    LaurentPoly sinh2 = LaurentPoly::u_power(1, 0, 1) - LaurentPoly::u_power(1, 0, -1);
    PowerSeries s1 = exp_substitute(sinh2, 3);
    CHECK(s1.coeff(0) == GaussianRational(0));
    CHECK(s1.coeff(1) == GaussianRational(1));
    CHECK(s1.coeff(2) == GaussianRational(0));
    CHECK(s1.coeff(3) == GaussianRational(1, 24));

    PowerSeries s2 = exp_substitute(LaurentPoly::one(1), 5);
    CHECK(s2.coeff(0) == GaussianRational(1));
    for (int k = 1; k <= 5; ++k) CHECK(s2.coeff(k) == GaussianRational(0));

    // 1/(1 - t^-1) -> s^-1 + 1/2 + s/12
    RatFunc f(LaurentPoly::one(1),
              LaurentPoly::one(1) - LaurentPoly::t_weight(1, {-1}));
    PowerSeries s3 = exp_substitute(f, 2);
    CHECK(s3.lo() == -1);
    CHECK(s3.coeff(-1) == GaussianRational(1));
    CHECK(s3.coeff(0) == GaussianRational(1, 2));
    CHECK(s3.coeff(1) == GaussianRational(1, 12));
    CHECK(s3.coeff(2) == GaussianRational(0));
    CHECK(s3.str() == "s^-1 + 1/2 + 1/12*s");
}

TEST_CASE("exp substitution is a ring homomorphism on polynomials") {
    testkit::Rng rng(51);
    for (int i = 0; i < 60; ++i) {
        LaurentPoly a = rand_poly(rng, 1, 3, 4);
        LaurentPoly b = rand_poly(rng, 1, 3, 4);
        int K = 6;
        PowerSeries sa = exp_substitute(a, K), sb = exp_substitute(b, K);
        CHECK(exp_substitute(a + b, K).equal_upto(sa + sb, K));
        CHECK(exp_substitute(a * b, K).equal_upto((sa * sb).truncated(K), K));
    }
}

TEST_CASE("exp substitution rejects rank > 1") {
    CHECK_THROWS_AS(exp_substitute(LaurentPoly::one(2), 3), Error);
}

TEST_CASE("series square root: spec worked examples") {
    // 1 - s to order 3
    PowerSeries p(0, {GaussianRational(1), GaussianRational(-1), GaussianRational(0),
                      GaussianRational(0)});
    PowerSeries q = series_sqrt_unit(p);
    CHECK(q.coeff(0) == GaussianRational(1));
    CHECK(q.coeff(1) == GaussianRational(-1, 2));
    CHECK(q.coeff(2) == GaussianRational(-1, 8));
    CHECK(q.coeff(3) == GaussianRational(-1, 16));

    PowerSeries one = PowerSeries::constant(GaussianRational(1), 4);
    CHECK(series_sqrt_unit(one).equal_upto(one, 4));

    // (1+s)^2 -> 1+s
    PowerSeries sq(0, {GaussianRational(1), GaussianRational(2), GaussianRational(1),
                       GaussianRational(0)});
    PowerSeries r = series_sqrt_unit(sq);
    CHECK(r.coeff(0) == GaussianRational(1));
    CHECK(r.coeff(1) == GaussianRational(1));
    CHECK(r.coeff(2) == GaussianRational(0));
    CHECK(r.coeff(3) == GaussianRational(0));
}

TEST_CASE("series square root squares back, 200 random unit series") {
    testkit::Rng rng(61);
    for (int i = 0; i < 200; ++i) {
        int K = 1 + (int)(rng.raw() % 12);
        std::vector<GaussianRational> c(K + 1);
        c[0] = GaussianRational(1);
        for (int k = 1; k <= K; ++k) c[k] = rand_gauss(rng);
        PowerSeries p(0, c);
        PowerSeries q = series_sqrt_unit(p);
        CHECK((q * q).truncated(K).equal_upto(p, K));
    }
}

TEST_CASE("series square root requires constant term 1") {
    PowerSeries p(0, {GaussianRational(2), GaussianRational(1)});
    CHECK_THROWS_AS(series_sqrt_unit(p), Error);
}

TEST_CASE("evaluation homomorphism oracle for field arithmetic") {
    // substituting a random point turns every identity into Q(i) arithmetic,
    // independently of the gcd/normalization path
    testkit::Rng rng(71);
    auto eval = [](const LaurentPoly& p, const std::vector<GaussianRational>& at) {
        GaussianRational acc(0);
        for (const auto& [e, c] : p.terms()) {
            GaussianRational m = c;
            for (std::size_t i = 0; i < at.size(); ++i) m *= at[i].pow(e[i]);
            acc += m;
        }
        return acc;
    };
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int rank = 1 + (int)(rng.raw() % 2);
        LaurentPoly a = rand_poly(rng, rank, 4, 3), b = rand_poly(rng, rank, 3, 3);
        LaurentPoly c = rand_poly(rng, rank, 3, 3), d = rand_poly(rng, rank, 2, 3);
        if (b.is_zero() || d.is_zero()) continue;
        RatFunc f(a, b), g(c, d);
        std::vector<GaussianRational> at;
        for (int i = 0; i < rank; ++i)
            at.push_back(GaussianRational(mpq_class(rng.range(1, 9), rng.range(1, 7)),
                                          mpq_class(rng.range(0, 5), rng.range(1, 7))));
        auto value = [&](const RatFunc& x) {
            GaussianRational den = eval(x.den(), at);
            REQUIRE(!den.is_zero());
            return eval(x.num(), at) / den;
        };
        GaussianRational fb = eval(b, at), fd = eval(d, at);
        if (fb.is_zero() || fd.is_zero()) continue;
        CHECK(value(f + g) == value(f) + value(g));
        CHECK(value(f * g) == value(f) * value(g));
        if (!g.is_zero() && !eval(c, at).is_zero())
            CHECK(value(f / g) == value(f) / value(g));
        ++checked;
    }
    CHECK(checked > 60);
}

TEST_CASE("chow expansion of integer-exponent rational functions") {
    // 1/t -> s^-1
    RatFunc f = RatFunc::one(1) / RatFunc(LaurentPoly::t_weight(1, {1}));
    PowerSeries s = chow_expand(f, 2);
    CHECK(s.coeff(-1) == GaussianRational(1));
    CHECK(s.coeff(0) == GaussianRational(0));
    // t^2/(1+t): series 0 + 0 s + s^2 - s^3 + ...
    RatFunc g(LaurentPoly::t_weight(1, {2}), LaurentPoly::one(1) + LaurentPoly::t_weight(1, {1}));
    PowerSeries sg = chow_expand(g, 3);
    CHECK(sg.coeff(0) == GaussianRational(0));
    CHECK(sg.coeff(1) == GaussianRational(0));
    CHECK(sg.coeff(2) == GaussianRational(1));
    CHECK(sg.coeff(3) == GaussianRational(-1));
    CHECK_THROWS_AS(chow_expand(u_(1), 3), Error); // half-integer exponent
}
