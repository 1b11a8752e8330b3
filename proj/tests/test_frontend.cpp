#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "error.hpp"
#include "jobio.hpp"
#include "polyparse.hpp"
#include "testkit.hpp"

using namespace sqec;
using nlohmann::json;

namespace {

json load(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

std::string data_path(const std::string& name) { return std::string(SQEC_DATA_DIR) + "/" + name; }

} // namespace

TEST_CASE("parse worked examples") {
    CHECK(parse_poly("t^2", 1).str() == "t^2");
    CHECK(parse_poly("3/2*t - t^-1", 1).str() == "3/2*t - t^-1");
    LaurentPoly p = parse_poly("t1*t2 + i", 2);
    CHECK(p.str() == "t1*t2 + i");
    CHECK(parse_poly("(1+t)^2", 1) == parse_poly("1 + 2*t + t^2", 1));
    CHECK(parse_poly("-t", 1) == -LaurentPoly::t_weight(1, {1}));
    CHECK(parse_gaussian("1/2+1/2*i") == GaussianRational(mpq_class(1, 2), mpq_class(1, 2)));
    CHECK(parse_gaussian("-i") == -GaussianRational::i());
}

TEST_CASE("parse diagnostics carry positions") {
    try {
        parse_poly("t +* 2", 1);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::parse_error);
        CHECK(std::string(e.what()).find("1:4") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_poly("t3", 2), Error);   // unknown variable for the rank
    CHECK_THROWS_AS(parse_poly("t", 2), Error);    // rank-2 needs t1/t2
    CHECK_THROWS_AS(parse_poly("x", 1), Error);
    CHECK_THROWS_AS(parse_poly("(1+t", 1), Error);
    CHECK_THROWS_AS(parse_poly("(1+t)^-1", 1), Error); // negative power of a non-monomial
    CHECK_THROWS_AS(parse_poly("1/0", 1), Error);
}

TEST_CASE("render/parse round trip on grammar-generated values") {
    testkit::Rng rng(5150);
    for (int rank = 1; rank <= 3; ++rank) {
        for (int trial = 0; trial < 60; ++trial) {
            LaurentPoly p(rank);
            int terms = (int)(rng.raw() % 5);
            for (int i = 0; i < terms; ++i) {
                Weight w(rank);
                for (int j = 0; j < rank; ++j) w[j] = rng.range(-4, 4);
                GaussianRational c(mpq_class(rng.range(-9, 9), rng.range(1, 9)),
                                   mpq_class(rng.range(-9, 9), rng.range(1, 9)));
                p += LaurentPoly::t_weight(rank, w).scaled(c);
            }
            std::string s = p.str();
            if (p.is_zero()) {
                CHECK(s == "0");
                continue;
            }
            LaurentPoly back = parse_poly(s, rank);
            CHECK(back == p);
            CHECK(back.str() == s); // canonical form is stable
        }
    }
}

TEST_CASE("job schema errors") {
    json j = load(data_path("two_point_cancellation.json"));
    CHECK_NOTHROW(job_from_json(j));

    json bad = j;
    bad.erase("theory");
    CHECK_THROWS_AS(job_from_json(bad), Error);

    bad = j;
    bad["theory"] = "cohomology";
    CHECK_THROWS_AS(job_from_json(bad), Error);

    bad = j;
    bad["surprise"] = 1;
    CHECK_THROWS_AS(job_from_json(bad), Error);

    bad = j;
    bad["points"][0]["fixed_contribution"] = "1/0";
    CHECK_THROWS_AS(job_from_json(bad), Error);

    bad = j;
    bad["points"][0]["t_moving"] = json::array({json::array({1, 2})});
    CHECK_THROWS_AS(job_from_json(bad), Error);

    // zero moving weight passes the schema but fails validation
    bad = j;
    bad["points"][0]["t_moving"] = json::array({json::array({0})});
    JobSpec spec = job_from_json(bad);
    try {
        run_job(spec);
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("ZeroMovingWeight") != std::string::npos);
    }
}

TEST_CASE("two-point cancellation dataset totals zero") {
    JobSpec spec = job_from_json(load(data_path("two_point_cancellation.json")));
    json out = run_job(spec);
    CHECK(out["total"] == "0");
    CHECK(out["per_point"][0]["value"] == "2");
    CHECK(out["per_point"][1]["value"] == "-2");
    std::string table = format_table(out);
    CHECK(table.find("total: 0") != std::string::npos);
}

TEST_CASE("insertion dataset evaluates t^2/t") {
    JobSpec spec = job_from_json(load(data_path("insertion_point.json")));
    json out = run_job(spec);
    CHECK(out["total"] == "t");
}

TEST_CASE("k-theory dataset with limit and series") {
    JobSpec spec = job_from_json(load(data_path("k_single_point.json")));
    spec.want_limit = true;
    spec.expand_order = 3;
    json out = run_job(spec);
    CHECK(out["total"] == "t^(1/2) - t^(-1/2)");
    CHECK(out["limit"]["value"] == "0");
    CHECK(out["series"] == "s + 1/24*s^3");

    // a dataset with a genuine pole reports it rather than failing
    json pole = load(data_path("k_single_point.json"));
    pole["points"][0]["t_moving"] = json::array({json::array({1})});
    pole["points"][0]["e_moving"] = json{{"weights", json::array()}};
    pole["limit"] = true;
    JobSpec spec2 = job_from_json(pole);
    json out2 = run_job(spec2);
    REQUIRE(out2["limit"].contains("pole_order"));
    CHECK(out2["limit"]["pole_order"] == 1);
}

TEST_CASE("job with imaginary output is a hard convention error") {
    json j = load(data_path("insertion_point.json"));
    j["points"][0]["fixed_contribution"] = "i";
    JobSpec spec = job_from_json(j);
    try {
        run_job(spec);
        FAIL("expected an internal convention error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::internal_convention_error);
    }
}

TEST_CASE("class_eval goldens") {
    json req{{"op", "k-sqrt-euler"},
             {"rank", 1},
             {"weights", json::array({json::array({2}), json::array({-2})})},
             {"positive_half", json::array({json::array({2})})},
             {"sign", 1}};
    CHECK(class_eval(req)["value"] == "t - t^-1");

    json todd{{"op", "todd"}, {"rank", 1}, {"weights", json::array({json::array({1})})},
              {"order", 2}};
    CHECK(class_eval(todd)["series"] == "1 + 1/2*s + 1/12*s^2");

    json bad = req;
    bad["op"] = "mystery";
    CHECK_THROWS_AS(class_eval(bad), Error);
}

TEST_CASE("quadform_eval flows") {
    json sp = load(data_path("quadform_c2.json"));
    json sign = quadform_eval(json{{"op", "sign"}, {"space", sp}});
    CHECK(sign["sign"] == 1);

    json neg = sp;
    neg["subspace"] = json::array({json::array({"1", "i"})});
    CHECK(quadform_eval(json{{"op", "sign"}, {"space", neg}})["sign"] == -1);

    json nf = quadform_eval(json{{"op", "normal-form"}, {"space", sp}});
    CHECK(nf["e"][0][0] == "1");
    CHECK(nf["e"][0][1] == "-i");
    CHECK(nf["f"][0][0] == "1/2");
    CHECK(nf["f"][0][1] == "1/2*i");

    json val = quadform_eval(json{{"op", "validate"}, {"space", sp}});
    CHECK(val["ok"] == true);
    CHECK(val["orientation_valid"] == true);
    CHECK(val["subspace_isotropic"] == true);

    json red = quadform_eval(json{{"op", "reduce"},
                                  {"space", load(data_path("quadform_double_hyperbolic.json"))}});
    CHECK(red["gram"] == json::array({json::array({"0", "1"}), json::array({"1", "0"})}));
    CHECK(red["orientation"] == "-i");

    json degenerate = sp;
    degenerate["gram"] = json::array({json::array({"1", "0"}), json::array({"1", "0"})});
    CHECK_THROWS_AS(quadform_eval(json{{"op", "sign"}, {"space", degenerate}}), Error);
}

TEST_CASE("dt3_eval and sq_eval") {
    json req{{"rank", 1},
             {"f0", json::array({json::array({1}), json::array({1})})},
             {"f1", json::array({json::array({3})})}};
    json out = dt3_eval(req);
    CHECK(out["chow"]["match"] == true);
    CHECK(out["ktheory"]["match"] == true);
    CHECK(out["chow"]["contribution"] == "3*t^-1");
    std::string table = format_table(out);
    CHECK(table.find("matches 3-fold: true") != std::string::npos);

    json sq = sq_eval(2);
    CHECK(sq["poly"] == "1 - 1/2*(1-x) - 1/8*(1-x)^2");
    CHECK(sq["coefficients"] == json::array({"1/2", "1/8"}));
    CHECK(sq["xhalf_ok"] == true);
    CHECK(sq["sq12_ok"] == true);
    CHECK(sq["expanded"] == "3/8 + 3/4*x - 1/8*x^2");
    CHECK_THROWS_AS(sq_eval(0), Error);
}

TEST_CASE("orth rep json defaults") {
    json j{{"weights", json::array({json::array({2}), json::array({-2})})}};
    OrthWeightRep rep = orth_rep_from_json(j, 1, "x");
    CHECK(rep.positive_half() == std::vector<Weight>{{2}});
    CHECK(rep.sign() == 1);
}
