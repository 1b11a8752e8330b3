// Command-line driver; talks to the library exclusively through the C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "sqec.h"

namespace {

using nlohmann::json;

struct CtxDeleter {
    void operator()(sqec_ctx* c) const { sqec_ctx_free(c); }
};
using Ctx = std::unique_ptr<sqec_ctx, CtxDeleter>;

struct StrDeleter {
    void operator()(char* s) const { sqec_string_free(s); }
};
using ApiString = std::unique_ptr<char, StrDeleter>;

int report_failure(sqec_ctx* ctx, int rc) {
    std::cerr << "error: " << sqec_last_error(ctx) << "\n";
    return rc;
}

int emit(sqec_ctx* ctx, const std::string& result_json, const std::string& format) {
    if (format == "json") {
        std::cout << json::parse(result_json).dump(2) << "\n";
        return 0;
    }
    char* text = nullptr;
    int rc = sqec_format_table(ctx, result_json.c_str(), &text);
    if (rc != SQEC_OK) return report_failure(ctx, rc);
    ApiString guard(text);
    std::cout << guard.get();
    return 0;
}

// "2,-2" -> [[2],[-2]] ; "1,0;0,1" -> [[1,0],[0,1]]
json parse_weight_list(const std::string& text, int rank, bool& ok) {
    json out = json::array();
    ok = true;
    if (text.empty()) return out;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        json w = json::array();
        std::stringstream parts(group);
        std::string part;
        while (std::getline(parts, part, ',')) {
            try {
                w.push_back(std::stoi(part));
            } catch (...) {
                ok = false;
                return out;
            }
        }
        if (rank == 1 && w.size() > 1) {
            // rank-1 shorthand: "2,-2" is a list of scalar weights
            for (const auto& x : w) out.push_back(json::array({x}));
        } else {
            if ((int)w.size() != rank) {
                ok = false;
                return out;
            }
            out.push_back(w);
        }
    }
    return out;
}

std::string read_file(const std::string& path, bool& ok) {
    std::ifstream in(path);
    if (!in) {
        ok = false;
        return "";
    }
    std::stringstream ss;
    ss << in.rdbuf();
    ok = true;
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact square-root Euler class calculus and torus localization"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "table";
    app.add_option("--format", format, "Output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));

    Ctx ctx_holder;
    {
        sqec_ctx* raw = nullptr;
        if (sqec_ctx_new(&raw) != SQEC_OK) {
            std::cerr << "error: cannot initialize context\n";
            return 4;
        }
        ctx_holder.reset(raw);
    }
    sqec_ctx* ctx = ctx_holder.get();

    // localize
    auto* loc = app.add_subcommand("localize", "Run a localization job from a JSON dataset");
    std::string loc_file;
    int loc_order = -1;
    bool loc_limit = false;
    loc->add_option("file", loc_file, "Job JSON file")->required();
    loc->add_option("--expand-order", loc_order, "Expand the total as a series in s");
    loc->add_flag("--limit", loc_limit, "Report the nonequivariant limit of the total");

    // class
    auto* cls = app.add_subcommand("class", "Evaluate a characteristic class of a weight rep");
    std::string cls_op, cls_weights, cls_half;
    int cls_rank = 1, cls_sign = 1, cls_order = 6;
    cls->add_option("op", cls_op, "euler|sqrt-euler|k-euler|k-sqrt-euler|sqrt-det|anderson|todd")
        ->required();
    cls->add_option("--weights", cls_weights, "Weights, e.g. 2,-2 or 1,0;0,1")->required();
    auto* half_opt = cls->add_option("--half", cls_half, "Positive half weights");
    auto* sign_opt = cls->add_option("--sign", cls_sign, "Orientation sign +1/-1");
    cls->add_option("--rank", cls_rank, "Torus rank (default 1)");
    cls->add_option("--order", cls_order, "Series order for todd (default 6)");

    // quadform
    auto* qf = app.add_subcommand("quadform", "Quadratic-space operations on a JSON space file");
    std::string qf_op, qf_space;
    qf->add_option("op", qf_op, "sign|normal-form|reduce|validate")->required();
    qf->add_option("--space", qf_space, "Space JSON file {gram, orientation, subspace}")->required();

    // dt3
    auto* dt3 = app.add_subcommand("dt3", "Local CY4 reduction to 3-fold data");
    auto* dt3check = dt3->add_subcommand("check", "Compare the doubled contribution to 3-fold formulas");
    std::string dt3_f0, dt3_f1, dt3_fixed = "1";
    int dt3_rank = 1;
    dt3check->add_option("--f0", dt3_f0, "Moving weights of F_0 (virtual tangent)");
    dt3check->add_option("--f1", dt3_f1, "Moving weights of F_1 (obstruction)");
    dt3check->add_option("--rank", dt3_rank, "Torus rank (default 1)");
    dt3check->add_option("--fixed", dt3_fixed, "Fixed-point contribution (default 1)");

    // sq
    auto* sq = app.add_subcommand("sq", "Catalan square-root truncation Sq_k and its identities");
    int sq_k = 2;
    sq->add_option("--k", sq_k, "Truncation degree")->required();

    CLI11_PARSE(app, argc, argv);

    char* out = nullptr;
    int rc = SQEC_OK;

    if (*loc) {
        bool ok = false;
        std::string text = read_file(loc_file, ok);
        if (!ok) {
            std::cerr << "error: cannot read " << loc_file << "\n";
            return 2;
        }
        json job;
        try {
            job = json::parse(text);
        } catch (const std::exception& e) {
            std::cerr << "error: " << loc_file << ": " << e.what() << "\n";
            return 2;
        }
        if (loc_order >= 0) job["expand_order"] = loc_order;
        if (loc_limit) job["limit"] = true;
        rc = sqec_localize(ctx, job.dump().c_str(), &out);
    } else if (*cls) {
        bool ok = false;
        json req;
        req["op"] = cls_op;
        req["rank"] = cls_rank;
        req["weights"] = parse_weight_list(cls_weights, cls_rank, ok);
        if (!ok) {
            std::cerr << "error: cannot parse --weights\n";
            return 2;
        }
        if (half_opt->count() > 0) {
            req["positive_half"] = parse_weight_list(cls_half, cls_rank, ok);
            if (!ok) {
                std::cerr << "error: cannot parse --half\n";
                return 2;
            }
        }
        if (sign_opt->count() > 0) req["sign"] = cls_sign;
        if (cls_op == "todd") req["order"] = cls_order;
        rc = sqec_class_eval(ctx, req.dump().c_str(), &out);
    } else if (*qf) {
        bool ok = false;
        std::string text = read_file(qf_space, ok);
        if (!ok) {
            std::cerr << "error: cannot read " << qf_space << "\n";
            return 2;
        }
        json space;
        try {
            space = json::parse(text);
        } catch (const std::exception& e) {
            std::cerr << "error: " << qf_space << ": " << e.what() << "\n";
            return 2;
        }
        json req{{"op", qf_op}, {"space", space}};
        rc = sqec_quadform_eval(ctx, req.dump().c_str(), &out);
    } else if (*dt3) {
        if (!*dt3check) {
            std::cerr << "error: dt3 requires the check subcommand\n";
            return 2;
        }
        bool ok0 = false, ok1 = false;
        json req;
        req["rank"] = dt3_rank;
        req["f0"] = parse_weight_list(dt3_f0, dt3_rank, ok0);
        req["f1"] = parse_weight_list(dt3_f1, dt3_rank, ok1);
        req["fixed_contribution"] = dt3_fixed;
        if (!ok0 || !ok1) {
            std::cerr << "error: cannot parse --f0/--f1\n";
            return 2;
        }
        rc = sqec_dt3_check(ctx, req.dump().c_str(), &out);
    } else if (*sq) {
        rc = sqec_sq_poly(ctx, sq_k, &out);
    }

    if (rc != SQEC_OK) return report_failure(ctx, rc);
    ApiString guard(out);
    return emit(ctx, out, format);
}
