#include "jobio.hpp"

#include <set>
#include <sstream>

#include "error.hpp"
#include "polyparse.hpp"

namespace sqec {

using nlohmann::json;

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
    fail(errc::schema_error, path + ": " + msg);
}

const json& need(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) schema_fail(path, "missing key \"" + key + "\"");
    return j.at(key);
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& path) {
    if (!j.is_object()) schema_fail(path, "expected an object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) schema_fail(path, "unknown key \"" + k + "\"");
}

int need_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) schema_fail(path, "expected an integer");
    return j.get<int>();
}

std::string need_string(const json& j, const std::string& path) {
    if (!j.is_string()) schema_fail(path, "expected a string");
    return j.get<std::string>();
}

GaussianRational gaussian_from_json(const json& j, const std::string& path) {
    std::string s = need_string(j, path);
    try {
        return parse_gaussian(s);
    } catch (const Error& e) {
        schema_fail(path, e.what());
    }
}

void check_real(const RatFunc& f, const std::string& what) {
    auto real = [](const LaurentPoly& p) {
        for (const auto& [e, c] : p.terms())
            if (!c.is_real()) return false;
        return true;
    };
    if (!real(f.num()) || !real(f.den()))
        fail(errc::internal_convention_error,
             what + " has a nonzero imaginary part (convention bug)");
}

} // namespace

QMat qmat_from_json_rows(const json& rows, const std::string& path) {
    if (!rows.is_array()) schema_fail(path, "expected an array of rows");
    int r = (int)rows.size();
    int c = r == 0 ? 0 : -1;
    std::vector<QVec> data;
    for (int i = 0; i < r; ++i) {
        const json& row = rows.at(i);
        if (!row.is_array()) schema_fail(path, "row " + std::to_string(i) + " is not an array");
        if (c < 0) c = (int)row.size();
        if ((int)row.size() != c) schema_fail(path, "ragged rows");
        QVec v;
        for (int k = 0; k < (int)row.size(); ++k)
            v.push_back(gaussian_from_json(row.at(k), path + "[" + std::to_string(i) + "][" +
                                                          std::to_string(k) + "]"));
        data.push_back(v);
    }
    QMat m(r, c < 0 ? 0 : c);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < m.cols(); ++k) m.at(i, k) = data[i][k];
    return m;
}

QMat qmat_from_json_cols(const json& cols, int rows, const std::string& path) {
    if (!cols.is_array()) schema_fail(path, "expected an array of columns");
    std::vector<QVec> columns;
    for (int i = 0; i < (int)cols.size(); ++i) {
        const json& col = cols.at(i);
        if (!col.is_array() || (int)col.size() != rows)
            schema_fail(path, "column " + std::to_string(i) + " must have " + std::to_string(rows) +
                                  " entries");
        QVec v;
        for (int k = 0; k < rows; ++k)
            v.push_back(gaussian_from_json(col.at(k), path + "[" + std::to_string(i) + "][" +
                                                          std::to_string(k) + "]"));
        columns.push_back(v);
    }
    return QMat::from_columns(rows, columns);
}

json qmat_to_json_rows(const QMat& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

json qmat_to_json_cols(const QMat& m) {
    json cols = json::array();
    for (int c = 0; c < m.cols(); ++c) {
        json col = json::array();
        for (int r = 0; r < m.rows(); ++r) col.push_back(m.at(r, c).str());
        cols.push_back(col);
    }
    return cols;
}

std::vector<Weight> weights_from_json(const json& j, int rank, const std::string& path) {
    if (!j.is_array()) schema_fail(path, "expected an array of weight vectors");
    std::vector<Weight> ws;
    for (int i = 0; i < (int)j.size(); ++i) {
        const json& w = j.at(i);
        if (!w.is_array() || (int)w.size() != rank)
            schema_fail(path, "weight " + std::to_string(i) + " must be a vector of length " +
                                  std::to_string(rank));
        Weight v;
        for (const auto& x : w) {
            if (!x.is_number_integer())
                schema_fail(path, "weight components must be integers");
            v.push_back(x.get<int>());
        }
        ws.push_back(v);
    }
    return ws;
}

OrthWeightRep orth_rep_from_json(const json& j, int rank, const std::string& path) {
    reject_unknown(j, {"weights", "positive_half", "sign"}, path);
    std::vector<Weight> ws = weights_from_json(need(j, "weights", path), rank, path + ".weights");
    std::optional<std::vector<Weight>> half;
    if (j.contains("positive_half"))
        half = weights_from_json(j.at("positive_half"), rank, path + ".positive_half");
    int sign = 1;
    if (j.contains("sign")) sign = need_int(j.at("sign"), path + ".sign");
    return OrthWeightRep(rank, ws, half, sign);
}

JobSpec job_from_json(const json& j) {
    reject_unknown(j, {"torus_rank", "theory", "points", "expand_order", "limit"}, "job");
    JobSpec spec;
    spec.torus_rank = need_int(need(j, "torus_rank", "job"), "job.torus_rank");
    if (spec.torus_rank < 1) schema_fail("job.torus_rank", "must be >= 1");
    std::string th = need_string(need(j, "theory", "job"), "job.theory");
    if (th == "chow")
        spec.theory = Theory::chow;
    else if (th == "ktheory")
        spec.theory = Theory::ktheory;
    else
        schema_fail("job.theory", "must be \"chow\" or \"ktheory\"");
    if (j.contains("expand_order")) {
        spec.expand_order = need_int(j.at("expand_order"), "job.expand_order");
        if (*spec.expand_order < 0) schema_fail("job.expand_order", "must be >= 0");
    }
    if (j.contains("limit")) {
        if (!j.at("limit").is_boolean()) schema_fail("job.limit", "expected a boolean");
        spec.want_limit = j.at("limit").get<bool>();
    }
    const json& pts = need(j, "points", "job");
    if (!pts.is_array()) schema_fail("job.points", "expected an array");
    for (int i = 0; i < (int)pts.size(); ++i) {
        std::string path = "job.points[" + std::to_string(i) + "]";
        const json& p = pts.at(i);
        reject_unknown(p,
                       {"name", "fixed_contribution", "fixed_k_contribution", "t_moving",
                        "e_moving", "insertion"},
                       path);
        FixedComponentDatum d;
        d.name = need_string(need(p, "name", path), path + ".name");
        d.fixed_contribution =
            gaussian_from_json(need(p, "fixed_contribution", path), path + ".fixed_contribution");
        if (p.contains("fixed_k_contribution")) {
            std::string s = need_string(p.at("fixed_k_contribution"), path + ".fixed_k_contribution");
            try {
                d.fixed_k_contribution = RatFunc(parse_poly(s, spec.torus_rank));
            } catch (const Error& e) {
                schema_fail(path + ".fixed_k_contribution", e.what());
            }
        }
        d.t_moving = WeightRep(spec.torus_rank, weights_from_json(need(p, "t_moving", path),
                                                                  spec.torus_rank, path + ".t_moving"));
        d.e_moving = orth_rep_from_json(need(p, "e_moving", path), spec.torus_rank, path + ".e_moving");
        if (p.contains("insertion")) {
            std::string s = need_string(p.at("insertion"), path + ".insertion");
            try {
                d.insertion = RatFunc(parse_poly(s, spec.torus_rank));
            } catch (const Error& e) {
                schema_fail(path + ".insertion", e.what());
            }
        }
        spec.points.push_back(std::move(d));
    }
    return spec;
}

json run_job(const JobSpec& job) {
    LocalizationResult res = job.theory == Theory::chow ? chow_invariant(job.points, job.torus_rank)
                                                        : k_invariant(job.points, job.torus_rank);
    json out;
    out["theory"] = job.theory == Theory::chow ? "chow" : "ktheory";
    out["torus_rank"] = job.torus_rank;
    json pts = json::array();
    for (const auto& [name, value] : res.per_point) {
        check_real(value, "contribution of " + name);
        pts.push_back(json{{"name", name}, {"value", value.str()}});
    }
    out["per_point"] = pts;
    check_real(res.total, "localization total");
    out["total"] = res.total.str();
    if (job.want_limit) {
        LimitResult lim = res.limit();
        if (limit_exists(lim))
            out["limit"] = json{{"value", std::get<GaussianRational>(lim).str()}};
        else
            out["limit"] = json{{"pole_order", std::get<PoleReport>(lim).order}};
    }
    if (job.expand_order) {
        if (job.torus_rank != 1)
            fail(errc::unsupported_rank, "series expansion is rank-1 only");
        PowerSeries s = job.theory == Theory::ktheory ? exp_substitute(res.total, *job.expand_order)
                                                      : chow_expand(res.total, *job.expand_order);
        out["series"] = s.str();
        out["series_order"] = *job.expand_order;
    }
    return out;
}

json class_eval(const json& request) {
    reject_unknown(request, {"op", "rank", "weights", "positive_half", "sign", "x", "order"},
                   "class");
    std::string op = need_string(need(request, "op", "class"), "class.op");
    int rank = 1;
    if (request.contains("rank")) rank = need_int(request.at("rank"), "class.rank");
    if (rank < 1) schema_fail("class.rank", "must be >= 1");
    std::vector<Weight> ws =
        weights_from_json(need(request, "weights", "class"), rank, "class.weights");
    json out;
    out["op"] = op;
    auto orth = [&]() {
        std::optional<std::vector<Weight>> half;
        if (request.contains("positive_half"))
            half = weights_from_json(request.at("positive_half"), rank, "class.positive_half");
        int sign = 1;
        if (request.contains("sign")) sign = need_int(request.at("sign"), "class.sign");
        return OrthWeightRep(rank, ws, half, sign);
    };
    if (op == "euler") {
        out["value"] = euler(WeightRep(rank, ws)).value.str();
    } else if (op == "k-euler") {
        out["value"] = k_euler(WeightRep(rank, ws)).value.str();
    } else if (op == "sqrt-euler") {
        out["value"] = sqrt_euler(orth()).value.str();
    } else if (op == "k-sqrt-euler") {
        out["value"] = k_sqrt_euler(orth()).value.str();
    } else if (op == "sqrt-det") {
        out["value"] = sqrt_det(WeightRep(rank, ws)).value.str();
    } else if (op == "anderson") {
        out["value"] = anderson_epsilon(orth()).value.str();
    } else if (op == "todd") {
        int order = 6;
        if (request.contains("order")) order = need_int(request.at("order"), "class.order");
        if (order < 0) schema_fail("class.order", "must be >= 0");
        out["series"] = todd_series(WeightRep(rank, ws), order).str();
        out["sqrt_series"] = sqrt_todd_series(WeightRep(rank, ws), order).str();
        out["order"] = order;
    } else {
        schema_fail("class.op", "unknown operation \"" + op + "\"");
    }
    return out;
}

json quadform_eval(const json& request) {
    reject_unknown(request, {"op", "space"}, "quadform");
    std::string op = need_string(need(request, "op", "quadform"), "quadform.op");
    const json& sp = need(request, "space", "quadform");
    reject_unknown(sp, {"gram", "orientation", "subspace"}, "quadform.space");
    QMat gram = qmat_from_json_rows(need(sp, "gram", "quadform.space"), "quadform.space.gram");
    QuadraticSpace space{gram};
    std::optional<Orientation> orient;
    if (sp.contains("orientation"))
        orient = Orientation{gaussian_from_json(sp.at("orientation"), "quadform.space.orientation")};
    std::optional<Subspace> sub;
    if (sp.contains("subspace"))
        sub = Subspace{qmat_from_json_cols(sp.at("subspace"), space.dim(), "quadform.space.subspace")};

    json out;
    out["op"] = op;
    if (op == "sign") {
        if (!orient) schema_fail("quadform.space.orientation", "required for sign");
        if (!sub) schema_fail("quadform.space.subspace", "required for sign");
        out["sign"] = isotropic_sign(space, *orient, *sub);
    } else if (op == "normal-form") {
        HyperbolicFrame fr = hyperbolic_normal_form(space);
        out["e"] = qmat_to_json_cols(fr.e_basis);
        out["f"] = qmat_to_json_cols(fr.f_basis);
        if (fr.unit) {
            json u = json::array();
            for (const auto& x : *fr.unit) u.push_back(x.str());
            out["unit"] = u;
        }
    } else if (op == "reduce") {
        if (!orient) schema_fail("quadform.space.orientation", "required for reduce");
        if (!sub) schema_fail("quadform.space.subspace", "required for reduce");
        auto [rspace, ror] = reduce(space, *orient, *sub);
        out["gram"] = qmat_to_json_rows(rspace.gram());
        out["orientation"] = ror.scalar.str();
    } else if (op == "validate") {
        bool orientation_ok = orient ? orientation_validate(space, *orient) : false;
        out["gram_symmetric"] = true; // enforced at construction
        out["gram_nondegenerate"] = true;
        if (orient) out["orientation_valid"] = orientation_ok;
        if (sub) out["subspace_isotropic"] = is_isotropic(space, *sub);
        bool ok = (!orient || orientation_ok) && (!sub || is_isotropic(space, *sub));
        out["ok"] = ok;
    } else {
        schema_fail("quadform.op", "unknown operation \"" + op + "\"");
    }
    return out;
}

json dt3_eval(const json& request) {
    reject_unknown(request, {"f0", "f1", "rank", "fixed_contribution"}, "dt3");
    int rank = 1;
    if (request.contains("rank")) rank = need_int(request.at("rank"), "dt3.rank");
    DT3Datum d3;
    d3.f0_moving = WeightRep(rank, weights_from_json(need(request, "f0", "dt3"), rank, "dt3.f0"));
    d3.f1_moving = WeightRep(rank, weights_from_json(need(request, "f1", "dt3"), rank, "dt3.f1"));
    if (request.contains("fixed_contribution"))
        d3.fixed_contribution =
            gaussian_from_json(request.at("fixed_contribution"), "dt3.fixed_contribution");
    DT3Check c = dt3_check(d3);
    json out;
    out["chow"] = json{{"contribution", c.chow_contribution.str()},
                       {"threefold", c.chow_threefold.str()},
                       {"match", c.chow_ok}};
    out["ktheory"] = json{{"contribution", c.k_contribution.str()},
                          {"threefold", c.k_threefold.str()},
                          {"match", c.k_ok}};
    return out;
}

namespace {

std::string x_poly_str(const std::vector<mpq_class>& coeffs) {
    std::vector<std::string> parts;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        std::string mono = j == 0 ? "" : (j == 1 ? "x" : "x^" + std::to_string(j));
        GaussianRational c((mpq_class(coeffs[j])));
        if (mono.empty())
            parts.push_back(c.str());
        else if (c.is_one())
            parts.push_back(mono);
        else if (c == GaussianRational(-1))
            parts.push_back("-" + mono);
        else
            parts.push_back(c.str() + "*" + mono);
    }
    return join_terms(parts);
}

} // namespace

json sq_eval(int k) {
    if (k < 1) schema_fail("sq.k", "must be >= 1");
    json out;
    out["k"] = k;
    std::string basis = "1";
    json coeffs = json::array();
    for (int i = 1; i <= k; ++i) {
        mpq_class ai = catalan_sqrt_coeff(i);
        coeffs.push_back(rational_str(ai));
        std::string pw = i == 1 ? "(1-x)" : "(1-x)^" + std::to_string(i);
        basis += " - " + rational_str(ai) + "*" + pw;
    }
    out["poly"] = basis;
    out["expanded"] = x_poly_str(sq_poly(k));
    out["coefficients"] = coeffs;
    out["xhalf_ok"] = sq_xhalf_identity_holds(k);
    out["sq12_ok"] = sq_divisibility_holds(k);
    return out;
}

std::string format_table(const json& doc) {
    std::ostringstream os;
    if (doc.contains("per_point")) {
        os << "theory: " << doc.at("theory").get<std::string>() << "\n";
        std::size_t w = 4;
        for (const auto& p : doc.at("per_point"))
            w = std::max(w, p.at("name").get<std::string>().size());
        for (const auto& p : doc.at("per_point")) {
            std::string name = p.at("name").get<std::string>();
            os << "  " << name << std::string(w - name.size() + 2, ' ')
               << p.at("value").get<std::string>() << "\n";
        }
        os << "total: " << doc.at("total").get<std::string>() << "\n";
        if (doc.contains("limit")) {
            if (doc.at("limit").contains("value"))
                os << "limit: " << doc.at("limit").at("value").get<std::string>() << "\n";
            else
                os << "limit: pole of order " << doc.at("limit").at("pole_order").get<int>() << "\n";
        }
        if (doc.contains("series"))
            os << "series (order " << doc.at("series_order").get<int>()
               << "): " << doc.at("series").get<std::string>() << "\n";
        return os.str();
    }
    if (doc.contains("chow") && doc.contains("ktheory")) {
        const auto& c = doc.at("chow");
        const auto& k = doc.at("ktheory");
        os << "chow: " << c.at("contribution").get<std::string>()
           << ", matches 3-fold: " << (c.at("match").get<bool>() ? "true" : "false") << "\n";
        os << "ktheory: " << k.at("contribution").get<std::string>()
           << ", matches 3-fold: " << (k.at("match").get<bool>() ? "true" : "false") << "\n";
        return os.str();
    }
    if (doc.contains("poly")) {
        os << doc.at("poly").get<std::string>() << "\n";
        os << "expanded: " << doc.at("expanded").get<std::string>() << "\n";
        os << "xhalf: " << (doc.at("xhalf_ok").get<bool>() ? "pass" : "FAIL") << "\n";
        os << "sq12: " << (doc.at("sq12_ok").get<bool>() ? "pass" : "FAIL") << "\n";
        return os.str();
    }
    if (doc.contains("sign")) {
        os << (doc.at("sign").get<int>() > 0 ? "+1" : "-1") << "\n";
        return os.str();
    }
    if (doc.contains("gram") && doc.contains("orientation")) {
        os << "gram:\n";
        for (const auto& row : doc.at("gram")) {
            os << " ";
            for (const auto& x : row) os << " " << x.get<std::string>();
            os << "\n";
        }
        os << "orientation: " << doc.at("orientation").get<std::string>() << "\n";
        return os.str();
    }
    if (doc.contains("e") && doc.contains("f")) {
        auto cols = [&os](const char* label, const json& m) {
            os << label << ":";
            for (const auto& col : m) {
                os << " (";
                for (std::size_t i = 0; i < col.size(); ++i)
                    os << (i ? ", " : "") << col.at(i).get<std::string>();
                os << ")";
            }
            os << "\n";
        };
        cols("e", doc.at("e"));
        cols("f", doc.at("f"));
        if (doc.contains("unit")) cols("unit", json::array({doc.at("unit")}));
        return os.str();
    }
    if (doc.contains("ok")) {
        for (const auto& [k, v] : doc.items())
            if (k != "op") os << k << ": " << (v.is_boolean() ? (v.get<bool>() ? "true" : "false") : v.dump()) << "\n";
        return os.str();
    }
    if (doc.contains("value")) {
        os << doc.at("value").get<std::string>() << "\n";
        return os.str();
    }
    if (doc.contains("series")) {
        os << doc.at("series").get<std::string>() << "\n";
        if (doc.contains("sqrt_series"))
            os << "sqrt: " << doc.at("sqrt_series").get<std::string>() << "\n";
        return os.str();
    }
    os << doc.dump(2) << "\n";
    return os.str();
}

} // namespace sqec
