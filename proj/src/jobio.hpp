#ifndef SQEC_JOBIO_HPP
#define SQEC_JOBIO_HPP

#include <json.hpp>

#include "localizer.hpp"
#include "quadspace.hpp"

namespace sqec {

struct JobSpec {
    Theory theory = Theory::chow;
    int torus_rank = 1;
    std::vector<FixedComponentDatum> points;
    std::optional<int> expand_order;
    bool want_limit = false;
};

JobSpec job_from_json(const nlohmann::json& j);
nlohmann::json run_job(const JobSpec& job);

nlohmann::json class_eval(const nlohmann::json& request);
nlohmann::json quadform_eval(const nlohmann::json& request);
nlohmann::json dt3_eval(const nlohmann::json& request);
nlohmann::json sq_eval(int k);

/// Human-readable rendering of any of the JSON result documents above.
std::string format_table(const nlohmann::json& doc);

// JSON <-> core type helpers (shared with tests)
QMat qmat_from_json_rows(const nlohmann::json& rows, const std::string& path);
QMat qmat_from_json_cols(const nlohmann::json& cols, int rows, const std::string& path);
nlohmann::json qmat_to_json_rows(const QMat& m);
nlohmann::json qmat_to_json_cols(const QMat& m);
std::vector<Weight> weights_from_json(const nlohmann::json& j, int rank, const std::string& path);
OrthWeightRep orth_rep_from_json(const nlohmann::json& j, int rank, const std::string& path);

} // namespace sqec

#endif
