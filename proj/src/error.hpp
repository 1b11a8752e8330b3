#ifndef SQEC_ERROR_HPP
#define SQEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sqec {

enum class errc {
    // scalars
    invalid_ratfunc,
    unsupported_rank,
    not_unit_series,
    not_unipotent,
    // quadspace
    shape_error,
    not_maximal_isotropic,
    normal_form_obstruction,
    not_isotropic,
    invalid_orientation,
    internal_convention_error,
    // weight representations
    zero_weight,
    not_negation_closed,
    odd_rank_unsupported,
    bad_half_selection,
    // testkit
    size_limit,
    // frontend
    parse_error,
    schema_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_ratfunc: return "InvalidRatFunc";
        case errc::unsupported_rank: return "UnsupportedRank";
        case errc::not_unit_series: return "NotUnitSeries";
        case errc::not_unipotent: return "NotUnipotent";
        case errc::shape_error: return "ShapeError";
        case errc::not_maximal_isotropic: return "NotMaximalIsotropic";
        case errc::normal_form_obstruction: return "NormalFormObstruction";
        case errc::not_isotropic: return "NotIsotropic";
        case errc::invalid_orientation: return "InvalidOrientation";
        case errc::internal_convention_error: return "InternalConventionError";
        case errc::zero_weight: return "ZeroMovingWeight";
        case errc::not_negation_closed: return "NotNegationClosed";
        case errc::odd_rank_unsupported: return "OddRankUnsupported";
        case errc::bad_half_selection: return "BadHalfSelection";
        case errc::size_limit: return "SizeLimit";
        case errc::parse_error: return "ParseError";
        case errc::schema_error: return "SchemaError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace sqec

#endif
