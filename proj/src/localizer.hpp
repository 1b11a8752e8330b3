#ifndef SQEC_LOCALIZER_HPP
#define SQEC_LOCALIZER_HPP

#include "classcalc.hpp"

namespace sqec {

enum class Theory { chow, ktheory };

/// Per-fixed-point localization input. t_moving carries the moving weights
/// of the degree -2 piece of the self-dual cotangent complex {T -> E -> T*}
/// (not the tangent weights of 3-fold conventions; dt3_double is the bridge),
/// e_moving the oriented middle term. Fixed parts are collapsed into the
/// user-supplied fixed contributions.
struct FixedComponentDatum {
    std::string name;
    GaussianRational fixed_contribution{1};
    std::optional<RatFunc> fixed_k_contribution; // defaults to the scalar above
    WeightRep t_moving;
    OrthWeightRep e_moving{OrthWeightRep::empty(1)};
    std::optional<RatFunc> insertion; // Chow theory only

    RatFunc k_fixed(int rank) const {
        return fixed_k_contribution ? *fixed_k_contribution
                                    : RatFunc::constant(rank, fixed_contribution);
    }
};

std::vector<std::string> validate_datum(const FixedComponentDatum& d, int torus_rank);

/// e_T(T^m) / sqrt-e_T(E^m)
ChowClass sqrt_euler_normal(const FixedComponentDatum& d);
/// e_K(T^m) sqrt-det(T^m) / sqrt-e_K(E^m)
KClass k_sqrt_euler_normal(const FixedComponentDatum& d);

struct LocalizationResult {
    Theory theory = Theory::chow;
    int rank = 1;
    std::vector<std::pair<std::string, RatFunc>> per_point;
    RatFunc total{1};

    /// Nonequivariant limit of the total (computed on demand).
    LimitResult limit() const { return limit_at_identity(total); }
};

LocalizationResult chow_invariant(const std::vector<FixedComponentDatum>& data, int torus_rank);
LocalizationResult k_invariant(const std::vector<FixedComponentDatum>& data, int torus_rank);

/// Both sides of the Riemann-Roch consistency check for one datum: the
/// Chern character of the K contribution against sqrt-td of the virtual
/// tangent representation times the Chow contribution, as series in s.
struct RRCheck {
    PowerSeries lhs, rhs;
    bool equal;
};
RRCheck rr_consistency(const FixedComponentDatum& d, int order);

/// Moving weights of a 3-fold perfect obstruction theory {F_0 -> F_1}.
struct DT3Datum {
    WeightRep f0_moving;
    WeightRep f1_moving;
    GaussianRational fixed_contribution{1};
};

/// Double to the self-dual complex F + F^dual[2]: T^m = F_0, E^m = F_1 + F_1^*
/// with F_1 the positive maximal isotropic.
FixedComponentDatum dt3_double(const DT3Datum& d3);

struct DT3Check {
    RatFunc chow_contribution, chow_threefold;
    RatFunc k_contribution, k_threefold;
    bool chow_ok, k_ok;
};
DT3Check dt3_check(const DT3Datum& d3);

/// Square-root line-bundle operator at a fixed point: multiplication by t^{w/2}.
KClass sqrt_star(int weight, const KClass& f);

} // namespace sqec

#endif
