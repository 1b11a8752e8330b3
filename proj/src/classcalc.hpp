#ifndef SQEC_CLASSCALC_HPP
#define SQEC_CLASSCALC_HPP

#include "series.hpp"

namespace sqec {

using Weight = std::vector<int>;

bool weight_is_zero(const Weight& w);
Weight weight_negated(const Weight& w);
/// First nonzero component positive.
bool weight_lex_positive(const Weight& w);

/// Finite multiset of torus weights.
struct WeightRep {
    int rank = 1;
    std::vector<Weight> weights;

    WeightRep() = default;
    WeightRep(int r, std::vector<Weight> ws);
    std::size_t size() const { return weights.size(); }
    bool has_zero_weight() const;
    WeightRep dual() const;
    Weight weight_sum() const;
};

/// Self-dual torus weight multiset with a declared positive half and an
/// orientation sign: the orientation is the one for which the maximal
/// isotropic spanned by positive_half has sign sigma. A weight w of
/// multiplicity m pairs with -w of multiplicity m; the half may mix copies
/// of w and -w within one pair class.
class OrthWeightRep {
public:
    OrthWeightRep(int rank, std::vector<Weight> weights, std::optional<std::vector<Weight>> half,
                  int sign);
    static OrthWeightRep empty(int rank) { return OrthWeightRep(rank, {}, std::nullopt, 1); }

    int rank() const { return rank_; }
    int pairs() const { return (int)half_.size(); }
    int sign() const { return sign_; }
    const std::vector<Weight>& all_weights() const { return weights_; }
    const std::vector<Weight>& positive_half() const { return half_; }
    WeightRep half_rep() const { return WeightRep(rank_, half_); }
    WeightRep full_rep() const { return WeightRep(rank_, weights_); }

    /// Same oriented object presented through another half: the sign picks
    /// up one factor of -1 per flipped pair.
    OrthWeightRep with_half(std::vector<Weight> half, int sign) const;

    /// Number of pair flips between the declared half and another.
    static int flip_distance(const std::vector<Weight>& a, const std::vector<Weight>& b);

    /// Remove one {w,-w} pair per entry of k (a sub-multiset of the half).
    OrthWeightRep reduced_by(const std::vector<Weight>& k) const;

private:
    int rank_;
    std::vector<Weight> weights_;
    std::vector<Weight> half_;
    int sign_;
};

struct ChowClass {
    RatFunc value;
    bool operator==(const ChowClass& o) const { return value == o.value; }
};

struct KClass {
    RatFunc value;
    bool operator==(const KClass& o) const { return value == o.value; }
};

/// Product of the linear forms <w,t>; zero weights give the zero class.
ChowClass euler(const WeightRep& rep);
/// sigma times the product of linear forms over the positive half.
ChowClass sqrt_euler(const OrthWeightRep& rep);
/// Product of (1 - t^{-w}).
KClass k_euler(const WeightRep& rep);
/// t^{(sum of weights)/2}, a single monomial.
KClass sqrt_det(const WeightRep& rep);
/// sigma times prod_{half} (1 - t^{-w}) times t^{(sum of half)/2}.
KClass k_sqrt_euler(const OrthWeightRep& rep);
/// Chern polynomial at a scalar: prod_w (1 + x (1 - t^{-w})).
KClass k_chern_poly(const WeightRep& rep, const GaussianRational& x);
/// sigma * c(dual half, -1/2) * c_n(half).
KClass anderson_epsilon(const OrthWeightRep& rep);

/// Taylor coefficient a_i = 2^{1-2i} C_{i-1} of 1 - (1-x)^{1/2}.
mpq_class catalan_sqrt_coeff(int i);
/// Sq_k(x) = 1 - sum_{i<=k} a_i (1-x)^i, expanded; coeffs[j] is the x^j coefficient.
std::vector<mpq_class> sq_poly(int k);
/// (1 - sum_{i<=k} a_i x^i)^2 - (1-x) - 2 a_{k+1} x^{k+1} has only terms of
/// degree >= k+2.
bool sq_xhalf_identity_holds(int k);
/// (1-v)^{k+1} divides Sq_k(v^2) - v.
bool sq_divisibility_holds(int k);

/// Unique square root congruent to 1 of a unipotent truncated-ring element,
/// via the finite Catalan sum.
PowerSeries nilpotent_sqrt(const PowerSeries& p);

PowerSeries todd_series(const WeightRep& rep, int order);
PowerSeries sqrt_todd_series(const WeightRep& rep, int order);
/// Todd series of a virtual representation pos - neg.
PowerSeries todd_series_virtual(const WeightRep& pos, const WeightRep& neg, int order);
PowerSeries ch_series(const KClass& kc, int order);

} // namespace sqec

#endif
