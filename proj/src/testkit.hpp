#ifndef SQEC_TESTKIT_HPP
#define SQEC_TESTKIT_HPP

#include <random>

#include "classcalc.hpp"
#include "quadspace.hpp"

namespace sqec::testkit {

/// Deterministic seeded stream; raw mt19937_64 output only, so the sample
/// stream is identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t raw() { return eng_(); }
    int range(int lo, int hi) { return lo + (int)(raw() % (std::uint64_t)(hi - lo + 1)); }
    bool flip() { return (raw() & 1) != 0; }

private:
    std::mt19937_64 eng_;
};

/// Negation-closed nonzero multiset of n pairs with a uniformly chosen half
/// and sign; same seed gives the same rep.
OrthWeightRep gen_orth_rep(std::uint64_t seed, int n, int rank, int max_mag = 6);
OrthWeightRep gen_orth_rep(Rng& rng, int n, int rank, int max_mag = 6);

/// All 2^n halves of a rep with their flip-distance parity from the declared
/// half; n <= 5 enforced.
std::vector<std::pair<std::vector<Weight>, int>> enumerate_halves(const OrthWeightRep& rep);

/// Linear-algebra shadow of an oriented weight rep: block-hyperbolic space,
/// the half as a coordinate subspace, and the orientation scaled so that
/// isotropic_sign returns exactly the declared sign.
struct Bridge {
    QuadraticSpace space;
    Orientation orientation;
    Subspace lambda;
    HyperbolicFrame frame;
};
Bridge weightrep_to_quadspace(const OrthWeightRep& rep);

/// Coordinate subspace spanned by an alternative half of the same rep.
Subspace bridge_half_subspace(const OrthWeightRep& rep, const std::vector<Weight>& half);

/// Exact-arithmetic moves that stay inside one component of the orthogonal
/// Grassmannian: basis shears of lambda and antisymmetric isotropic shears
/// of a hyperbolic frame.
QMat random_invertible_upper(Rng& rng, int n, int mag = 3);
QMat random_antisymmetric(Rng& rng, int n, int mag = 3);
Subspace sheared_lambda(const HyperbolicFrame& fr, const QMat& antisym);

} // namespace sqec::testkit

#endif
