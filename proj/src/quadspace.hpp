#ifndef SQEC_QUADSPACE_HPP
#define SQEC_QUADSPACE_HPP

#include "matrix.hpp"

namespace sqec {

/// Nondegenerate complex quadratic space in coordinates: q(x,y) = x^T gram y.
class QuadraticSpace {
public:
    explicit QuadraticSpace(QMat gram);
    int dim() const { return gram_.rows(); }
    const QMat& gram() const { return gram_; }
    GaussianRational q(const QVec& x, const QVec& y) const;

private:
    QMat gram_;
};

/// Orientation scalar c, meaning o = c * b_1 ^ ... ^ b_r against the ambient
/// basis. Valid iff c^2 det(gram) = 1; this closed form is what the pairing
/// conventions give for the "square maps to (-1)^{r(r-1)/2}" condition.
struct Orientation {
    GaussianRational scalar;
    Orientation negated() const { return {-scalar}; }
};

struct Subspace {
    explicit Subspace(QMat basis);
    QMat basis;
    int dim() const { return basis.cols(); }
};

struct HyperbolicFrame {
    QMat e_basis, f_basis;       // r x n each
    std::optional<QVec> unit;    // odd-rank residual vector with q(e,e) = 1
    int pairs() const { return e_basis.cols(); }
};

bool is_isotropic(const QuadraticSpace& space, const Subspace& sub);

/// Isotropic dual completion: given any isotropic K (columns e_j), produce
/// f_j with q(e_i,f_j) = delta_ij and q(f_i,f_j) = 0 by correcting dual
/// lifts: f_j -> f_j - (1/2) q(f_j,f_j) e_j - sum_{i<j} q(f_i,f_j) e_i.
QMat hyperbolic_partner(const QuadraticSpace& space, const QMat& k_basis);

/// Requires lambda maximal isotropic and even dimension.
HyperbolicFrame hyperbolic_extend(const QuadraticSpace& space, const Subspace& lambda);

/// Full normal form over Q(i): searches for isotropic vectors by pairwise
/// square completion. A residual non-square is a genuine arithmetic
/// obstruction over the non-closed field and is reported, never approximated.
HyperbolicFrame hyperbolic_normal_form(const QuadraticSpace& space);

bool orientation_validate(const QuadraticSpace& space, const Orientation& o);

/// The orientation for which lambda is positive: (-i)^n times the coordinate
/// of e_1^f_1^...^e_n^f_n in the ambient top form.
Orientation canonical_orientation(const QuadraticSpace& space, const Subspace& lambda);

/// Sign (+1/-1) of a maximal isotropic relative to an orientation.
int isotropic_sign(const QuadraticSpace& space, const Orientation& o, const Subspace& lambda);

/// Reduction K^perp/K with the induced orientation (K positive in K + K^*).
std::pair<QuadraticSpace, Orientation> reduce(const QuadraticSpace& space, const Orientation& o,
                                              const Subspace& k_sub);

/// Postcondition check used by tests: frame satisfies the hyperbolic
/// relations exactly (and the unit relations in the odd case).
bool frame_valid(const QuadraticSpace& space, const HyperbolicFrame& fr);

} // namespace sqec

#endif
