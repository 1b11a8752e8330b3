#include "testkit.hpp"

#include "error.hpp"

namespace sqec::testkit {

OrthWeightRep gen_orth_rep(std::uint64_t seed, int n, int rank, int max_mag) {
    Rng rng(seed);
    return gen_orth_rep(rng, n, rank, max_mag);
}

OrthWeightRep gen_orth_rep(Rng& rng, int n, int rank, int max_mag) {
    std::vector<Weight> weights, half;
    for (int j = 0; j < n; ++j) {
        Weight w(rank);
        do {
            for (int i = 0; i < rank; ++i) w[i] = rng.range(-max_mag, max_mag);
        } while (weight_is_zero(w));
        weights.push_back(w);
        weights.push_back(weight_negated(w));
        half.push_back(rng.flip() ? w : weight_negated(w));
    }
    int sign = rng.flip() ? 1 : -1;
    return OrthWeightRep(rank, weights, half, sign);
}

std::vector<std::pair<std::vector<Weight>, int>> enumerate_halves(const OrthWeightRep& rep) {
    int n = rep.pairs();
    if (n > 5) fail(errc::size_limit, "half enumeration limited to n <= 5");
    const auto& declared = rep.positive_half();
    std::vector<std::pair<std::vector<Weight>, int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<Weight> half;
        int d = 0;
        for (int j = 0; j < n; ++j) {
            if (mask & (1u << j)) {
                half.push_back(weight_negated(declared[j]));
                ++d;
            } else {
                half.push_back(declared[j]);
            }
        }
        out.emplace_back(std::move(half), d);
    }
    return out;
}

Bridge weightrep_to_quadspace(const OrthWeightRep& rep) {
    int n = rep.pairs();
    int r = 2 * n;
    QMat gram(r, r);
    for (int j = 0; j < n; ++j) {
        gram.at(2 * j, 2 * j + 1) = GaussianRational(1);
        gram.at(2 * j + 1, 2 * j) = GaussianRational(1);
    }
    QuadraticSpace space{gram};
    QMat lam(r, n);
    for (int j = 0; j < n; ++j) lam.at(2 * j, j) = GaussianRational(1);
    Subspace lambda{lam};
    Orientation o = n == 0 ? Orientation{GaussianRational(1)}
                           : canonical_orientation(space, lambda);
    if (rep.sign() < 0) o = o.negated();
    HyperbolicFrame fr;
    if (n > 0)
        fr = hyperbolic_extend(space, lambda);
    else
        fr.e_basis = fr.f_basis = QMat(r, 0);
    return {space, o, lambda, fr};
}

Subspace bridge_half_subspace(const OrthWeightRep& rep, const std::vector<Weight>& half) {
    int n = rep.pairs();
    const auto& declared = rep.positive_half();
    std::vector<Weight> remaining = half;
    QMat basis(2 * n, n);
    for (int j = 0; j < n; ++j) {
        auto it = std::find(remaining.begin(), remaining.end(), declared[j]);
        if (it != remaining.end()) {
            basis.at(2 * j, j) = GaussianRational(1); // kept the declared choice
            remaining.erase(it);
        } else {
            auto neg = std::find(remaining.begin(), remaining.end(), weight_negated(declared[j]));
            if (neg == remaining.end())
                fail(errc::bad_half_selection, "half is not a selection from this rep");
            basis.at(2 * j + 1, j) = GaussianRational(1); // flipped to the partner
            remaining.erase(neg);
        }
    }
    return Subspace{basis};
}

QMat random_invertible_upper(Rng& rng, int n, int mag) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) {
        int d = 0;
        while (d == 0) d = rng.range(-mag, mag);
        m.at(i, i) = GaussianRational(d);
        for (int j = i + 1; j < n; ++j)
            m.at(i, j) = GaussianRational(mpq_class(rng.range(-mag, mag)), mpq_class(rng.range(-mag, mag)));
    }
    return m;
}

QMat random_antisymmetric(Rng& rng, int n, int mag) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            GaussianRational a(mpq_class(rng.range(-mag, mag)), mpq_class(rng.range(-mag, mag)));
            m.at(i, j) = a;
            m.at(j, i) = -a;
        }
    return m;
}

Subspace sheared_lambda(const HyperbolicFrame& fr, const QMat& antisym) {
    // e_i -> e_i + sum_j A_ij f_j stays isotropic exactly when A = -A^T
    int n = fr.pairs();
    QMat basis = fr.e_basis;
    QMat shear = fr.f_basis * antisym.transpose();
    for (int r = 0; r < basis.rows(); ++r)
        for (int c = 0; c < n; ++c) basis.at(r, c) += shear.at(r, c);
    return Subspace{basis};
}

} // namespace sqec::testkit
