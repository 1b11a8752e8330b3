#include "quadspace.hpp"

#include "error.hpp"

namespace sqec {

QuadraticSpace::QuadraticSpace(QMat gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) fail(errc::shape_error, "gram matrix not square");
    if (!gram_.is_symmetric()) fail(errc::shape_error, "gram matrix not symmetric");
    if (gram_.rows() > 0 && gram_.det().is_zero())
        fail(errc::shape_error, "quadratic form is degenerate");
}

GaussianRational QuadraticSpace::q(const QVec& x, const QVec& y) const {
    return dot(x, gram_.apply(y));
}

Subspace::Subspace(QMat b) : basis(std::move(b)) {
    if (basis.cols() > 0 && basis.rank() != basis.cols())
        fail(errc::shape_error, "subspace basis columns are dependent");
}

bool is_isotropic(const QuadraticSpace& space, const Subspace& sub) {
    if (sub.basis.rows() != space.dim()) fail(errc::shape_error, "subspace/space dimension mismatch");
    QMat m = sub.basis.transpose() * space.gram() * sub.basis;
    return m.is_zero();
}

QMat hyperbolic_partner(const QuadraticSpace& space, const QMat& k_basis) {
    int r = space.dim(), k = k_basis.cols();
    QMat pairing = k_basis.transpose() * space.gram(); // k x r, maps x to (q(e_i,x))_i
    QMat f(r, k);
    for (int j = 0; j < k; ++j) {
        QVec rhs(k);
        rhs[j] = GaussianRational(1);
        auto g = pairing.solve(rhs);
        if (!g) fail(errc::internal_convention_error, "dual lift system inconsistent");
        QVec fj = *g;
        // Gram-Schmidt without square roots
        QVec ej = k_basis.column(j);
        fj = vec_sub(fj, vec_scaled(ej, space.q(fj, fj) / GaussianRational(2)));
        for (int i = 0; i < j; ++i) {
            QVec fi = f.column(i);
            fj = vec_sub(fj, vec_scaled(k_basis.column(i), space.q(fi, fj)));
        }
        f.set_column(j, fj);
    }
    return f;
}

HyperbolicFrame hyperbolic_extend(const QuadraticSpace& space, const Subspace& lambda) {
    int r = space.dim();
    if (r % 2 != 0) fail(errc::not_maximal_isotropic, "odd-dimensional space has no maximal isotropic of half rank");
    if (lambda.dim() != r / 2)
        fail(errc::not_maximal_isotropic, "subspace is not of half dimension");
    if (!is_isotropic(space, lambda))
        fail(errc::not_maximal_isotropic, "subspace is not isotropic");
    HyperbolicFrame fr;
    fr.e_basis = lambda.basis;
    fr.f_basis = hyperbolic_partner(space, lambda.basis);
    return fr;
}

namespace {

// interleaved frame determinant: coordinate of e1^f1^...^en^fn
GaussianRational frame_wedge(const HyperbolicFrame& fr) {
    int r = fr.e_basis.rows(), n = fr.pairs();
    QMat m(r, 2 * n);
    for (int j = 0; j < n; ++j) {
        m.set_column(2 * j, fr.e_basis.column(j));
        m.set_column(2 * j + 1, fr.f_basis.column(j));
    }
    return m.det();
}

struct Diagonalization {
    QMat basis;  // columns: new basis in current coordinates
    QVec diag;   // q-values on the new basis
};

Diagonalization diagonalize(const QuadraticSpace& space, const QMat& basis_in) {
    QMat basis = basis_in;
    int m = basis.cols();
    auto gram_of = [&](const QMat& b) { return b.transpose() * space.gram() * b; };
    for (int k = 0; k < m; ++k) {
        QMat g = gram_of(basis);
        if (g.at(k, k).is_zero()) {
            int l = -1;
            for (int i = k + 1; i < m; ++i)
                if (!g.at(i, i).is_zero()) {
                    l = i;
                    break;
                }
            if (l >= 0) {
                QVec a = basis.column(k), b = basis.column(l);
                basis.set_column(k, b);
                basis.set_column(l, a);
            } else {
                // all residual diagonal entries vanish: mix a pair with q(i,j) != 0
                bool found = false;
                for (int i = k; i < m && !found; ++i)
                    for (int j = i + 1; j < m && !found; ++j)
                        if (!g.at(i, j).is_zero()) {
                            QVec vi = basis.column(i), vj = basis.column(j);
                            QVec sum(vi.size());
                            for (std::size_t s = 0; s < vi.size(); ++s) sum[s] = vi[s] + vj[s];
                            basis.set_column(i, sum);
                            if (i != k) {
                                QVec a = basis.column(k);
                                basis.set_column(k, basis.column(i));
                                basis.set_column(i, a);
                            }
                            found = true;
                        }
                if (!found) fail(errc::internal_convention_error, "degenerate block while diagonalizing");
            }
            g = gram_of(basis);
        }
        GaussianRational inv = g.at(k, k).inverse();
        for (int c = k + 1; c < m; ++c) {
            GaussianRational f = g.at(k, c) * inv;
            if (f.is_zero()) continue;
            QVec vc = vec_sub(basis.column(c), vec_scaled(basis.column(k), f));
            basis.set_column(c, vc);
        }
    }
    QMat g = gram_of(basis);
    QVec d(m);
    for (int i = 0; i < m; ++i) d[i] = g.at(i, i);
    return {basis, d};
}

// isotropic vector in the span of basis columns, or nullopt (pairwise
// square completion only; a miss is reported upstream as an obstruction)
std::optional<QVec> find_isotropic_vector(const QuadraticSpace& space, const QMat& basis) {
    int m = basis.cols();
    for (int j = 0; j < m; ++j) {
        QVec v = basis.column(j);
        if (space.q(v, v).is_zero()) return v;
    }
    auto dg = diagonalize(space, basis);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            auto gamma = (dg.diag[i] / dg.diag[j]).sqrt();
            if (!gamma) continue;
            // d_i + d_j y^2 = 0 with y = -i*gamma, gamma^2 = d_i/d_j
            QVec v = dg.basis.column(i);
            QVec w = vec_scaled(dg.basis.column(j), -GaussianRational::i() * *gamma);
            for (std::size_t s = 0; s < v.size(); ++s) v[s] += w[s];
            return v;
        }
    }
    return std::nullopt;
}

} // namespace

HyperbolicFrame hyperbolic_normal_form(const QuadraticSpace& space) {
    int r = space.dim();
    HyperbolicFrame fr;
    fr.e_basis = QMat(r, 0);
    fr.f_basis = QMat(r, 0);
    QMat basis = QMat::identity(r);
    std::vector<QVec> es, fs;
    while (basis.cols() >= 2) {
        auto v = find_isotropic_vector(space, basis);
        if (!v)
            fail(errc::normal_form_obstruction,
                 "no isotropic vector over Q(i) by pairwise square completion");
        // complete v to a hyperbolic pair inside the current subspace
        int m = basis.cols();
        QVec vq = space.gram().apply(*v);
        QMat row(1, m);
        for (int c = 0; c < m; ++c) row.at(0, c) = dot(vq, basis.column(c));
        auto sol = row.solve({GaussianRational(1)});
        if (!sol) fail(errc::internal_convention_error, "pairing vector not found");
        QVec w(r);
        for (int c = 0; c < m; ++c) {
            QVec bc = vec_scaled(basis.column(c), (*sol)[c]);
            for (int s = 0; s < r; ++s) w[s] += bc[s];
        }
        w = vec_sub(w, vec_scaled(*v, space.q(w, w) / GaussianRational(2)));
        es.push_back(*v);
        fs.push_back(w);
        // restrict to the orthogonal complement of (v, w) inside the current span
        QMat pair_rows(2, m);
        QVec wq = space.gram().apply(w);
        for (int c = 0; c < m; ++c) {
            pair_rows.at(0, c) = dot(vq, basis.column(c));
            pair_rows.at(1, c) = dot(wq, basis.column(c));
        }
        std::vector<QVec> null = pair_rows.nullspace();
        QMat next(r, (int)null.size());
        for (int c = 0; c < (int)null.size(); ++c) {
            QVec col(r);
            for (int j = 0; j < m; ++j) {
                QVec bj = vec_scaled(basis.column(j), null[c][j]);
                for (int s = 0; s < r; ++s) col[s] += bj[s];
            }
            next.set_column(c, col);
        }
        basis = next;
    }
    if (basis.cols() == 1) {
        QVec b = basis.column(0);
        GaussianRational d = space.q(b, b);
        auto gamma = d.sqrt();
        if (!gamma)
            fail(errc::normal_form_obstruction, "residual scalar is not a square in Q(i)");
        fr.unit = vec_scaled(b, gamma->inverse());
    }
    fr.e_basis = QMat::from_columns(r, es);
    fr.f_basis = QMat::from_columns(r, fs);
    return fr;
}

bool orientation_validate(const QuadraticSpace& space, const Orientation& o) {
    GaussianRational d = space.dim() == 0 ? GaussianRational(1) : space.gram().det();
    return (o.scalar * o.scalar * d).is_one();
}

Orientation canonical_orientation(const QuadraticSpace& space, const Subspace& lambda) {
    HyperbolicFrame fr = hyperbolic_extend(space, lambda);
    int n = fr.pairs();
    GaussianRational w = n == 0 ? GaussianRational(1) : frame_wedge(fr);
    return {GaussianRational::i_pow(-n) * w};
}

int isotropic_sign(const QuadraticSpace& space, const Orientation& o, const Subspace& lambda) {
    if (!orientation_validate(space, o))
        fail(errc::invalid_orientation, "orientation scalar fails c^2 det(gram) = 1");
    HyperbolicFrame fr = hyperbolic_extend(space, lambda);
    int n = fr.pairs();
    GaussianRational w = n == 0 ? GaussianRational(1) : frame_wedge(fr);
    GaussianRational sigma = o.scalar / (GaussianRational::i_pow(-n) * w);
    if (sigma.is_one()) return 1;
    if (sigma == GaussianRational(-1)) return -1;
    fail(errc::internal_convention_error, "isotropic sign is not +-1");
}

std::pair<QuadraticSpace, Orientation> reduce(const QuadraticSpace& space, const Orientation& o,
                                              const Subspace& k_sub) {
    if (!orientation_validate(space, o))
        fail(errc::invalid_orientation, "orientation scalar fails c^2 det(gram) = 1");
    if (!is_isotropic(space, k_sub)) fail(errc::not_isotropic, "reduction subspace is not isotropic");
    int r = space.dim(), k = k_sub.dim();
    if (k == 0) return {space, o};

    QMat e = k_sub.basis;
    QMat f = hyperbolic_partner(space, e);

    // K-perp, then a complement of K inside it (column-lex-first candidates)
    QMat perp_rows = e.transpose() * space.gram(); // k x r
    std::vector<QVec> perp = perp_rows.nullspace();
    int m = r - 2 * k;
    QMat sel = e;
    std::vector<QVec> complement;
    for (const QVec& cand : perp) {
        if ((int)complement.size() == m) break;
        QMat trial = sel.hstack(QMat::from_columns(r, {cand}));
        if (trial.rank() == sel.cols() + 1) {
            complement.push_back(cand);
            sel = trial;
        }
    }
    if ((int)complement.size() != m)
        fail(errc::internal_convention_error, "complement construction failed");

    // make the complement orthogonal to K + K' (only the f-side needs cleaning)
    QMat w(r, m);
    for (int c = 0; c < m; ++c) {
        QVec col = complement[c];
        for (int j = 0; j < k; ++j) {
            GaussianRational a = space.q(f.column(j), col);
            col = vec_sub(col, vec_scaled(e.column(j), a));
        }
        w.set_column(c, col);
    }

    QMat reduced_gram = w.transpose() * space.gram() * w;
    QuadraticSpace reduced(reduced_gram);

    QMat full(r, r);
    for (int c = 0; c < m; ++c) full.set_column(c, w.column(c));
    for (int j = 0; j < k; ++j) {
        full.set_column(m + 2 * j, e.column(j));
        full.set_column(m + 2 * j + 1, f.column(j));
    }
    GaussianRational dm = full.det();
    if (dm.is_zero()) fail(errc::internal_convention_error, "reduction frame is degenerate");
    Orientation induced{o.scalar / (GaussianRational::i_pow(-k) * dm)};
    if (!orientation_validate(reduced, induced))
        fail(errc::internal_convention_error, "induced orientation fails validity");
    return {reduced, induced};
}

bool frame_valid(const QuadraticSpace& space, const HyperbolicFrame& fr) {
    int n = fr.pairs();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!space.q(fr.e_basis.column(i), fr.e_basis.column(j)).is_zero()) return false;
            if (!space.q(fr.f_basis.column(i), fr.f_basis.column(j)).is_zero()) return false;
            GaussianRational expect(i == j ? 1 : 0);
            if (space.q(fr.e_basis.column(i), fr.f_basis.column(j)) != expect) return false;
        }
    }
    if (fr.unit) {
        if (!space.q(*fr.unit, *fr.unit).is_one()) return false;
        for (int i = 0; i < n; ++i) {
            if (!space.q(*fr.unit, fr.e_basis.column(i)).is_zero()) return false;
            if (!space.q(*fr.unit, fr.f_basis.column(i)).is_zero()) return false;
        }
    }
    return true;
}

} // namespace sqec
