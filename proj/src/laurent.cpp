#include "laurent.hpp"

#include <cstdio>
#include <mutex>
#include <numeric>

#include "error.hpp"

namespace sqec {

ExpVec expvec_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExpVec expvec_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

static long total_degree(const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0L); }

bool GradedLexGreater::operator()(const ExpVec& a, const ExpVec& b) const {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

bool lex_greater(const ExpVec& a, const ExpVec& b) { return a > b; }

LaurentPoly LaurentPoly::constant(int rank, const GaussianRational& c) {
    LaurentPoly p(rank);
    if (!c.is_zero()) p.terms_.emplace(ExpVec(rank, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int rank, const ExpVec& e, const GaussianRational& c) {
    if ((int)e.size() != rank) fail(errc::shape_error, "exponent vector length != rank");
    LaurentPoly p(rank);
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

LaurentPoly LaurentPoly::u_power(int rank, int var, int power) {
    ExpVec e(rank, 0);
    e.at(var) = power;
    return monomial(rank, e, GaussianRational(1));
}

LaurentPoly LaurentPoly::t_weight(int rank, const std::vector<int>& w) {
    if ((int)w.size() != rank) fail(errc::shape_error, "weight vector length != rank");
    ExpVec e(rank);
    for (int i = 0; i < rank; ++i) e[i] = 2 * w[i];
    return monomial(rank, e, GaussianRational(1));
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 &&
           terms_.begin()->first == ExpVec(rank_, 0);
}

bool LaurentPoly::is_one() const { return is_constant() && constant_term().is_one(); }

GaussianRational LaurentPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

GaussianRational LaurentPoly::constant_term() const { return coeff(ExpVec(rank_, 0)); }

void LaurentPoly::add_term(const ExpVec& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (rank_ != o.rank_) fail(errc::shape_error, "rank mismatch in +");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (rank_ != o.rank_) fail(errc::shape_error, "rank mismatch in -");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

namespace {

// dense rank-1 image: coefficients for exponents lo .. lo+size-1
struct Dense1 {
    int lo = 0;
    std::vector<GaussianRational> c;
};

Dense1 to_dense(const LaurentPoly& p) {
    Dense1 d;
    if (p.is_zero()) return d;
    int lo = p.min_exponents()[0], hi = p.max_exponents()[0];
    d.lo = lo;
    d.c.assign(hi - lo + 1, GaussianRational(0));
    for (const auto& [e, k] : p.terms()) d.c[e[0] - lo] = k;
    return d;
}

LaurentPoly from_dense(const Dense1& d) {
    LaurentPoly p(1);
    for (int i = (int)d.c.size() - 1; i >= 0; --i)
        if (!d.c[i].is_zero()) p.add_term(ExpVec{d.lo + i}, d.c[i]);
    return p;
}

} // namespace

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.rank_ != b.rank_) fail(errc::shape_error, "rank mismatch in *");
    if (a.is_zero() || b.is_zero()) return LaurentPoly(a.rank_);
    if (a.rank_ == 1 && a.terms_.size() > 2 && b.terms_.size() > 2) {
        Dense1 da = to_dense(a), db = to_dense(b);
        Dense1 r;
        r.lo = da.lo + db.lo;
        r.c.assign(da.c.size() + db.c.size() - 1, GaussianRational(0));
        for (std::size_t i = 0; i < da.c.size(); ++i) {
            if (da.c[i].is_zero()) continue;
            for (std::size_t j = 0; j < db.c.size(); ++j) {
                if (db.c[j].is_zero()) continue;
                r.c[i + j] += da.c[i] * db.c[j];
            }
        }
        return from_dense(r);
    }
    LaurentPoly r(a.rank_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(expvec_add(ea, eb), ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const GaussianRational& c) const {
    LaurentPoly r(rank_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& s) const {
    LaurentPoly r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(expvec_add(e, s), c);
    return r;
}

ExpVec LaurentPoly::min_exponents() const {
    ExpVec m(rank_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (int i = 0; i < rank_; ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

ExpVec LaurentPoly::max_exponents() const {
    ExpVec m(rank_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (int i = 0; i < rank_; ++i) m[i] = std::max(m[i], e[i]);
        }
    }
    return m;
}

LaurentPoly LaurentPoly::eval_var_one(int var) const {
    LaurentPoly r(rank_);
    for (const auto& [e, c] : terms_) {
        ExpVec e2 = e;
        e2[var] = 0;
        r.add_term(e2, c);
    }
    return r;
}

LaurentPoly LaurentPoly::diagonal() const {
    LaurentPoly r(1);
    for (const auto& [e, c] : terms_) r.add_term(ExpVec{(int)total_degree(e)}, c);
    return r;
}

GaussianRational LaurentPoly::eval_all_one() const {
    GaussianRational s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool LaurentPoly::has_negative_exponents() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return true;
    return false;
}

const std::pair<const ExpVec, GaussianRational>& LaurentPoly::lex_leading() const {
    if (terms_.empty()) fail(errc::internal_convention_error, "lex_leading of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (lex_greater(it->first, best->first)) best = it;
    return *best;
}

namespace {

// dense rank-1 route; nullopt when not an exact multiple
std::optional<LaurentPoly> try_exact_div_dense1(const LaurentPoly& a, const LaurentPoly& d) {
    Dense1 da = to_dense(a), dd = to_dense(d);
    int nd = (int)dd.c.size();
    if ((int)da.c.size() < nd) return std::nullopt;
    std::vector<GaussianRational> q(da.c.size() - nd + 1);
    GaussianRational lead_inv = dd.c[nd - 1].inverse();
    std::vector<GaussianRational>& r = da.c;
    for (int k = (int)q.size() - 1; k >= 0; --k) {
        GaussianRational f = r[k + nd - 1];
        if (f.is_zero()) continue;
        f *= lead_inv;
        q[k] = f;
        for (int i = 0; i < nd; ++i)
            if (!dd.c[i].is_zero()) r[k + i] -= f * dd.c[i];
    }
    for (const auto& x : r)
        if (!x.is_zero()) return std::nullopt;
    Dense1 out;
    out.lo = da.lo - dd.lo;
    out.c = std::move(q);
    return from_dense(out);
}

// quotient, or nullopt when not an exact multiple; inputs may be Laurent
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& a, const LaurentPoly& d) {
    if (d.is_zero()) return std::nullopt;
    if (a.is_zero()) return LaurentPoly::zero(a.rank());
    if (a.rank() == 1) return try_exact_div_dense1(a, d);
    ExpVec sa = a.min_exponents(), sd = d.min_exponents();
    ExpVec na(sa.size()), nd(sd.size());
    for (std::size_t i = 0; i < sa.size(); ++i) {
        na[i] = -sa[i];
        nd[i] = -sd[i];
    }
    LaurentPoly r = a.shifted(na);
    LaurentPoly dv = d.shifted(nd);
    const auto& ltd = *dv.terms().begin();
    LaurentPoly q(a.rank());
    while (!r.is_zero()) {
        const auto& ltr = *r.terms().begin();
        ExpVec diff = expvec_sub(ltr.first, ltd.first);
        for (int x : diff)
            if (x < 0) return std::nullopt;
        GaussianRational c = ltr.second / ltd.second;
        LaurentPoly m = LaurentPoly::monomial(a.rank(), diff, c);
        q += m;
        r -= m * dv;
    }
    // a = u^{sa} (r-part), d = u^{sd} (dv-part), r-part = q * dv-part
    return q.shifted(expvec_sub(sa, sd));
}

} // namespace

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
    auto q = try_exact_div(*this, d);
    if (!q) fail(errc::internal_convention_error, "exact_div: not divisible");
    return *q;
}

bool LaurentPoly::divisible_by(const LaurentPoly& d) const {
    return try_exact_div(*this, d).has_value();
}

int LaurentPoly::order_at_var_one(int var) const {
    if (is_zero()) return 0;
    if (rank_ == 1) {
        // dense synthetic division by (u - 1)
        Dense1 d = to_dense(*this);
        int count = 0;
        for (;;) {
            GaussianRational sum(0);
            for (const auto& x : d.c) sum += x;
            if (!sum.is_zero()) return count;
            // divide by (u - 1): q_k = sum_{i > k} c_i
            std::vector<GaussianRational> q(d.c.size() - 1);
            GaussianRational acc(0);
            for (int k = (int)d.c.size() - 2; k >= 0; --k) {
                acc += d.c[k + 1];
                q[k] = acc;
            }
            d.c = std::move(q);
            ++count;
            if (d.c.empty()) return count;
        }
    }
    LaurentPoly p = *this;
    LaurentPoly lin = LaurentPoly::u_power(rank_, var, 1) - LaurentPoly::one(rank_);
    int count = 0;
    while (p.eval_var_one(var).is_zero()) {
        p = p.exact_div(lin);
        ++count;
    }
    return count;
}

// ---------------------------------------------------------------------------
// gcd machinery (polynomial domain, nonnegative exponents)

namespace {

int degree_in(const LaurentPoly& p, int var) {
    int d = 0;
    for (const auto& [e, c] : p.terms()) d = std::max(d, e[var]);
    return d;
}

bool occurs(const LaurentPoly& p, int var) {
    for (const auto& [e, c] : p.terms())
        if (e[var] != 0) return true;
    return false;
}

LaurentPoly coeff_in_var(const LaurentPoly& p, int var, int deg) {
    LaurentPoly r(p.rank());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == deg) {
            ExpVec e2 = e;
            e2[var] = 0;
            r.add_term(e2, c);
        }
    }
    return r;
}

LaurentPoly unit_normalize(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.lex_leading().second.inverse());
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_in(const LaurentPoly& p, int var) {
    LaurentPoly c(p.rank());
    for (int d = 0; d <= degree_in(p, var); ++d) {
        LaurentPoly cd = coeff_in_var(p, var, d);
        if (cd.is_zero()) continue;
        c = c.is_zero() ? cd : poly_gcd(c, cd);
        if (c.is_constant()) break;
    }
    return unit_normalize(c);
}

// univariate fast path over the field Q(i): dense Euclid with monic remainders
LaurentPoly univar_gcd(const LaurentPoly& a0, const LaurentPoly& b0, int var) {
    auto pack = [&](const LaurentPoly& p) {
        std::vector<GaussianRational> c(degree_in(p, var) + 1);
        for (const auto& [e, k] : p.terms()) c[e[var]] = k;
        return c;
    };
    auto degree_of = [](const std::vector<GaussianRational>& c) {
        int d = (int)c.size() - 1;
        while (d > 0 && c[d].is_zero()) --d;
        return d;
    };
    auto make_monic = [&](std::vector<GaussianRational>& c, int d) {
        GaussianRational inv = c[d].inverse();
        for (int i = 0; i <= d; ++i)
            if (!c[i].is_zero()) c[i] *= inv;
    };
    std::vector<GaussianRational> a = pack(a0), b = pack(b0);
    int da = degree_of(a), db = degree_of(b);
    if (da < db) {
        std::swap(a, b);
        std::swap(da, db);
    }
    make_monic(a, da);
    make_monic(b, db);
    while (true) {
        // a mod b, both monic
        for (int k = da; k >= db; --k) {
            GaussianRational f = a[k];
            if (f.is_zero()) continue;
            a[k] = GaussianRational(0);
            for (int i = 0; i < db; ++i)
                if (!b[i].is_zero()) a[k - db + i] -= f * b[i];
        }
        int dr = db - 1;
        while (dr > 0 && a[dr].is_zero()) --dr;
        if (dr == 0 && a[0].is_zero()) {
            // b divides a
            LaurentPoly g(a0.rank());
            for (int i = 0; i <= db; ++i) {
                if (b[i].is_zero()) continue;
                ExpVec e(a0.rank(), 0);
                e[var] = i;
                g.add_term(e, b[i]);
            }
            return unit_normalize(g);
        }
        if (dr == 0) return LaurentPoly::one(a0.rank()); // nonzero constant remainder
        a.resize(dr + 1);
        make_monic(a, dr);
        std::swap(a, b);
        da = db;
        db = dr;
    }
}

// pseudo-remainder normalized to a primitive part after every reduction
// step; a primitive common divisor survives content removal (Gauss), and
// the step-by-step normalization keeps coefficient growth polynomial
LaurentPoly prim_rem(const LaurentPoly& a, const LaurentPoly& b, int var) {
    int db = degree_in(b, var);
    LaurentPoly lb = coeff_in_var(b, var, db);
    LaurentPoly r = a;
    while (!r.is_zero()) {
        int dr = degree_in(r, var);
        if (dr < db) break;
        LaurentPoly lr = coeff_in_var(r, var, dr);
        LaurentPoly shift = LaurentPoly::u_power(r.rank(), var, dr - db);
        r = r * lb - b * lr * shift;
        if (!r.is_zero()) {
            LaurentPoly c = content_in(r, var);
            if (!c.is_one()) r = r.exact_div(c);
            r = unit_normalize(r);
        }
    }
    return r;
}

bool effectively_univariate(const LaurentPoly& a, const LaurentPoly& b, int& var) {
    int found = -1;
    for (int i = 0; i < a.rank(); ++i) {
        if (occurs(a, i) || occurs(b, i)) {
            if (found >= 0) return false;
            found = i;
        }
    }
    var = found;
    return found >= 0;
}

int poly_gcd_depth = 0;

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
#ifdef SQEC_GCD_TRACE
    struct Depth { Depth(){++poly_gcd_depth;} ~Depth(){--poly_gcd_depth;} } depth_guard;
    {
        auto bits = [](const LaurentPoly& p){ std::size_t m=0; for (auto& [e,c]:p.terms()) m=std::max({m, mpz_sizeinbase(c.re().get_num().get_mpz_t(),2), mpz_sizeinbase(c.re().get_den().get_mpz_t(),2)}); return m; };
        fprintf(stderr, "%*spoly_gcd terms=%zu/%zu bits=%zu/%zu\n", poly_gcd_depth*2, "", a.term_count(), b.term_count(), bits(a), bits(b));
    }
#endif
    if (a.is_zero()) return unit_normalize(b);
    if (b.is_zero()) return unit_normalize(a);
    if (a.is_constant() || b.is_constant()) return LaurentPoly::one(a.rank());
    int uv = -1;
    if (effectively_univariate(a, b, uv)) return univar_gcd(a, b, uv);

    // main variable: highest-index variable occurring in either
    int var = -1;
    for (int i = a.rank() - 1; i >= 0; --i) {
        if (occurs(a, i) || occurs(b, i)) {
            var = i;
            break;
        }
    }
    if (var < 0) return LaurentPoly::one(a.rank());

    LaurentPoly ca = content_in(a, var), cb = content_in(b, var);
    LaurentPoly ppa = a.exact_div(ca), ppb = b.exact_div(cb);
    LaurentPoly cg = poly_gcd(ca, cb);

    LaurentPoly A = ppa, B = ppb;
    if (degree_in(A, var) < degree_in(B, var)) std::swap(A, B);
    LaurentPoly ppg(a.rank());
    // primitive remainder sequence
    for (;;) {
        if (degree_in(B, var) == 0) {
            ppg = B.is_zero() ? unit_normalize(A) : LaurentPoly::one(a.rank());
            break;
        }
        LaurentPoly R = prim_rem(A, B, var);
        if (R.is_zero()) {
            ppg = B.exact_div(content_in(B, var));
            break;
        }
        A = B;
        B = R;
    }
    return unit_normalize(cg * ppg);
}

} // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly::zero(a.rank());
    auto strip = [](const LaurentPoly& p) {
        if (p.is_zero()) return p;
        ExpVec m = p.min_exponents();
        ExpVec neg(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
        return p.shifted(neg);
    };
    return unit_normalize(poly_gcd(strip(a), strip(b)));
}

const LaurentPoly& cyclotomic(int d) {
    static std::map<int, LaurentPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    for (int k = 1; k <= d; ++k) {
        if (d % k != 0 || cache.count(k)) continue;
        LaurentPoly p = LaurentPoly::u_power(1, 0, k) - LaurentPoly::one(1);
        for (int e = 1; e < k; ++e)
            if (k % e == 0) p = p.exact_div(cache.at(e));
        cache.emplace(k, std::move(p));
    }
    return cache.at(d);
}

// ---------------------------------------------------------------------------
// rendering

std::string term_str(const GaussianRational& c, const ExpVec& e, const std::string& varname) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        std::string name = e.size() == 1 ? varname : varname + std::to_string(i + 1);
        std::string part;
        if (e[i] % 2 == 0) {
            int n = e[i] / 2;
            part = (n == 1) ? name : name + "^" + std::to_string(n);
        } else {
            part = name + "^(" + std::to_string(e[i]) + "/2)";
        }
        if (!mono.empty()) mono += "*";
        mono += part;
    }
    if (mono.empty()) return c.str();
    if (c.is_one()) return mono;
    if (c == GaussianRational(-1)) return "-" + mono;
    if (c.re() != 0 && c.im() != 0) return "(" + c.str() + ")*" + mono;
    return c.str() + "*" + mono;
}

std::string join_terms(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const std::string& p = parts[i];
        if (!p.empty() && p[0] == '-')
            out += " - " + p.substr(1);
        else
            out += " + " + p;
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::vector<std::string> parts;
    for (const auto& [e, c] : terms_) parts.push_back(term_str(c, e, "t"));
    return join_terms(parts);
}

} // namespace sqec
