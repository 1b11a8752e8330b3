#include "gaussian.hpp"

#include "error.hpp"

namespace sqec {

GaussianRational::GaussianRational(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) fail(errc::invalid_ratfunc, "zero denominator in rational literal");
    canon();
}

GaussianRational GaussianRational::i_pow(long k) {
    long m = ((k % 4) + 4) % 4;
    switch (m) {
        case 0: return GaussianRational(1);
        case 1: return i();
        case 2: return GaussianRational(-1);
        default: return -i();
    }
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = m;
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) fail(errc::invalid_ratfunc, "division by zero in Q(i)");
    mpq_class n = o.norm();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class m = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = r;
    im_ = m;
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    GaussianRational one(1);
    one /= *this;
    return one;
}

GaussianRational GaussianRational::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    GaussianRational acc(1), base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return mpq_class(0);
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return mpq_class(rn, rd);
}

std::optional<GaussianRational> GaussianRational::sqrt() const {
    if (is_zero()) return GaussianRational(0);
    // w = x + iy with w^2 = re + im*i needs x^2 + y^2 = |z| rational and
    // x^2 = (|z| + re)/2 a rational square.
    auto m = rational_sqrt(norm());
    if (!m) return std::nullopt;
    mpq_class xx = (*m + re_) / 2;
    auto x = rational_sqrt(xx);
    if (x) {
        if (*x != 0) {
            mpq_class y = im_ / (2 * (*x));
            GaussianRational w(*x, y);
            if (w * w == *this) {
                if (*x > 0 || (*x == 0 && y >= 0)) return w;
                return -w;
            }
        } else {
            // re <= 0, im == 0: purely imaginary root
            auto y = rational_sqrt(-re_);
            if (y) {
                GaussianRational w(mpq_class(0), *y);
                if (w * w == *this) return w;
            }
        }
    }
    return std::nullopt;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out = rational_str(re_);
    if (im_ != 0) {
        mpq_class a = abs(im_);
        std::string ipart = (a == 1) ? "i" : rational_str(a) + "*i";
        if (out.empty())
            out = (im_ < 0 ? "-" : "") + ipart;
        else
            out += (im_ < 0 ? "-" : "+") + ipart;
    }
    return out;
}

} // namespace sqec
