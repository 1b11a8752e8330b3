#include "polyparse.hpp"

#include <cctype>

#include "error.hpp"

namespace sqec {

namespace {

struct Parser {
    const std::string& src;
    int rank;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit Parser(const std::string& s, int r) : src(s), rank(r) {}

    [[noreturn]] void diag(const std::string& msg) const {
        fail(errc::parse_error,
             std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
    }

    void advance() {
        if (pos < src.size()) {
            if (src[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace((unsigned char)src[pos])) advance();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) diag(std::string("expected '") + c + "'");
    }

    mpz_class digits() {
        skip_ws();
        if (pos >= src.size() || !std::isdigit((unsigned char)src[pos])) diag("expected digits");
        std::string d;
        while (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
            d += src[pos];
            advance();
        }
        return mpz_class(d);
    }

    long integer() {
        bool neg = accept('-');
        mpz_class d = digits();
        if (!d.fits_slong_p()) diag("exponent out of range");
        long v = d.get_si();
        return neg ? -v : v;
    }

    LaurentPoly expr() {
        bool neg = accept('-');
        LaurentPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    LaurentPoly term() {
        LaurentPoly acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    LaurentPoly factor() {
        LaurentPoly base = atom();
        if (accept('^')) {
            long k = integer();
            return poly_pow(base, k);
        }
        return base;
    }

    LaurentPoly poly_pow(const LaurentPoly& base, long k) {
        if (k < 0) {
            if (base.term_count() != 1) diag("negative power of a non-monomial");
            const auto& [e, c] = *base.terms().begin();
            ExpVec ne(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
            return poly_pow(LaurentPoly::monomial(rank, ne, c.inverse()), -k);
        }
        LaurentPoly acc = LaurentPoly::one(rank);
        for (long i = 0; i < k; ++i) acc *= base;
        return acc;
    }

    LaurentPoly atom() {
        char c = peek();
        if (c == '(') {
            advance();
            LaurentPoly inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit((unsigned char)c)) {
            mpz_class num = digits();
            mpz_class den = 1;
            if (accept('/')) {
                den = digits();
                if (den == 0) diag("zero denominator in rational literal");
            }
            return LaurentPoly::constant(rank, GaussianRational(mpq_class(num, den)));
        }
        if (c == 'i') {
            advance();
            return LaurentPoly::constant(rank, GaussianRational::i());
        }
        if (c == 't') {
            advance();
            if (rank == 0) diag("no variables in a constant expression");
            if (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
                mpz_class idx = digits();
                if (rank == 1) diag("rank-1 expressions use the bare variable t");
                if (idx < 1 || idx > rank) diag("unknown variable t" + idx.get_str());
                return LaurentPoly::t_weight(rank, unit_weight(idx.get_si() - 1));
            }
            if (rank != 1) diag("rank > 1 expressions must index variables t1..tr");
            return LaurentPoly::t_weight(rank, {1});
        }
        diag("expected a rational, 'i', a variable or '('");
    }

    std::vector<int> unit_weight(int i) const {
        std::vector<int> w(rank, 0);
        w[i] = 1;
        return w;
    }

    LaurentPoly run() {
        LaurentPoly p = expr();
        skip_ws();
        if (pos != src.size()) diag("unexpected trailing input");
        return p;
    }
};

} // namespace

LaurentPoly parse_poly(const std::string& src, int rank) {
    Parser p(src, rank);
    return p.run();
}

GaussianRational parse_gaussian(const std::string& src) {
    return parse_poly(src, 0).constant_term();
}

} // namespace sqec
