#include "ruledres/polyx.hpp"

#include <cctype>
#include <sstream>

namespace ruledres {

PolyX PolyX::monomial(const BaseElem& coeff, int deg) {
    PolyX p;
    if (coeff.is_zero()) return p;
    p.c_.assign(deg + 1, BaseElem());
    p.c_[deg] = coeff;
    return p;
}

PolyX operator+(const PolyX& a, const PolyX& b) {
    std::vector<BaseElem> c(std::max(a.c_.size(), b.c_.size()), BaseElem());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return PolyX(std::move(c));
}

PolyX operator-(const PolyX& a, const PolyX& b) { return a + (-b); }

PolyX PolyX::operator-() const {
    std::vector<BaseElem> c(c_);
    for (auto& x : c) x = -x;
    return PolyX(std::move(c));
}

PolyX operator*(const PolyX& a, const PolyX& b) {
    if (a.is_zero() || b.is_zero()) return PolyX();
    std::vector<BaseElem> c(a.c_.size() + b.c_.size() - 1, BaseElem());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return PolyX(std::move(c));
}

PolyX operator/(const PolyX& a, const BaseElem& b) {
    if (b.is_zero()) throw std::domain_error("PolyX: division by zero");
    std::vector<BaseElem> c(a.c_);
    for (auto& x : c) x = x / b;
    return PolyX(std::move(c));
}

PolyX PolyX::pow(long e) const {
    if (e < 0) {
        if (degree() > 0) throw std::domain_error("PolyX: negative power of a polynomial in X");
        return PolyX(coeff(0).pow(e));
    }
    PolyX r{BaseElem(1L)};
    PolyX base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string PolyX::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        BaseElem ci = coeff(i);
        if (ci.is_zero()) continue;
        std::string s = ci.str();
        bool neg = !s.empty() && s[0] == '-';
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        if (neg) s = s.substr(1);
        bool trivial = (s == "1");
        if (i == 0) {
            out << s;
        } else {
            if (!trivial) {
                // parenthesize composite coefficients
                bool atomic = s.find_first_of("+-") == std::string::npos || s[0] == '(';
                out << (atomic ? s : "(" + s + ")") << "*";
            }
            out << "X";
            if (i != 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

PolyX expand(const PolyX& f, const BaseElem& alpha) {
    if (f.is_zero() || alpha.is_zero()) return f;
    int n = f.degree();
    std::vector<BaseElem> b;
    b.reserve(n + 1);
    for (int i = 0; i <= n; ++i) b.push_back(f.coeff(i));
    // repeated synthetic division by (X - alpha)
    for (int j = 0; j < n; ++j)
        for (int i = n - 1; i >= j; --i) b[i] = b[i] + alpha * b[i + 1];
    return PolyX(std::move(b));
}

// ----------------------------------------------------------------- parser

namespace {

struct Parser {
    const BaseFieldDesc& K0;
    const std::string& s;
    std::size_t pos = 0;
    bool allow_x;

    Parser(const BaseFieldDesc& K0, const std::string& s, bool allow_x)
        : K0(K0), s(s), allow_x(allow_x) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    PolyX parse() {
        PolyX r = expr();
        if (peek() != '\0') throw ParseError("unexpected character '" + std::string(1, peek()) + "'", pos);
        return r;
    }

    PolyX expr() {
        PolyX r = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                r = r + term();
            } else if (c == '-') {
                ++pos;
                r = r - term();
            } else {
                return r;
            }
        }
    }

    PolyX term() {
        PolyX r = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                r = r * factor();
            } else if (c == '/') {
                std::size_t at = pos;
                ++pos;
                PolyX d = factor();
                if (d.degree() > 0) throw ParseError("division by a polynomial in X", at);
                if (d.is_zero()) throw ParseError("division by zero", at);
                r = r / d.coeff(0);
            } else {
                return r;
            }
        }
    }

    PolyX factor() {
        PolyX b = base();
        if (peek() == '^') {
            std::size_t at = pos;
            ++pos;
            long e = integer();
            if (e < 0 && b.degree() > 0)
                throw ParseError("negative power of a polynomial in X", at);
            if (e < 0 && b.is_zero()) throw ParseError("negative power of zero", at);
            return b.pow(e);
        }
        return b;
    }

    PolyX base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            PolyX r = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos);
            ++pos;
            return r;
        }
        if (c == '-') {
            ++pos;
            return -factor();
        }
        if (c == 'T') {
            if (!K0.allows_t())
                throw ParseError("'T' is not an element of the rational q-adic field", pos);
            ++pos;
            return PolyX(BaseElem::var_t());
        }
        if (c == 'X') {
            if (!allow_x) throw ParseError("'X' is not allowed in a coefficient expression", pos);
            ++pos;
            return PolyX::var_x();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return PolyX(BaseElem(mpq_class(natural())));
        }
        throw ParseError(c == '\0' ? "unexpected end of input"
                                   : "unexpected character '" + std::string(1, c) + "'",
                         pos);
    }

    long integer() {
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer exponent", pos);
        mpz_class n = natural();
        if (!n.fits_slong_p()) throw ParseError("exponent too large", pos);
        return neg ? -n.get_si() : n.get_si();
    }

    mpz_class natural() {
        skip_ws();
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            digits += s[pos++];
        return mpz_class(digits);
    }
};

}  // namespace

PolyX parse_polyx(const BaseFieldDesc& K0, const std::string& s) {
    return Parser(K0, s, true).parse();
}

BaseElem parse_elem(const BaseFieldDesc& K0, const std::string& s) {
    return Parser(K0, s, false).parse().coeff(0);
}

}  // namespace ruledres
