#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

#include "ruledres/extrat.hpp"

namespace ruledres {

/// Dense polynomial in T with rational coefficients, trimmed.
class QPoly {
public:
    QPoly() = default;
    QPoly(const mpq_class& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit QPoly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }

    static QPoly monomial(const mpq_class& coeff, int deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    int ord() const;  // lowest nonzero index, -1 for zero
    mpq_class coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : mpq_class(0);
    }
    mpq_class lead() const { return is_zero() ? mpq_class(0) : c_.back(); }
    mpq_class eval0() const { return coeff(0); }

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly operator-() const;
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    /// Euclidean division; divisor must be nonzero.
    static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
    static QPoly gcd(QPoly a, QPoly b);  // monic gcd, 0 for (0,0)

    QPoly scaled(const mpq_class& s) const;
    std::string str(const std::string& var = "T") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpq_class> c_;
};

/// Element of Q or Q(T): a reduced fraction of polynomials in T with
/// monic denominator. Elements of the q-adic base field are the
/// constant fractions.
class BaseElem {
public:
    BaseElem() : num_(), den_(mpq_class(1)) {}
    BaseElem(const mpq_class& c) : num_(c), den_(mpq_class(1)) {}
    BaseElem(long n) : num_(mpq_class(n)), den_(mpq_class(1)) {}
    BaseElem(QPoly num, QPoly den);

    static BaseElem var_t() { return BaseElem(QPoly::monomial(1, 1), QPoly(mpq_class(1))); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    mpq_class as_rational() const;  // throws if not constant

    friend BaseElem operator+(const BaseElem& a, const BaseElem& b);
    friend BaseElem operator-(const BaseElem& a, const BaseElem& b);
    friend BaseElem operator*(const BaseElem& a, const BaseElem& b);
    friend BaseElem operator/(const BaseElem& a, const BaseElem& b);
    BaseElem operator-() const;
    BaseElem pow(long e) const;  // negative e inverts; 0^negative throws
    friend bool operator==(const BaseElem& a, const BaseElem& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BaseElem& a, const BaseElem& b) { return !(a == b); }

    std::string str() const;

private:
    QPoly num_, den_;
};

/// Description of the computable valued base field (k, v).
struct BaseFieldDesc {
    enum class Kind { RatQadic, RatfuncTadic };

    Kind kind = Kind::RatfuncTadic;
    mpz_class q = 0;          // prime, RatQadic only
    bool assume_mu_p = false; // hypothesis flag: k contains a primitive p-th root of unity

    static BaseFieldDesc rat_qadic(const mpz_class& q, bool assume_mu_p = true);
    static BaseFieldDesc ratfunc_tadic(bool assume_mu_p = true);

    mpz_class residue_char() const { return kind == Kind::RatQadic ? q : mpz_class(0); }
    RatGroup value_group() const { return RatGroup(mpq_class(1)); }
    bool allows_t() const { return kind == Kind::RatfuncTadic; }
};

/// Element of the residue field: F_q (canonical 0 <= r < q) or Q.
class ResElem {
public:
    ResElem() : q_(0), rat_(0) {}

    static ResElem in_fq(const mpz_class& v, const mpz_class& q);
    static ResElem in_q(const mpq_class& v);
    /// Image of a rational constant in the residue field of K0.
    static ResElem from_rational(const BaseFieldDesc& K0, const mpq_class& v);

    bool is_fq() const { return q_ != 0; }
    bool is_zero() const;
    const mpz_class& modulus() const { return q_; }
    const mpz_class& fq_value() const { return fq_; }
    const mpq_class& rat_value() const { return rat_; }

    friend ResElem operator+(const ResElem& a, const ResElem& b);
    friend ResElem operator-(const ResElem& a, const ResElem& b);
    friend ResElem operator*(const ResElem& a, const ResElem& b);
    friend bool operator==(const ResElem& a, const ResElem& b);
    friend bool operator!=(const ResElem& a, const ResElem& b) { return !(a == b); }

    std::string str() const;

private:
    mpz_class q_;   // 0 for characteristic-zero residue fields
    mpz_class fq_;  // canonical representative mod q_
    mpq_class rat_;
};

/// q-adic or T-adic value of x; v(0) = inf.
ExtRat value(const BaseFieldDesc& K0, const BaseElem& x);

/// Residue of x; requires value(K0, x) >= 0.
ResElem residue(const BaseFieldDesc& K0, const BaseElem& x);

/// Canonical element q^w or T^w; requires w in the value group (integer).
BaseElem elem_with_value(const BaseFieldDesc& K0, const ExtRat& w);

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos(pos) {}
    std::size_t pos;
};

/// Parse a coefficient expression (rationals, T, + - * / ^, parentheses).
BaseElem parse_elem(const BaseFieldDesc& K0, const std::string& s);

}  // namespace ruledres
