#include "ruledres/basefield.hpp"

#include <sstream>

namespace ruledres {

// ---------------------------------------------------------------- QPoly

QPoly QPoly::monomial(const mpq_class& coeff, int deg) {
    QPoly p;
    if (coeff == 0) return p;
    p.c_.assign(deg + 1, mpq_class(0));
    p.c_[deg] = coeff;
    return p;
}

int QPoly::ord() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly QPoly::operator-() const {
    std::vector<mpq_class> c(c_);
    for (auto& x : c) x = -x;
    return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(c));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
    std::vector<mpq_class> rem(a.c_);
    std::vector<mpq_class> quo;
    int db = b.degree();
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr >= db) quo.assign(dr - db + 1, mpq_class(0));
    while (dr >= db) {
        if (rem[dr] != 0) {
            mpq_class f = rem[dr] / b.c_.back();
            quo[dr - db] = f;
            for (int i = 0; i <= db; ++i) rem[dr - db + i] -= f * b.c_[i];
        }
        --dr;
    }
    q = QPoly(std::move(quo));
    r = QPoly(std::move(rem));
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = a.scaled(1 / a.lead());  // monic
    return a;
}

QPoly QPoly::scaled(const mpq_class& s) const {
    if (s == 0) return QPoly();
    std::vector<mpq_class> c(c_);
    for (auto& x : c) x *= s;
    return QPoly(std::move(c));
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        mpq_class ci = coeff(i);
        if (ci == 0) continue;
        if (first) {
            if (ci < 0) out << "-";
        } else {
            out << (ci < 0 ? " - " : " + ");
        }
        mpq_class a = abs(ci);
        if (i == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << var;
            if (i != 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

// ------------------------------------------------------------- BaseElem

BaseElem::BaseElem(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("BaseElem: zero denominator");
    if (num_.is_zero()) {
        den_ = QPoly(mpq_class(1));
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        QPoly q, r;
        QPoly::divmod(num_, g, q, r);
        num_ = q;
        QPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    // monic denominator, sign pushed to the numerator
    mpq_class lc = den_.lead();
    if (lc != 1) {
        num_ = num_.scaled(1 / lc);
        den_ = den_.scaled(1 / lc);
    }
}

mpq_class BaseElem::as_rational() const {
    if (!is_constant()) throw std::domain_error("BaseElem: not a constant");
    return num_.coeff(0) / den_.coeff(0);
}

BaseElem operator+(const BaseElem& a, const BaseElem& b) {
    return BaseElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
BaseElem operator-(const BaseElem& a, const BaseElem& b) {
    return BaseElem(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
BaseElem operator*(const BaseElem& a, const BaseElem& b) {
    return BaseElem(a.num_ * b.num_, a.den_ * b.den_);
}
BaseElem operator/(const BaseElem& a, const BaseElem& b) {
    if (b.is_zero()) throw std::domain_error("BaseElem: division by zero");
    return BaseElem(a.num_ * b.den_, a.den_ * b.num_);
}
BaseElem BaseElem::operator-() const { return BaseElem(-num_, den_); }

BaseElem BaseElem::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw std::domain_error("BaseElem: negative power of zero");
        return BaseElem(den_, num_).pow(-e);
    }
    BaseElem r(mpq_class(1));
    BaseElem base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string BaseElem::str() const {
    if (den_.degree() <= 0) {
        // constant denominator is 1 after normalization
        if (num_.degree() <= 0) return num_.coeff(0).get_str();
        return num_.str();
    }
    std::string n = num_.degree() <= 0 ? num_.coeff(0).get_str() : "(" + num_.str() + ")";
    return n + "/(" + den_.str() + ")";
}

// -------------------------------------------------------- BaseFieldDesc

BaseFieldDesc BaseFieldDesc::rat_qadic(const mpz_class& q, bool assume_mu_p) {
    if (q < 2 || mpz_probab_prime_p(q.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("base field: q must be prime");
    BaseFieldDesc d;
    d.kind = Kind::RatQadic;
    d.q = q;
    d.assume_mu_p = assume_mu_p;
    return d;
}

BaseFieldDesc BaseFieldDesc::ratfunc_tadic(bool assume_mu_p) {
    BaseFieldDesc d;
    d.kind = Kind::RatfuncTadic;
    d.assume_mu_p = assume_mu_p;
    return d;
}

// --------------------------------------------------------------- ResElem

ResElem ResElem::in_fq(const mpz_class& v, const mpz_class& q) {
    if (q < 2) throw std::domain_error("ResElem: invalid modulus");
    ResElem r;
    r.q_ = q;
    mpz_mod(r.fq_.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
    return r;
}

ResElem ResElem::in_q(const mpq_class& v) {
    ResElem r;
    r.rat_ = v;
    r.rat_.canonicalize();
    return r;
}

ResElem ResElem::from_rational(const BaseFieldDesc& K0, const mpq_class& v) {
    if (K0.kind == BaseFieldDesc::Kind::RatfuncTadic) return in_q(v);
    mpz_class num = v.get_num(), den = v.get_den();
    if (mpz_divisible_p(den.get_mpz_t(), K0.q.get_mpz_t()))
        throw std::domain_error("ResElem: rational not in the valuation ring");
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), K0.q.get_mpz_t()) == 0)
        throw std::domain_error("ResElem: denominator not invertible");
    return in_fq(num * dinv, K0.q);
}

bool ResElem::is_zero() const { return is_fq() ? fq_ == 0 : rat_ == 0; }

static void check_compatible(const ResElem& a, const ResElem& b) {
    if (a.is_fq() != b.is_fq() || (a.is_fq() && a.modulus() != b.modulus()))
        throw std::domain_error("ResElem: incompatible residue fields");
}

ResElem operator+(const ResElem& a, const ResElem& b) {
    check_compatible(a, b);
    if (a.is_fq()) return ResElem::in_fq(a.fq_ + b.fq_, a.q_);
    return ResElem::in_q(a.rat_ + b.rat_);
}
ResElem operator-(const ResElem& a, const ResElem& b) {
    check_compatible(a, b);
    if (a.is_fq()) return ResElem::in_fq(a.fq_ - b.fq_, a.q_);
    return ResElem::in_q(a.rat_ - b.rat_);
}
ResElem operator*(const ResElem& a, const ResElem& b) {
    check_compatible(a, b);
    if (a.is_fq()) return ResElem::in_fq(a.fq_ * b.fq_, a.q_);
    return ResElem::in_q(a.rat_ * b.rat_);
}
bool operator==(const ResElem& a, const ResElem& b) {
    if (a.is_fq() != b.is_fq()) return false;
    if (a.is_fq()) return a.q_ == b.q_ && a.fq_ == b.fq_;
    return a.rat_ == b.rat_;
}

std::string ResElem::str() const { return is_fq() ? fq_.get_str() : rat_.get_str(); }

// ------------------------------------------------------- field operations

static long padic_val(const mpz_class& n, const mpz_class& q) {
    // exact factor counting; n != 0
    mpz_class rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t()));
}

ExtRat value(const BaseFieldDesc& K0, const BaseElem& x) {
    if (x.is_zero()) return ExtRat::inf();
    if (K0.kind == BaseFieldDesc::Kind::RatfuncTadic)
        return ExtRat(x.num().ord() - x.den().ord());
    mpq_class r = x.as_rational();
    return ExtRat(padic_val(r.get_num(), K0.q) - padic_val(r.get_den(), K0.q));
}

ResElem residue(const BaseFieldDesc& K0, const BaseElem& x) {
    ExtRat v = value(K0, x);
    if (v < ExtRat(0)) throw std::domain_error("residue: element not in valuation ring");
    if (K0.kind == BaseFieldDesc::Kind::RatQadic) {
        if (v > ExtRat(0)) return ResElem::in_fq(0, K0.q);
        return ResElem::from_rational(K0, x.as_rational());
    }
    if (v > ExtRat(0)) return ResElem::in_q(0);
    // reduced fraction with value 0: denominator is a unit at T = 0
    return ResElem::in_q(x.num().eval0() / x.den().eval0());
}

BaseElem elem_with_value(const BaseFieldDesc& K0, const ExtRat& w) {
    if (w.is_inf()) throw std::domain_error("elem_with_value: infinite value");
    if (!K0.value_group().contains(w))
        throw std::domain_error("elem_with_value: value not in the value group");
    long e = static_cast<long>(w.rat().get_num().get_si());
    if (K0.kind == BaseFieldDesc::Kind::RatQadic) {
        BaseElem q{mpq_class(K0.q)};
        return q.pow(e);
    }
    return BaseElem::var_t().pow(e);
}

}  // namespace ruledres
