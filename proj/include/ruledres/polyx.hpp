#pragma once

#include <string>
#include <vector>

#include "ruledres/basefield.hpp"

namespace ruledres {

/// Polynomial in X with coefficients in the base field, trimmed.
class PolyX {
public:
    PolyX() = default;
    PolyX(const BaseElem& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit PolyX(std::vector<BaseElem> c) : c_(std::move(c)) { trim(); }

    static PolyX monomial(const BaseElem& coeff, int deg);
    static PolyX var_x() { return monomial(BaseElem(1L), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    BaseElem coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : BaseElem();
    }

    friend PolyX operator+(const PolyX& a, const PolyX& b);
    friend PolyX operator-(const PolyX& a, const PolyX& b);
    friend PolyX operator*(const PolyX& a, const PolyX& b);
    PolyX operator-() const;
    /// Division by an X-free element.
    friend PolyX operator/(const PolyX& a, const BaseElem& b);
    PolyX pow(long e) const;  // e < 0 only for X-free polynomials
    friend bool operator==(const PolyX& a, const PolyX& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyX& a, const PolyX& b) { return !(a == b); }

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<BaseElem> c_;
};

/// Coefficients of f in Y = X - alpha (Taylor shift by synthetic division).
PolyX expand(const PolyX& f, const BaseElem& alpha);

/// Parse a polynomial expression in X over the base field.
PolyX parse_polyx(const BaseFieldDesc& K0, const std::string& s);

}  // namespace ruledres
