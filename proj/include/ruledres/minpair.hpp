#pragma once

#include <string>
#include <vector>

#include "ruledres/polyx.hpp"

namespace ruledres {

/// Pair of definition (alpha, gamma) for a residue transcendental
/// valuation on k(X); alpha = 0 gives the Gauss valuation.
struct PairOfDefinition {
    BaseElem alpha;
    ExtRat gamma;

    PairOfDefinition(BaseElem a, ExtRat g) : alpha(std::move(a)), gamma(std::move(g)) {
        if (gamma.is_inf()) throw std::domain_error("PairOfDefinition: gamma must be finite");
    }
    static PairOfDefinition gauss(ExtRat g) { return PairOfDefinition(BaseElem(), std::move(g)); }

    bool is_gauss() const { return alpha.is_zero(); }
};

/// Residue variable data: e the order of gamma modulo vk, d with
/// v(d) = -e*gamma, and Z described as d(X-alpha)^e v.
struct ResidueContext {
    long e;
    BaseElem d;
    std::string z_description;
};

/// Polynomial over the residue field in the variable Z, trimmed.
class ResiduePoly {
public:
    ResiduePoly() = default;
    explicit ResiduePoly(std::vector<ResElem> c) : c_(std::move(c)) { trim(); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    ResElem coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : ResElem();
    }
    /// Lowest nonzero index, -1 for zero.
    int ord() const;
    int term_count() const;

    friend ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b);
    friend bool operator==(const ResiduePoly& a, const ResiduePoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ResiduePoly& a, const ResiduePoly& b) { return !(a == b); }

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<ResElem> c_;
};

/// vf = min{ v(c_i) + i*gamma } over the (X-alpha)-expansion; inf for 0.
ExtRat poly_value(const PolyX& f, const PairOfDefinition& pair, const BaseFieldDesc& K0);

ResidueContext residue_context(const BaseFieldDesc& K0, const PairOfDefinition& pair);

/// Residue of f as a polynomial in Z; requires poly_value(f) = 0.
ResiduePoly poly_residue(const PolyX& f, const PairOfDefinition& pair, const BaseFieldDesc& K0);

/// Normalizer (t_scalar * (X-alpha)^y_power)^p * f^exponent used to bring
/// the radicand to value 0 before taking residues.
struct Normalizer {
    BaseElem t_scalar;
    long y_power = 0;
    long exponent = 1;

    std::string str() const;
};

struct ResidueGenResult {
    bool normalizable = false;
    Normalizer norm;
    ResiduePoly residue;
};

/// Residue generator of k(X)(p-th root of f): normalizes f to value 0 by
/// a p-th power from k(X) (and an exponent e coprime to p if needed) and
/// returns its residue polynomial. Not normalizable exactly when
/// (1/p) vf lies outside vk + Z*gamma.
ResidueGenResult residue_generator(const PolyX& f, const PairOfDefinition& pair,
                                   const BaseFieldDesc& K0, long p);

}  // namespace ruledres
