#pragma once

// Shared random generators and oracles for the test suites.

#include <random>
#include <vector>

#include "ruledres/minpair.hpp"

namespace testutil {

using namespace ruledres;

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline mpq_class rand_rat(Rng& rng, long max_num = 20, long max_den = 6) {
    mpq_class q(rand_int(rng, -max_num, max_num), rand_int(rng, 1, max_den));
    q.canonicalize();
    return q;
}

inline mpq_class rand_rat_nonzero(Rng& rng, long max_num = 20, long max_den = 6) {
    for (;;) {
        mpq_class q = rand_rat(rng, max_num, max_den);
        if (q != 0) return q;
    }
}

inline QPoly rand_qpoly(Rng& rng, int max_deg = 3) {
    int deg = static_cast<int>(rand_int(rng, 0, max_deg));
    std::vector<mpq_class> c(deg + 1);
    for (auto& x : c) x = rand_rat(rng, 9, 4);
    return QPoly(std::move(c));
}

inline QPoly rand_qpoly_nonzero(Rng& rng, int max_deg = 3) {
    for (;;) {
        QPoly p = rand_qpoly(rng, max_deg);
        if (!p.is_zero()) return p;
    }
}

/// Random element of the base field: rational for the q-adic kind,
/// rational function in T for the T-adic kind.
inline BaseElem rand_elem(Rng& rng, const BaseFieldDesc& K0) {
    if (!K0.allows_t()) return BaseElem(rand_rat(rng, 60, 24));
    return BaseElem(rand_qpoly(rng), rand_qpoly_nonzero(rng, 2));
}

inline BaseElem rand_elem_nonzero(Rng& rng, const BaseFieldDesc& K0) {
    for (;;) {
        BaseElem x = rand_elem(rng, K0);
        if (!x.is_zero()) return x;
    }
}

/// Random element of nonnegative value (inside the valuation ring).
inline BaseElem rand_unit_or_deeper(Rng& rng, const BaseFieldDesc& K0) {
    BaseElem x = rand_elem(rng, K0);
    ExtRat v = value(K0, x);
    if (v.is_inf() || v >= ExtRat(0)) return x;
    mpz_class num = v.rat().get_num();  // value group is Z, so v is integral
    return x * elem_with_value(K0, ExtRat(mpq_class(-num)));
}

inline PolyX rand_polyx(Rng& rng, const BaseFieldDesc& K0, int max_deg = 4) {
    int deg = static_cast<int>(rand_int(rng, 0, max_deg));
    PolyX f;
    for (int i = 0; i <= deg; ++i) f = f + PolyX::monomial(rand_elem(rng, K0), i);
    return f;
}

/// Random pair of definition with gamma of denominator at most 4.
inline PairOfDefinition rand_pair(Rng& rng, const BaseFieldDesc& K0) {
    ExtRat gamma(rand_int(rng, -8, 8), rand_int(rng, 1, 4));
    if (rand_int(rng, 0, 1) == 0) return PairOfDefinition::gauss(gamma);
    return PairOfDefinition(rand_elem(rng, K0), gamma);
}

/// Independent Taylor-shift oracle: coefficients of f(Y + alpha) by the
/// binomial theorem, g_j = sum_{i >= j} C(i, j) f_i alpha^{i-j}.
inline PolyX expand_binomial_oracle(const PolyX& f, const BaseElem& alpha) {
    if (f.is_zero()) return f;
    PolyX g;
    for (int j = 0; j <= f.degree(); ++j) {
        BaseElem s;
        for (int i = j; i <= f.degree(); ++i) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i),
                         static_cast<unsigned long>(j));
            s = s + BaseElem(mpq_class(binom)) * f.coeff(i) * alpha.pow(i - j);
        }
        g = g + PolyX::monomial(s, j);
    }
    return g;
}

/// Scale f by (X - alpha)^j and a base element so its value becomes 0.
/// Returns false when f = 0.
inline bool normalize_to_unit(const BaseFieldDesc& K0, const PairOfDefinition& pair, PolyX& f) {
    ExtRat w = poly_value(f, pair, K0);
    if (w.is_inf()) return false;
    long e = K0.value_group().order_mod(pair.gamma);
    for (long j = 0; j < e; ++j) {
        ExtRat u = w + mpq_class(j) * pair.gamma;
        if (!K0.value_group().contains(u)) continue;
        PolyX shift = PolyX::var_x() - PolyX(pair.alpha);
        f = f * shift.pow(j) * PolyX(elem_with_value(K0, ExtRat(0) - u));
        return true;
    }
    return false;  // cannot happen: w lies in vk + Z*gamma
}

}  // namespace testutil
