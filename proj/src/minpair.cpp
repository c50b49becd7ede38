#include "ruledres/minpair.hpp"

#include <numeric>
#include <sstream>

namespace ruledres {

int ResiduePoly::ord() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

int ResiduePoly::term_count() const {
    int n = 0;
    for (const auto& c : c_)
        if (!c.is_zero()) ++n;
    return n;
}

ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b) {
    if (a.is_zero() || b.is_zero()) return ResiduePoly();
    std::vector<ResElem> c(a.c_.size() + b.c_.size() - 1);
    std::vector<bool> set(c.size(), false);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            ResElem t = a.c_[i] * b.c_[j];
            if (set[i + j])
                c[i + j] = c[i + j] + t;
            else {
                c[i + j] = t;
                set[i + j] = true;
            }
        }
    return ResiduePoly(std::move(c));
}

std::string ResiduePoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        ResElem ci = coeff(i);
        if (ci.is_zero()) continue;
        std::string s = ci.str();
        bool neg = !s.empty() && s[0] == '-';
        if (neg) s = s.substr(1);
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        if (i == 0) {
            out << s;
        } else {
            if (s != "1") out << s << "*";
            out << "Z";
            if (i != 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

ExtRat poly_value(const PolyX& f, const PairOfDefinition& pair, const BaseFieldDesc& K0) {
    if (f.is_zero()) return ExtRat::inf();
    PolyX g = expand(f, pair.alpha);
    ExtRat best = ExtRat::inf();
    for (int i = 0; i <= g.degree(); ++i) {
        ExtRat vi = value(K0, g.coeff(i)) + mpq_class(i) * pair.gamma;
        best = min(best, vi);
    }
    return best;
}

ResidueContext residue_context(const BaseFieldDesc& K0, const PairOfDefinition& pair) {
    RatGroup vk = K0.value_group();
    long e = vk.order_mod(pair.gamma);
    ExtRat eg = mpq_class(e) * pair.gamma;
    BaseElem d = elem_with_value(K0, ExtRat(0) - eg);
    std::string y = pair.is_gauss() ? "X" : "(X - " + pair.alpha.str() + ")";
    std::string zd = "(" + d.str() + ")*" + y + "^" + std::to_string(e) + " v";
    return ResidueContext{e, d, zd};
}

ResiduePoly poly_residue(const PolyX& f, const PairOfDefinition& pair, const BaseFieldDesc& K0) {
    ExtRat w = poly_value(f, pair, K0);
    if (w != ExtRat(0))
        throw std::domain_error("poly_residue: polynomial is not a unit; normalize first");
    ResidueContext ctx = residue_context(K0, pair);
    PolyX g = expand(f, pair.alpha);
    std::vector<ResElem> out;
    for (int i = 0; i * ctx.e <= g.degree(); ++i) {
        BaseElem c = g.coeff(i * ctx.e) / ctx.d.pow(i);
        out.push_back(residue(K0, c));
    }
    return ResiduePoly(std::move(out));
}

std::string Normalizer::str() const {
    std::ostringstream out;
    out << "t = " << t_scalar.str();
    if (y_power != 0) out << " * (X - alpha)^" << y_power;
    out << ", exponent " << exponent;
    return out.str();
}

ResidueGenResult residue_generator(const PolyX& f, const PairOfDefinition& pair,
                                   const BaseFieldDesc& K0, long p) {
    if (f.is_zero()) throw std::domain_error("residue_generator: zero radicand");
    if (K0.residue_char() == p)
        throw std::domain_error("residue_generator: p equals the residue characteristic");
    ExtRat w = poly_value(f, pair, K0);
    ResidueContext ctx = residue_context(K0, pair);
    RatGroup vk = K0.value_group();

    PolyX y_shift = PolyX::var_x() - PolyX(pair.alpha);

    auto try_route = [&](long exponent) -> ResidueGenResult {
        // look for t = r * (X-alpha)^m with v(t^p f^exponent) = 0, vr in vk
        for (long m = 0; m < ctx.e; ++m) {
            ExtRat u = mpq_class(exponent, p) * w + mpq_class(m) * pair.gamma;
            if (!vk.contains(u)) continue;
            BaseElem r = elem_with_value(K0, ExtRat(0) - u);
            PolyX g = (PolyX(r.pow(p)) * y_shift.pow(m * p)) * f.pow(exponent);
            ResidueGenResult res;
            res.normalizable = true;
            res.norm = Normalizer{r, m, exponent};
            res.residue = poly_residue(g, pair, K0);
            return res;
        }
        return ResidueGenResult{};
    };

    ResidueGenResult res = try_route(1);
    if (res.normalizable) return res;
    if (std::gcd(ctx.e, p) == 1) {
        res = try_route(ctx.e);
        if (res.normalizable) return res;
    }
    return ResidueGenResult{};
}

}  // namespace ruledres
