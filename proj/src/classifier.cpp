#include "ruledres/classifier.hpp"

#include <sstream>

namespace ruledres {

std::string tag_name(VerdictTag t) {
    switch (t) {
        case VerdictTag::Ruled: return "RULED";
        case VerdictTag::NonRuled: return "NON_RULED";
        case VerdictTag::CandidateOnly: return "CANDIDATE_ONLY";
        case VerdictTag::Undetermined: return "UNDETERMINED";
        case VerdictTag::OutOfScope: return "OUT_OF_SCOPE";
    }
    return "?";
}

static bool is_prime_long(long p) {
    if (p < 2) return false;
    mpz_class z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

void ValueSpec::validate() const {
    if (!is_prime_long(p)) throw std::invalid_argument("spec: p must be prime");
    if (residue_char == p) throw std::invalid_argument("spec: p must differ from the residue characteristic");
    if (va.is_inf()) throw std::invalid_argument("spec: va must be finite (a != 0)");
    if (!vk.contains(va)) throw std::invalid_argument("spec: va not in vk");
    if (!vb.is_inf() && !vk.contains(vb)) throw std::invalid_argument("spec: vb not in vk");
    if (!vc.is_inf() && !vk.contains(vc)) throw std::invalid_argument("spec: vc not in vk");
}

// branch values of the necessary vX condition
static ExtRat branch_b(const ValueSpec& s) {
    if (s.vb.is_inf()) return ExtRat::inf();
    return mpq_class(1, s.p - 1) * (s.vb - s.va);
}
static ExtRat branch_c(const ValueSpec& s) {
    if (s.vc.is_inf()) return ExtRat::inf();
    return mpq_class(1, s.p) * (s.vc - s.va);
}

ExtRat candidate_vx(const ValueSpec& spec) {
    if (spec.va.is_inf()) throw std::invalid_argument("candidate_vx: va must be finite");
    if (spec.vb.is_inf() && spec.vc.is_inf())
        throw std::invalid_argument("candidate_vx: degenerate radicand aX^p (b = c = 0)");
    return min(branch_b(spec), branch_c(spec));
}

std::pair<bool, GaussCertificate> check_condition_i(const ValueSpec& spec) {
    if (spec.vc.is_inf()) throw std::invalid_argument("condition (i): undefined for c = 0");
    mpq_class vca_p = (spec.vc - spec.va).rat() / spec.p;
    mpq_class vc_p = spec.vc.rat() / spec.p;
    RatGroup left = spec.vk.joined_with(vca_p);
    RatGroup right = spec.vk.joined_with(vc_p);

    GaussCertificate gc;
    gc.left_gen = left.generator();
    gc.right_gen = right.generator();
    gc.cond_i = (left == right);
    gc.cond_ii = check_condition_ii(spec);

    // decomposition (1/p)vc = vr + (m/p)v(c/a) when (1/p)vc lies in the left group
    if (left.contains(ExtRat(vc_p))) {
        for (long m = 0; m < spec.p; ++m) {
            ExtRat rest = ExtRat(vc_p) - ExtRat(mpq_class(m) * vca_p);
            if (spec.vk.contains(rest)) {
                gc.has_witness = true;
                gc.vr = rest;
                gc.m = m;
                break;
            }
        }
    }
    return {gc.cond_i, gc};
}

bool check_condition_ii(const ValueSpec& spec) {
    if (spec.vc.is_inf()) throw std::invalid_argument("condition (ii): undefined for c = 0");
    ExtRat vca_p = mpq_class(1, spec.p) * (spec.vc - spec.va);
    if (spec.vk.contains(vca_p)) return true;  // vacuous
    ExtRat diff = vca_p - mpq_class(1, spec.p) * spec.vc;
    return !spec.vk.contains(diff);
}

Verdict classify_value_level(const ValueSpec& spec) {
    spec.validate();
    ExtRat A = branch_b(spec);
    ExtRat B = branch_c(spec);
    ExtRat vx = candidate_vx(spec);

    Verdict v;
    if (A > B) {
        // strict branch: the only possible non-ruled extension is the
        // Gauss valuation with vX = (1/p)v(c/a), which exists uniquely.
        Candidate cand{true, B, B};
        v.candidates.push_back(cand);
        if (spec.p == 2) {
            v.tag = VerdictTag::CandidateOnly;
            v.certificate = {cert::P2_NO_CRITERION,
                             "uniqueness of the Gauss candidate",
                             "for p = 2 only the uniqueness of the candidate is available; "
                             "no ruledness criterion applies",
                             -1};
            return v;
        }
        auto [ci, gc] = check_condition_i(spec);
        bool cii = gc.cond_ii;
        std::ostringstream groups;
        groups << "vk + Z(1/p)v(c/a) = (" << gc.left_gen.get_str() << ")Z, vk + Z(1/p)vc = ("
               << gc.right_gen.get_str() << ")Z";
        if (!ci) {
            v.tag = VerdictTag::Ruled;
            v.certificate = {cert::COND_I_FAILS, "Gauss ruledness criterion, condition (i)",
                             groups.str(), -1};
            return v;
        }
        if (!cii) {
            v.tag = VerdictTag::Ruled;
            v.certificate = {cert::COND_II_FAILS, "Gauss ruledness criterion, condition (ii)",
                             "(1/p)v(c/a) is not in vk but (1/p)v(c/a) - (1/p)vc is", -1};
            return v;
        }
        v.tag = VerdictTag::NonRuled;
        ExtRat vca_p = mpq_class(1, spec.p) * (spec.vc - spec.va);
        if (spec.vk.contains(vca_p)) {
            std::ostringstream d;
            d << "residue generator has shape d1*Z^" << spec.p
              << " + d2; genus (p-1)(p-2)/2 = " << ((spec.p - 1) * (spec.p - 2)) / 2;
            v.certificate = {cert::GENUS_P12, "Gauss ruledness criterion, both conditions hold",
                             d.str(), -1};
        } else {
            long n = spec.p - gc.m;  // 2 <= m <= p-1 here, so 1 <= n <= p-2
            std::ostringstream d;
            d << "residue generator has shape u*Z^n*(v*Z + w) with n = " << n
              << "; genus (p-1)/2 = " << (spec.p - 1) / 2;
            v.certificate = {cert::TWO_TERM_RADICAND,
                             "Gauss ruledness criterion, both conditions hold", d.str(), n};
        }
        return v;
    }

    // boundary branch: vX = (1/(p-1))v(b/a); not necessarily Gauss.
    v.tag = VerdictTag::CandidateOnly;
    v.candidates.push_back(Candidate{true, A, A});
    v.candidates.push_back(Candidate{false, A, std::nullopt});
    v.certificate = {cert::BOUNDARY_BOUND, "necessary vX condition, boundary case",
                     "any non-ruled extension has vX = (1/(p-1))v(b/a) = " + vx.str() +
                         "; assuming a separably algebraically closed base of equal "
                         "characteristic not dividing p-1, at most two such extensions exist "
                         "and a second one must be the Gauss extension with that vX",
                     -1};
    return v;
}

long i0_of(long p, const mpz_class& char_k) {
    if (p < 3) throw std::invalid_argument("i0_of: requires an odd prime");
    for (long i = p - 2; i >= 1; --i) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(p),
                     static_cast<unsigned long>(i));
        if (char_k == 0 || binom % char_k != 0) return i;
    }
    throw std::domain_error("i0_of: no index with nonzero binomial coefficient");
}

bool nongauss_alpha_residue_check(const BaseFieldDesc& K0, const BaseElem& a, const BaseElem& b,
                                  const BaseElem& c, const BaseElem& alpha, long p) {
    if (b.is_zero() || c.is_zero() || alpha.is_zero())
        throw std::invalid_argument("alpha residue check: b, c, alpha must be nonzero");
    BaseElem u1 = a * alpha.pow(p - 1) / b;
    BaseElem u2 = c / (b * alpha);
    if (value(K0, u1) != ExtRat(0) || value(K0, u2) != ExtRat(0)) return false;
    ResElem e1 = ResElem::from_rational(K0, mpq_class(-1, p));
    ResElem e2 = ResElem::from_rational(K0, mpq_class(1 - p, p));
    return residue(K0, u1) == e1 && residue(K0, u2) == e2;
}

ExtRat nongauss_candidate_gamma(const BaseFieldDesc& K0, const BaseElem& a, const BaseElem& b,
                                const BaseElem& c, const BaseElem& alpha, long p) {
    if (b.is_zero()) throw std::invalid_argument("candidate gamma: b must be nonzero");
    long i0 = i0_of(p, K0.residue_char());
    PolyX f = PolyX::monomial(a, static_cast<int>(p)) + PolyX::monomial(b, 1) + PolyX(c);
    PolyX g = expand(f, alpha);
    BaseElem b_prime = g.coeff(1);
    BaseElem c_prime = g.coeff(0);
    BaseElem apow = alpha.pow(p - i0 - 1);
    ExtRat gb = b_prime.is_zero()
                    ? ExtRat::inf()
                    : mpq_class(1, p - i0 - 1) * value(K0, b_prime * apow / b);
    ExtRat gc = c_prime.is_zero() ? ExtRat::inf()
                                  : mpq_class(1, p - i0) * value(K0, c_prime * apow / b);
    if (gb.is_inf() && gc.is_inf())
        throw std::domain_error("candidate gamma: degenerate expansion (b' = c' = 0)");
    return min(gb, gc);
}

Verdict pattern_classify(const ResiduePoly& R, long p, const mpz_class& residue_char) {
    if (R.is_zero()) throw std::invalid_argument("pattern_classify: zero residue polynomial");
    if (residue_char == p) throw std::invalid_argument("pattern_classify: p equals residue characteristic");
    if (R.degree() > p) throw std::invalid_argument("pattern_classify: degree exceeds p");

    int s = R.ord();
    long n = s % p;  // Z^p factors are p-th powers; only s mod p matters
    int d0 = R.degree() - s;
    int terms = R.term_count();

    Verdict v;
    if (d0 == 0) {
        v.tag = VerdictTag::Ruled;
        if (s == 0) {
            v.certificate = {cert::CONSTANT_RESIDUE, "constant residue generator",
                             "residue field gains only a finite extension", -1};
        } else {
            std::ostringstream d;
            d << "monomial residue b*Z^" << s << "; adjoining its p-th root keeps a rational generator";
            v.certificate = {cert::PTH_POWER_MONOMIAL, "monomial residue generator", d.str(), -1};
        }
        return v;
    }
    if (d0 == 1) {
        if (n == 0) {
            v.tag = VerdictTag::Ruled;
            v.certificate = {cert::LINEAR_RESIDUE, "linear residue generator",
                             "p-th root of b1*Z + b2 generates a rational function field", -1};
            return v;
        }
        if (n <= p - 2) {
            v.tag = VerdictTag::NonRuled;
            std::ostringstream d;
            d << "shape u*Z^n*(v*Z + w) with n = " << n << "; genus (p-1)/2 = " << (p - 1) / 2;
            v.certificate = {cert::TWO_TERM_RADICAND, "two-term radicand genus certificate",
                             d.str(), n};
            return v;
        }
        // n = p-1: substitute Z -> 1/Z to reach a linear residue generator
        v.tag = VerdictTag::Ruled;
        v.certificate = {cert::INVERTED_LINEAR, "linear residue generator after Z -> 1/Z",
                         "shape u*Z^(p-1)*(v*Z + w) is a p-th power times (v + w/Z)", -1};
        return v;
    }
    if (d0 == p && s == 0 && terms == 2 && !R.coeff(0).is_zero() && p % 2 == 1) {
        v.tag = VerdictTag::NonRuled;
        std::ostringstream d;
        d << "shape d1*Z^p + d2; genus (p-1)(p-2)/2 = " << ((p - 1) * (p - 2)) / 2;
        v.certificate = {cert::GENUS_P12, "binomial radicand genus certificate", d.str(), -1};
        return v;
    }
    v.tag = VerdictTag::Undetermined;
    v.certificate = {cert::UNCATALOGUED, "no catalogued residue pattern",
                     "residue generator " + R.str() + " is outside the decided shapes", -1};
    return v;
}

int case_relations(const BaseFieldDesc& K0, const BaseElem& a, const BaseElem& b,
                   const BaseElem& c, const PairOfDefinition& pair, long p) {
    PolyX f = PolyX::monomial(a, static_cast<int>(p)) + PolyX::monomial(b, 1) + PolyX(c);
    ExtRat vf = poly_value(f, pair, K0);
    ExtRat vx = pair.is_gauss() ? pair.gamma : min(value(K0, pair.alpha), pair.gamma);
    ExtRat mon_a = value(K0, a) + mpq_class(p) * vx;
    ExtRat mon_b = value(K0, b) + vx;
    ExtRat mon_c = value(K0, c);
    if (vf == mon_a && mon_a == mon_c && mon_c < mon_b) return 1;
    if (vf == mon_a && mon_a == mon_c && mon_c == mon_b) return 2;
    if (vf == mon_a && mon_a == mon_b && mon_b < mon_c) return 3;
    if (vf > mon_a && mon_a == mon_b && mon_b <= mon_c) return 4;
    return 0;
}

AnalysisReport analyze(const BaseFieldDesc& K0, const BaseElem& a, const BaseElem& b,
                       const BaseElem& c, const PairOfDefinition& pair, long p) {
    if (a.is_zero()) throw std::invalid_argument("analyze: a must be nonzero");
    if (!is_prime_long(p)) throw std::invalid_argument("analyze: p must be prime");
    if (K0.residue_char() == p)
        throw std::invalid_argument("analyze: p equals the residue characteristic");
    if (!K0.assume_mu_p)
        throw std::invalid_argument("analyze: base field must assume a primitive p-th root of unity");

    AnalysisReport rep;
    rep.va = value(K0, a);
    rep.vb = value(K0, b);
    rep.vc = value(K0, c);

    PolyX f = PolyX::monomial(a, static_cast<int>(p)) + PolyX::monomial(b, 1) + PolyX(c);
    rep.vf = poly_value(f, pair, K0);
    rep.vx_pair = pair.is_gauss() ? pair.gamma : min(value(K0, pair.alpha), pair.gamma);

    ValueSpec vs;
    vs.p = p;
    vs.residue_char = K0.residue_char();
    vs.vk = K0.value_group();
    vs.va = rep.va;
    vs.vb = rep.vb;
    vs.vc = rep.vc;
    vs.symbolic = false;
    rep.vx_required = candidate_vx(vs);
    rep.vx_consistent = (rep.vx_pair == rep.vx_required);

    rep.gen = residue_generator(f, pair, K0, p);
    if (!rep.gen.normalizable) {
        // (1/p) vf generates a proper extension of vk(X); the fundamental
        // inequality forces the residue field to stay k(X)v.
        rep.pattern_verdict.tag = VerdictTag::Ruled;
        rep.pattern_verdict.certificate = {
            cert::VALUE_RAMIFIED, "value-group ramification",
            "(1/p) v(radicand) = " + (mpq_class(1, p) * rep.vf).str() +
                " lies outside vk + Z*gamma; the extension ramifies in the value group and "
                "the residue field is unchanged",
            -1};
    } else if (rep.gen.residue.degree() > p) {
        rep.pattern_verdict.tag = VerdictTag::Undetermined;
        rep.pattern_verdict.certificate = {cert::UNCATALOGUED, "no catalogued residue pattern",
                                           "residue generator degree exceeds p", -1};
    } else {
        rep.pattern_verdict = pattern_classify(rep.gen.residue, p, K0.residue_char());
    }

    rep.case_tag = case_relations(K0, a, b, c, pair, p);
    rep.value_verdict = classify_value_level(vs);
    rep.verdict =
        rep.pattern_verdict.tag != VerdictTag::Undetermined ? rep.pattern_verdict : rep.value_verdict;
    return rep;
}

}  // namespace ruledres
