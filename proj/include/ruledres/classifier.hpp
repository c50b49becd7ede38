#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ruledres/minpair.hpp"

namespace ruledres {

/// Value-level description of an instance k(X)(p-th root of aX^p+bX+c):
/// only the values of the coefficients and the value group of k.
struct ValueSpec {
    long p = 0;
    mpz_class residue_char = 0;  // 0 or a prime distinct from p
    RatGroup vk;
    ExtRat va, vb, vc;  // va finite (a != 0)
    bool symbolic = true;

    void validate() const;
};

enum class VerdictTag { Ruled, NonRuled, CandidateOnly, Undetermined, OutOfScope };

std::string tag_name(VerdictTag t);

/// Structured reason behind a verdict, tied to the criterion branch that
/// produced it.
struct Certificate {
    std::string kind;      // e.g. COND_I_FAILS, TWO_TERM_RADICAND, LINEAR_RESIDUE
    std::string theorem;   // which criterion the kind belongs to, in words
    std::string details;
    long n_param = -1;     // exponent parameter for two-term certificates
};

/// Candidate valuation on k(X): Gauss or not, its vX, its gamma when known.
struct Candidate {
    bool gauss = true;
    ExtRat vx;
    std::optional<ExtRat> gamma;
};

struct Verdict {
    VerdictTag tag = VerdictTag::Undetermined;
    Certificate certificate;
    std::vector<Candidate> candidates;
};

/// Witness data for the Gauss-branch criterion: both conditions with the
/// group generators, and the decomposition (1/p)vc = vr + (m/p)v(c/a)
/// when it exists.
struct GaussCertificate {
    bool cond_i = false;
    mpq_class left_gen, right_gen;  // generators of the two compared groups
    bool cond_ii = false;
    bool has_witness = false;
    ExtRat vr;
    long m = -1;
};

// Certificate kinds.
namespace cert {
inline constexpr const char* COND_I_FAILS = "COND_I_FAILS";
inline constexpr const char* COND_II_FAILS = "COND_II_FAILS";
inline constexpr const char* GENUS_P12 = "GENUS_P12";                    // genus (p-1)(p-2)/2
inline constexpr const char* TWO_TERM_RADICAND = "TWO_TERM_RADICAND";    // genus (p-1)/2, carries n
inline constexpr const char* LINEAR_RESIDUE = "LINEAR_RESIDUE";
inline constexpr const char* INVERTED_LINEAR = "INVERTED_LINEAR";
inline constexpr const char* CONSTANT_RESIDUE = "CONSTANT_RESIDUE";
inline constexpr const char* PTH_POWER_MONOMIAL = "PTH_POWER_MONOMIAL";
inline constexpr const char* VALUE_RAMIFIED = "VALUE_RAMIFIED";
inline constexpr const char* P2_NO_CRITERION = "P2_NO_CRITERION";
inline constexpr const char* BOUNDARY_BOUND = "BOUNDARY_BOUND";
inline constexpr const char* UNCATALOGUED = "UNCATALOGUED";
inline constexpr const char* NOT_NORMALIZABLE = "NOT_NORMALIZABLE";
}  // namespace cert

/// vX forced on any non-ruled residue transcendental extension:
/// min{ (1/(p-1)) v(b/a), (1/p) v(c/a) }.
ExtRat candidate_vx(const ValueSpec& spec);

/// Condition (i): vk + Z(1/p)v(c/a) = vk + Z(1/p)vc.
std::pair<bool, GaussCertificate> check_condition_i(const ValueSpec& spec);

/// Condition (ii): (1/p)v(c/a) - (1/p)vc not in vk whenever (1/p)v(c/a) not in vk.
bool check_condition_ii(const ValueSpec& spec);

/// Decision from coefficient values alone.
Verdict classify_value_level(const ValueSpec& spec);

/// Largest i in [1, p-2] with binomial(p, i) nonzero in characteristic char_k.
long i0_of(long p, const mpz_class& char_k);

/// Residue tests a candidate non-Gauss center alpha must satisfy:
/// (a alpha^{p-1}/b)v = (-1/p)v and (c/(b alpha))v = ((1-p)/p)v.
bool nongauss_alpha_residue_check(const BaseFieldDesc& K0, const BaseElem& a, const BaseElem& b,
                                  const BaseElem& c, const BaseElem& alpha, long p);

/// The unique gamma a non-Gauss non-ruled extension centered at alpha can
/// have: min{ (1/(p-i0-1)) v(b' alpha^{p-i0-1}/b), (1/(p-i0)) v(c' alpha^{p-i0-1}/b) }.
ExtRat nongauss_candidate_gamma(const BaseFieldDesc& K0, const BaseElem& a, const BaseElem& b,
                                const BaseElem& c, const BaseElem& alpha, long p);

/// Classify the residue generator polynomial up to rescaling of Z,
/// p-th power factors and Z |-> 1/Z.
Verdict pattern_classify(const ResiduePoly& R, long p, const mpz_class& residue_char);

/// The four-relation table between v(aX^p+bX+c), v(aX^p), v(bX), vc;
/// returns 1..4 or 0 when no relation matches.
int case_relations(const BaseFieldDesc& K0, const BaseElem& a, const BaseElem& b,
                   const BaseElem& c, const PairOfDefinition& pair, long p);

struct AnalysisReport {
    ExtRat va, vb, vc, vf;
    ExtRat vx_pair, vx_required;
    bool vx_consistent = false;
    ResidueGenResult gen;
    Verdict pattern_verdict;
    int case_tag = 0;
    Verdict value_verdict;
    Verdict verdict;  // final: pattern verdict, falling back to value level
};

/// Full concrete analysis of one instance against a pair of definition.
AnalysisReport analyze(const BaseFieldDesc& K0, const BaseElem& a, const BaseElem& b,
                       const BaseElem& c, const PairOfDefinition& pair, long p);

}  // namespace ruledres
