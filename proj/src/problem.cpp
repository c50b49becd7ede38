#include "ruledres/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ruledres {

using nlohmann::json;

namespace {

const json& require(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key)) throw SpecError(path + "." + key, "missing field");
    return j.at(key);
}

std::string require_string(const json& j, const std::string& path, const char* key) {
    const json& v = require(j, path, key);
    if (!v.is_string()) throw SpecError(path + "." + key, "expected a string");
    return v.get<std::string>();
}

ExtRat parse_rat(const json& v, const std::string& path) {
    if (!v.is_string()) throw SpecError(path, "expected a rational string like \"3/2\" or \"inf\"");
    try {
        return ExtRat::parse(v.get<std::string>());
    } catch (const std::exception& e) {
        throw SpecError(path, e.what());
    }
}

}  // namespace

ProblemSpec ProblemSpec::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError("$", std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw SpecError("$", "spec must be a JSON object");

    ProblemSpec spec;

    const json& jp = require(j, "$", "prime_p");
    if (!jp.is_number_integer()) throw SpecError("$.prime_p", "expected an integer");
    spec.p = jp.get<long>();
    {
        mpz_class z(spec.p);
        if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
            throw SpecError("$.prime_p", "prime_p must be prime");
    }

    const json& jb = require(j, "$", "base");
    std::string kind = require_string(jb, "$.base", "kind");
    bool mu_p = jb.value("assume_mu_p", true);
    if (kind == "rational_q_adic") {
        const json& jq = require(jb, "$.base", "q");
        if (!jq.is_number_integer()) throw SpecError("$.base.q", "expected an integer");
        mpz_class q(jq.get<long>());
        if (mpz_probab_prime_p(q.get_mpz_t(), 40) == 0)
            throw SpecError("$.base.q", "q must be prime");
        if (q == spec.p) throw SpecError("$.base.q", "q must differ from prime_p");
        spec.base = BaseFieldDesc::rat_qadic(q, mu_p);
    } else if (kind == "ratfunc_t_adic") {
        spec.base = BaseFieldDesc::ratfunc_tadic(mu_p);
    } else {
        throw SpecError("$.base.kind", "expected \"rational_q_adic\" or \"ratfunc_t_adic\"");
    }

    std::string mode = require_string(j, "$", "mode");
    if (mode == "symbolic")
        spec.mode = ProblemMode::Symbolic;
    else if (mode == "concrete")
        spec.mode = ProblemMode::Concrete;
    else
        throw SpecError("$.mode", "expected \"symbolic\" or \"concrete\"");

    if (j.contains("value_group")) {
        ExtRat g = parse_rat(j.at("value_group"), "$.value_group");
        if (g.is_inf()) throw SpecError("$.value_group", "generator must be finite");
        spec.vk = RatGroup(g.rat());
    } else {
        spec.vk = spec.base.value_group();
    }

    if (spec.mode == ProblemMode::Symbolic) {
        const json& jv = require(j, "$", "values");
        spec.va = parse_rat(require(jv, "$.values", "va"), "$.values.va");
        spec.vb = parse_rat(require(jv, "$.values", "vb"), "$.values.vb");
        spec.vc = parse_rat(require(jv, "$.values", "vc"), "$.values.vc");
        if (spec.va.is_inf()) throw SpecError("$.values.va", "va must be finite (a != 0)");
        if (spec.vb.is_inf() && spec.vc.is_inf())
            throw SpecError("$.values", "vb and vc cannot both be inf (degenerate radicand)");
    } else {
        const json& jc = require(j, "$", "coefficients");
        auto coeff = [&](const char* key) {
            std::string expr = require_string(jc, "$.coefficients", key);
            try {
                return parse_elem(spec.base, expr);
            } catch (const ParseError& e) {
                throw SpecError(std::string("$.coefficients.") + key, e.what());
            }
        };
        spec.a = coeff("a");
        spec.b = coeff("b");
        spec.c = coeff("c");
        if (spec.a.is_zero()) throw SpecError("$.coefficients.a", "a must be nonzero");
        if (spec.b.is_zero() && spec.c.is_zero())
            throw SpecError("$.coefficients", "b and c cannot both be zero (degenerate radicand)");
        if (j.contains("pair")) {
            const json& jpair = j.at("pair");
            std::string alpha_s = require_string(jpair, "$.pair", "alpha");
            BaseElem alpha;
            try {
                alpha = parse_elem(spec.base, alpha_s);
            } catch (const ParseError& e) {
                throw SpecError("$.pair.alpha", e.what());
            }
            ExtRat gamma = parse_rat(require(jpair, "$.pair", "gamma"), "$.pair.gamma");
            if (gamma.is_inf()) throw SpecError("$.pair.gamma", "gamma must be finite");
            spec.pair = PairOfDefinition(alpha, gamma);
        }
    }
    return spec;
}

ProblemSpec ProblemSpec::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("$", "cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

ValueSpec ProblemSpec::value_spec() const {
    ValueSpec vs;
    vs.p = p;
    vs.residue_char = base.residue_char();
    vs.vk = vk;
    if (mode == ProblemMode::Symbolic) {
        vs.va = va;
        vs.vb = vb;
        vs.vc = vc;
        vs.symbolic = true;
    } else {
        vs.va = value(base, a);
        vs.vb = value(base, b);
        vs.vc = value(base, c);
        vs.symbolic = false;
    }
    return vs;
}

PolyX ProblemSpec::radicand() const {
    if (mode != ProblemMode::Concrete)
        throw SpecError("$.mode", "radicand requires a concrete spec");
    return PolyX::monomial(a, static_cast<int>(p)) + PolyX::monomial(b, 1) + PolyX(c);
}

// ----------------------------------------------------------------- output

namespace {

json verdict_json_obj(const Verdict& v) {
    json cands = json::array();
    for (const auto& c : v.candidates) {
        json jc;
        jc["gauss"] = c.gauss;
        jc["vX"] = c.vx.str();
        if (c.gamma)
            jc["gamma"] = c.gamma->str();
        else
            jc["gamma"] = nullptr;
        cands.push_back(jc);
    }
    json cert;
    cert["kind"] = v.certificate.kind;
    cert["theorem"] = v.certificate.theorem;
    cert["details"] = v.certificate.details;
    if (v.certificate.n_param >= 0) cert["n"] = v.certificate.n_param;
    return json{{"tag", tag_name(v.tag)}, {"certificate", cert}, {"candidates", cands}};
}

}  // namespace

std::string verdict_to_json(const Verdict& v) { return verdict_json_obj(v).dump(2); }

std::string verdict_to_text(const Verdict& v) {
    std::ostringstream out;
    out << "verdict: " << tag_name(v.tag) << "\n";
    out << "certificate: " << v.certificate.kind << " (" << v.certificate.theorem << ")\n";
    if (!v.certificate.details.empty()) out << "  " << v.certificate.details << "\n";
    for (const auto& c : v.candidates) {
        out << "candidate: " << (c.gauss ? "Gauss" : "non-Gauss") << ", vX = " << c.vx.str();
        if (c.gamma) out << ", gamma = " << c.gamma->str();
        out << "\n";
    }
    return out.str();
}

std::string report_to_json(const AnalysisReport& r) {
    json j;
    j["values"] = {{"va", r.va.str()}, {"vb", r.vb.str()}, {"vc", r.vc.str()},
                   {"v_radicand", r.vf.str()}};
    j["vX"] = {{"pair", r.vx_pair.str()},
               {"required", r.vx_required.str()},
               {"consistent", r.vx_consistent}};
    if (r.gen.normalizable) {
        j["normalizer"] = r.gen.norm.str();
        j["residue"] = r.gen.residue.str();
    } else {
        j["normalizer"] = nullptr;
        j["residue"] = nullptr;
    }
    j["pattern_verdict"] = verdict_json_obj(r.pattern_verdict);
    j["case"] = r.case_tag;
    j["value_verdict"] = verdict_json_obj(r.value_verdict);
    j["verdict"] = verdict_json_obj(r.verdict);
    return j.dump(2);
}

std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "va = " << r.va.str() << ", vb = " << r.vb.str() << ", vc = " << r.vc.str()
        << ", v(radicand) = " << r.vf.str() << "\n";
    out << "vX: pair = " << r.vx_pair.str() << ", required = " << r.vx_required.str()
        << (r.vx_consistent ? " (consistent)" : " (INCONSISTENT)") << "\n";
    if (r.gen.normalizable) {
        out << "normalizer: " << r.gen.norm.str() << "\n";
        out << "residue generator: " << r.gen.residue.str() << "\n";
    } else {
        out << "residue generator: not normalizable (value-group ramification)\n";
    }
    out << "case: " << (r.case_tag == 0 ? std::string("NONE") : std::to_string(r.case_tag))
        << "\n";
    out << "pattern " << verdict_to_text(r.pattern_verdict);
    out << "value-level " << verdict_to_text(r.value_verdict);
    out << "final " << verdict_to_text(r.verdict);
    return out.str();
}

}  // namespace ruledres
