// ruledres: decide whether the residue field extension of
// k(X)(p-th root of a*X^p + b*X + c) is ruled, from a JSON problem spec.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ruledres/problem.hpp"

namespace {

using namespace ruledres;

struct Options {
    std::vector<std::string> files;
    std::string format = "text";
    std::string out_path;
    std::string poly;
};

int write_out(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(opt.out_path, std::ios::app);
    if (!out) {
        std::cerr << "error: cannot open output file '" << opt.out_path << "'\n";
        return 2;
    }
    out << text;
    return 0;
}

int run_classify(const Options& opt) {
    for (const auto& file : opt.files) {
        ProblemSpec spec = ProblemSpec::from_file(file);
        Verdict v = classify_value_level(spec.value_spec());
        std::string body = opt.format == "json" ? verdict_to_json(v) + "\n" : verdict_to_text(v);
        if (int rc = write_out(opt, body)) return rc;
    }
    return 0;
}

int run_analyze(const Options& opt) {
    for (const auto& file : opt.files) {
        ProblemSpec spec = ProblemSpec::from_file(file);
        if (spec.mode != ProblemMode::Concrete)
            throw SpecError("$.mode", "analyze requires a concrete spec");
        if (!spec.pair) throw SpecError("$.pair", "analyze requires pair");
        AnalysisReport r = analyze(spec.base, spec.a, spec.b, spec.c, *spec.pair, spec.p);
        std::string body = opt.format == "json" ? report_to_json(r) + "\n" : report_to_text(r);
        if (int rc = write_out(opt, body)) return rc;
    }
    return 0;
}

int run_value(const Options& opt) {
    for (const auto& file : opt.files) {
        ProblemSpec spec = ProblemSpec::from_file(file);
        if (spec.mode != ProblemMode::Concrete)
            throw SpecError("$.mode", "value requires a concrete spec");
        if (!spec.pair) throw SpecError("$.pair", "value requires pair");
        PolyX f;
        try {
            f = parse_polyx(spec.base, opt.poly);
        } catch (const ParseError& e) {
            throw SpecError("--poly", e.what());
        }
        ExtRat w = poly_value(f, *spec.pair, spec.base);
        std::string body = w.str() + "\n";
        if (opt.format == "json") body = "{\"value\": \"" + w.str() + "\"}\n";
        if (int rc = write_out(opt, body)) return rc;
    }
    return 0;
}

int run_residue(const Options& opt) {
    for (const auto& file : opt.files) {
        ProblemSpec spec = ProblemSpec::from_file(file);
        if (spec.mode != ProblemMode::Concrete)
            throw SpecError("$.mode", "residue requires a concrete spec");
        if (!spec.pair) throw SpecError("$.pair", "residue requires pair");
        ResidueGenResult g = residue_generator(spec.radicand(), *spec.pair, spec.base, spec.p);
        std::ostringstream body;
        if (opt.format == "json") {
            if (g.normalizable)
                body << "{\"normalizable\": true, \"normalizer\": \"" << g.norm.str()
                     << "\", \"residue\": \"" << g.residue.str() << "\"}\n";
            else
                body << "{\"normalizable\": false}\n";
        } else {
            if (g.normalizable) {
                body << "normalizer: " << g.norm.str() << "\n";
                body << "residue generator: " << g.residue.str() << "\n";
            } else {
                body << "not normalizable: (1/p) v(radicand) lies outside vk + Z*gamma\n";
            }
        }
        if (int rc = write_out(opt, body.str())) return rc;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ruledness classifier for k(X)(p-th root of a*X^p + b*X + c)"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool needs_poly = false) {
        cmd->add_option("files", opt.files, "problem spec file(s), JSON")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", opt.out_path, "write output to PATH instead of stdout");
        if (needs_poly)
            cmd->add_option("--poly", opt.poly, "polynomial in X to evaluate")->required();
    };

    CLI::App* c_classify = app.add_subcommand("classify", "value-level verdict from coefficient values");
    CLI::App* c_analyze = app.add_subcommand("analyze", "full concrete analysis against a pair");
    CLI::App* c_value = app.add_subcommand("value", "valuation of a polynomial under the pair");
    CLI::App* c_residue = app.add_subcommand("residue", "residue generator of the radicand");
    add_common(c_classify);
    add_common(c_analyze);
    add_common(c_value, true);
    add_common(c_residue);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(c_classify)) return run_classify(opt);
        if (app.got_subcommand(c_analyze)) return run_analyze(opt);
        if (app.got_subcommand(c_value)) return run_value(opt);
        return run_residue(opt);
    } catch (const SpecError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
