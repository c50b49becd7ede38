#pragma once

#include <optional>
#include <string>

#include "ruledres/classifier.hpp"

namespace ruledres {

/// Error in a problem specification, carrying the JSON field path.
struct SpecError : std::runtime_error {
    SpecError(const std::string& path, const std::string& msg)
        : std::runtime_error(path + ": " + msg), path(path) {}
    std::string path;
};

enum class ProblemMode { Symbolic, Concrete };

/// One problem instance as described by a JSON spec file: either the
/// coefficient values alone (symbolic) or explicit coefficients with an
/// optional pair of definition (concrete).
struct ProblemSpec {
    long p = 0;
    BaseFieldDesc base;
    ProblemMode mode = ProblemMode::Symbolic;

    // symbolic
    RatGroup vk;
    ExtRat va, vb, vc;

    // concrete
    BaseElem a, b, c;
    std::optional<PairOfDefinition> pair;

    static ProblemSpec from_json_text(const std::string& text);
    static ProblemSpec from_file(const std::string& path);

    /// Coefficient values of this spec (computed for concrete mode).
    ValueSpec value_spec() const;
    PolyX radicand() const;
};

// Report rendering.
std::string verdict_to_json(const Verdict& v);
std::string verdict_to_text(const Verdict& v);
std::string report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

}  // namespace ruledres
