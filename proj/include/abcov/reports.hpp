#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace abcov {

/// Result of one reproduction command. `doc` is deterministic except for
/// the top-level timing field; everything under "results" is
/// byte-identical across runs on identical inputs.
struct RunReport {
    nlohmann::ordered_json doc;
    bool ok = true;

    std::string results_dump() const { return doc.at("results").dump(); }
};

std::string default_data_dir();

/// Smoothness, auto blow-up per config directives, surface invariants,
/// comparison against the config's expected block.
RunReport cmd_invariants(const std::string& config_path);

/// Tangent or bicanonical eigensheaf table with golden comparison
/// against the bundled fixture. `which` is "tangent" or "bicanonical".
RunReport cmd_tables(const std::string& config_path, const std::string& which,
                     const std::string& fixture_path, bool fail_fast = false);

/// Abelianised homology of the affine group or one of its three index-3
/// subgroups. `target` is "gamma", "sigma1", "sigma2" or "sigma3".
RunReport cmd_homology(const std::string& target);

/// Ideal-membership certificate for the subgroup-sum target. `mode` is
/// "full", "without-extra" or "custom" (with generator triples
/// "a,b,c" in the surface syntax).
RunReport cmd_bloch(const std::string& mode, const std::vector<std::string>& custom_triples = {});

/// Relation suite plus the fixed-point census of the 27 torus classes.
RunReport cmd_free_action();

} // namespace abcov
