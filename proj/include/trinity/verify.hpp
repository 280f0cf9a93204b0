#pragma once

#include "trinity/graph.hpp"
#include "trinity/spanning.hpp"

namespace trinity {

// One named theorem check on a concrete instance.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample or counts
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    int distributivity_component_limit = 200;  // skip triple checks above this size
    bool check_products = true;
};

// Runs every theorem suite applicable to the input's genus:
//   planar — tree trinity counts, connectedness, unique extrema, phi closure,
//            meet/join distributivity, clocked state properties;
//   toric  — component classification, cyclic-component recurrence,
//            one-turn orders (irreducible only), wreath extension counts.
VerifyReport verify_trinity(const Trinity& t, const VerifyOptions& opt = {});

// Explicit product-theorem check: the transition graph of connected_sum(t, b,
// part) must be label-isomorphic to the product of the factor graphs.
bool product_theorem_holds(const Trinity& t, TriangleId b, const Trinity& part, std::string* why = nullptr);

// Component statistics used by census records and reports.
struct ComponentSummary {
    int states = 0;
    int cyclic = 0, acyclic = 0, isolated = 0;
    std::vector<int> cyclic_sizes, acyclic_sizes;  // sorted descending, acyclic excludes isolated
};

ComponentSummary summarize_components(const TransitionGraph& g);

}  // namespace trinity
