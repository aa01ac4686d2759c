#pragma once

#include "singlip/graph.hpp"
#include "singlip/strands.hpp"

#include <string>
#include <vector>

namespace singlip {

struct Check {
    std::string name;    // e.g. "laufer[z] E5"
    bool ok = true;
    std::string detail;  // residual or reason
};

struct VerifyReport {
    std::vector<Check> checks;
    bool ok() const;
};

// Plane towers: verify_tower. Surface graphs: connectedness, negative
// definiteness, unimodularity when flagged as a tower, Laufer residuals.
VerifyReport verify_graph(const DualGraph& g);
// Ultrametricity of the contact matrix plus the invariants of its resolution.
VerifyReport verify_curve(const Curve& c);

}  // namespace singlip
