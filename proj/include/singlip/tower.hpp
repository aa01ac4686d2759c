#pragma once

#include "singlip/graph.hpp"
#include "singlip/strands.hpp"

#include <string>
#include <vector>

namespace singlip {

// Position of a point on a freshly created exceptional curve, as the value of
// v/u in the local coordinates (u, v) at the blown-up center.
struct ChartStep {
    enum class Kind { Zero, Finite, Infinity };
    Kind kind = Kind::Zero;
    Rational c;  // Finite only, nonzero

    std::string str() const;
    friend bool operator<(const ChartStep& a, const ChartStep& b);
    friend bool operator==(const ChartStep& a, const ChartStep& b) {
        return a.kind == b.kind && (a.kind != Kind::Finite || a.c == b.c);
    }
};

struct BlowupEvent {
    enum class Center { Origin, Free, Satellite };
    int index = 0;  // vertex index created by this event
    Center center = Center::Origin;
    int e1 = -1, e2 = -1;  // curves through the center
    std::string position;  // position tag on e1 for free centers
    std::vector<std::pair<std::size_t, long>> branches_through;  // (branch, local multiplicity)
    // Keys chosen on successive exceptional curves from the origin to the center.
    // Absent for graph-level blow-ups.
    bool has_chart = false;
    std::vector<ChartStep> chart;
};

struct Tower {
    std::vector<BlowupEvent> events;
    DualGraph tree;
};

constexpr std::size_t kDefaultEventCap = 512;
// SINGLIP_EVENT_CAP if set and valid, else the default.
std::size_t event_cap_from_env();

// Minimal embedded resolution. Tracked functions: "f" (the curve, one branch
// arrow per branch) and "l" (a generic linear form, arrow on E1).
Tower resolve_curve(const Curve& curve, std::size_t event_cap = event_cap_from_env());

// Graph-level point blow-up of the intersection of e1 with e2 (e2 = -1 for a
// free point) through which the listed arrows pass.
int blow_up_point(Tower& t, int e1, int e2, const std::vector<std::size_t>& arrows);
// Blows up every edge and every arrow point of function `name`.
void blow_up_double_points(Tower& t, const std::string& name = "f");
// Blows up `times` times along the strict transform carried by arrow `arrow`.
void blow_up_along_arrow(Tower& t, std::size_t arrow, int times);

struct TowerReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

TowerReport verify_tower(const DualGraph& tree);

}  // namespace singlip
