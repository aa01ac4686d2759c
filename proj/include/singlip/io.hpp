#pragma once

#include "singlip/carrousel.hpp"
#include "singlip/decomp.hpp"
#include "singlip/graph.hpp"
#include "singlip/strands.hpp"
#include "singlip/surfgraph.hpp"
#include "singlip/tower.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace singlip {

using json = nlohmann::ordered_json;

// Malformed or schema-violating input (as opposed to DomainError).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace fmt {
inline constexpr const char* kCurve = "singlip.curve/1";
inline constexpr const char* kGraph = "singlip.graph/1";
inline constexpr const char* kTower = "singlip.tower/1";
inline constexpr const char* kContacts = "singlip.contacts/1";
inline constexpr const char* kCarrousel = "singlip.carrousel/1";
inline constexpr const char* kDecomposition = "singlip.decomposition/1";
inline constexpr const char* kThickThin = "singlip.thickthin/1";
inline constexpr const char* kDivisor = "singlip.divisor/1";
}  // namespace fmt

struct ReadOptions {
    bool strict = true;                           // unknown fields are errors
    std::vector<std::string>* warnings = nullptr;  // collects them otherwise
};

// Parses text, reporting syntax errors with line and column.
json parse_json(const std::string& text, const std::string& source = "<input>");

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j, const std::string& path = "$");

json curve_to_json(const Curve& c, const std::string& name = "");
Curve curve_from_json(const json& j, const ReadOptions& opt = {});

json graph_to_json(const DualGraph& g);
DualGraph graph_from_json(const json& j, const ReadOptions& opt = {});

json tower_to_json(const Tower& t);
json contacts_to_json(const ContactMatrix& q, const std::vector<Strand>& strands);
json carrousel_to_json(const CarrouselTree& t);
json decomposition_to_json(const DualGraph& g, const Decomposition& d);
json thick_thin_to_json(const DualGraph& g, const ThickThin& tt);
json divisor_to_json(const DualGraph& g, const Divisor& d, const std::string& name);

// Returns the "format" tag, or "" when absent.
std::string format_of(const json& j);

std::string carrousel_dot(const CarrouselTree& t);
std::string graph_dot(const DualGraph& g);
std::string decomposition_dot(const DualGraph& g, const Decomposition& d);

}  // namespace singlip
