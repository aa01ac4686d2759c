#pragma once

#include "singlip/exactnum.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace singlip {

enum class ArrowKind { GenericLinear, Polar, Function, Branch };

std::string to_string(ArrowKind k);
ArrowKind arrow_kind_from_string(const std::string& s);

// Unreduced inner-rate vector (p, q) with rate p/q.
struct RateVector {
    long p = 1;
    long q = 1;
    Rational value() const { return Rational(p, q); }
    friend bool operator==(const RateVector&, const RateVector&) = default;
};

struct Vertex {
    std::string id;
    long self_intersection = -1;
    long genus = 0;
    std::optional<Rational> rate;
    std::optional<RateVector> rate_vector;
    std::map<std::string, long> mult;
    bool is_L = false;
    bool is_Delta = false;
    bool is_P = false;
};

struct Arrow {
    int vertex = 0;
    std::string name;
    long multiplicity = 1;
    ArrowKind kind = ArrowKind::Function;
};

// Whether the graph is a tower of point blow-ups over the plane or the
// resolution graph of a surface germ; selects the checks `verify` runs.
enum class GraphBase { Plane, Surface };

struct DualGraph {
    std::string name;
    GraphBase base = GraphBase::Surface;
    std::vector<Vertex> vertices;
    std::vector<std::pair<int, int>> edges;  // multi-edges allowed
    std::vector<Arrow> arrows;

    int add_vertex(Vertex v);
    void add_edge(int a, int b) { edges.emplace_back(a, b); }
    // Removes one copy of the edge a-b; returns false if absent.
    bool remove_edge(int a, int b);
    int index_of(const std::string& id) const;  // -1 if absent

    std::size_t size() const { return vertices.size(); }
    std::vector<int> neighbors(int v) const;  // with repetition for multi-edges
    int valence(int v) const;                  // graph edges only
    int edge_count(int a, int b) const;
    bool connected() const;
    bool is_tree() const;

    // Arrow multiplicity sum at v over arrows named `name`.
    long arrow_mult(int v, const std::string& name) const;
    std::vector<std::string> function_names() const;  // names with multiplicities on every vertex

    // Intersection matrix (self-intersections on the diagonal, edge counts off it).
    std::vector<std::vector<Rational>> intersection_matrix() const;
    // Laufer residual m_j E_j^2 + sum_{i~j} m_i + arrows(name at j).
    long laufer_residual(int v, const std::string& name) const;
};

Rational determinant(std::vector<std::vector<Rational>> m);
// Sylvester criterion on the leading principal minors of -M.
bool negative_definite(const std::vector<std::vector<Rational>>& m);
// Solves m x = b exactly; throws DomainError when singular.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> b);

}  // namespace singlip
