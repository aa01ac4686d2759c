#pragma once

#include "singlip/graph.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace singlip {

struct NodeFlags {
    bool is_L = false;
    bool is_Delta = false;
    bool is_P = false;
    bool is_special_P = false;
    bool is_inner_node = false;
    bool is_outer_node = false;
    bool is_initial_node = false;
};

// L and P flags are also inferred from generic-linear and polar arrows.
// Special-P detection needs rates on the vertex and its neighbours; with
// require_rates=false it is skipped where rates are missing.
std::vector<NodeFlags> classify_nodes(const DualGraph& g, bool require_rates = true);

enum class PieceKind { B, D, A, Conical };

struct Piece {
    PieceKind kind = PieceKind::B;
    Rational q;   // B, D, Conical; low rate of A
    Rational q2;  // high rate of A
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;  // edge-only A pieces
    int node = -1;                           // central vertex of B pieces
    bool special = false;
    bool is_protected = false;

    std::string label() const;  // "B(5/3)", "A(1,5/3)", "B(1)" for conical
};

enum class DecompositionMode { ThickThin, CSquare, Initial, Inner, Outer };

std::string to_string(DecompositionMode m);
DecompositionMode decomposition_mode_from_string(const std::string& s);

struct Decomposition {
    DecompositionMode mode = DecompositionMode::Inner;
    std::vector<Piece> pieces;
    std::vector<std::pair<int, int>> adjacency;  // piece index pairs, a < b

    std::vector<int> neighbors(int p) const;
    // Order-independent description used to compare decompositions.
    std::string canonical() const;
};

struct Zone {
    int l_node = -1;  // thick zones
    std::vector<int> vertices;
    std::optional<Rational> rate;  // thin zones, when rates are present
};

struct ThickThin {
    std::vector<Zone> thick;
    std::vector<Zone> thin;
    bool metrically_conical() const { return thin.empty(); }
};

ThickThin thick_thin(const DualGraph& g);
bool is_metrically_conical(const DualGraph& g);
Rational thin_zone_rate(const DualGraph& g, const Zone& zone);

Decomposition csquare_decomposition(const DualGraph& tower);
Decomposition amalgamate(const Decomposition& d, const std::set<int>& protected_pieces = {});
Decomposition build_decomposition(const DualGraph& g, DecompositionMode mode);

// Canonical string of a vertex-labelled multigraph (label refinement plus
// exhaustive individualisation).
std::string canonical_graph_form(const std::vector<std::string>& labels,
                                 const std::vector<std::pair<int, int>>& edges);

struct Signature {
    std::string metric;
    std::string form;
    friend bool operator==(const Signature& a, const Signature& b) {
        return a.metric == b.metric && a.form == b.form;
    }
};

// Name of the generic linear form: the name of its arrows, or "l".
std::string generic_linear_name(const DualGraph& g);
Signature inner_signature(const DualGraph& g);
Signature outer_signature(const DualGraph& g);
bool signatures_equal(const Signature& a, const Signature& b);

}  // namespace singlip
