#pragma once

#include "singlip/graph.hpp"
#include "singlip/tower.hpp"

#include <string>
#include <vector>

namespace singlip {

struct Divisor {
    std::vector<Rational> coeffs;  // indexed like the graph's vertices
    std::vector<Arrow> strict;

    bool integral() const;
};

Divisor solve_multiplicities(const DualGraph& g, const std::string& name, bool strict_integral = true);

// Componentwise minimum; the strict part is recomputed from Laufer residuals.
Divisor pencil_min(const DualGraph& g, const std::vector<Divisor>& divisors,
                   const std::string& name = "min");

bool has_base_point(const std::vector<Divisor>& divisors, int vertex);

constexpr int kDefaultPencilCap = 64;

struct PencilResolution {
    DualGraph graph;
    std::vector<int> blown_up;  // created vertices in order
};

// Blows up the point carried by the strict transform of the generator of
// least multiplicity until that minimum is attained by two generators.
// Generator multiplicities are read from the graph (solved when absent).
PencilResolution resolve_pencil(const DualGraph& g, const std::vector<std::string>& generators,
                                int cap = kDefaultPencilCap);

// Blows up every intersection point of two odd-multiplicity components of the
// total transform of `f` (arrows included).
Tower laufer_parity_prepare(const Tower& t, const std::string& f = "f");

// Resolution graph of z^2 + f = 0 over a parity-prepared tower of f.
DualGraph laufer_double_cover(const DualGraph& tree, const std::string& f = "f");

// Rational (-1)-vertices of valence <= 2 carrying no arrow.
std::vector<int> contractible_vertices(const DualGraph& g);

}  // namespace singlip
