#pragma once

#include "singlip/exactnum.hpp"
#include "singlip/strands.hpp"

#include <optional>
#include <string>
#include <vector>

namespace singlip {

struct CarrouselNode {
    bool leaf = false;
    std::size_t strand = 0;  // leaves only
    Rational weight;         // internal vertices only
    int parent = -1;
    std::vector<int> children;
    // decorations
    std::optional<long> m, n, r, s;
    // r_v of the parent, attached to the top edge of an unpaired subtree after reduction
    std::optional<long> edge_label;
};

struct CarrouselTree {
    std::vector<CarrouselNode> nodes;  // nodes[0] is the root
    bool decorated = false;
    bool reduced = false;

    const CarrouselNode& root() const { return nodes.at(0); }
    std::size_t leaf_count() const;
    // Sorted recursive encoding; equal strings iff root- and weight-preserving isomorphic.
    std::string canonical() const;
    std::string canonical(int v) const;
};

CarrouselTree build_carrousel_tree(const ContactMatrix& q);
CarrouselTree decorate(const CarrouselTree& t);
CarrouselTree reduce_to_eggers(const CarrouselTree& t);
bool trees_isomorphic(const CarrouselTree& a, const CarrouselTree& b);
// Contact of two leaves = weight of their lowest common ancestor.
ContactMatrix leaf_contacts(const CarrouselTree& t);

}  // namespace singlip
