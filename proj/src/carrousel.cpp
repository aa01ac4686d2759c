#include "singlip/carrousel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace singlip {

std::size_t CarrouselTree::leaf_count() const {
    return std::count_if(nodes.begin(), nodes.end(), [](const auto& n) { return n.leaf; });
}

std::string CarrouselTree::canonical(int v) const {
    const auto& nd = nodes.at(v);
    std::string label = nd.edge_label ? "^" + std::to_string(*nd.edge_label) : "";
    if (nd.leaf) return "L" + label;
    std::vector<std::pair<const Rational*, std::string>> kids;
    for (int c : nd.children)
        kids.emplace_back(nodes[c].leaf ? nullptr : &nodes[c].weight, canonical(c));
    std::sort(kids.begin(), kids.end(), [](const auto& a, const auto& b) {
        // internal vertices by weight, then leaves
        if ((a.first == nullptr) != (b.first == nullptr)) return a.first != nullptr;
        if (!a.first) return a.second < b.second;
        if (*a.first != *b.first) return *a.first < *b.first;
        return a.second < b.second;
    });
    std::string s = "(" + nd.weight.str() + label;
    for (const auto& k : kids) s += " " + k.second;
    return s + ")";
}

std::string CarrouselTree::canonical() const { return nodes.empty() ? "" : canonical(0); }

CarrouselTree build_carrousel_tree(const ContactMatrix& q) {
    std::size_t m = q.size();
    if (m == 0) throw DomainError("empty contact matrix");
    std::set<Rational> level_set;
    for (const auto& v : q.finite_values()) {
        if (v < Rational(1)) throw DomainError("contact " + v.str() + " below 1");
        level_set.insert(v);
    }
    level_set.insert(Rational(1));

    // Build bottom-up with every class at every level, then splice out
    // non-root vertices that have a single child.
    std::vector<CarrouselNode> raw;
    std::vector<int> top(m);
    for (std::size_t j = 0; j < m; ++j) {
        CarrouselNode leaf;
        leaf.leaf = true;
        leaf.strand = j;
        raw.push_back(leaf);
        top[j] = static_cast<int>(j);
    }
    for (auto it = level_set.rbegin(); it != level_set.rend(); ++it) {
        std::vector<int> cls(m, -1);
        for (std::size_t j = 0; j < m; ++j) {
            if (cls[j] >= 0) continue;
            CarrouselNode node;
            node.weight = *it;
            int id = static_cast<int>(raw.size());
            std::set<int> kids;
            for (std::size_t k = 0; k < m; ++k)
                if (q.at(j, k) >= Extended(*it)) {
                    cls[k] = id;
                    kids.insert(top[k]);
                }
            node.children.assign(kids.begin(), kids.end());
            raw.push_back(node);
            for (int c : node.children) raw[c].parent = id;
        }
        top.assign(cls.begin(), cls.end());
    }
    int root = top[0];
    for (std::size_t j = 1; j < m; ++j)
        if (top[j] != root) throw DomainError("contact matrix is not ultrametric");

    // Copy with splicing, root first.
    CarrouselTree t;
    std::function<void(int, int)> copy = [&](int v, int parent) {
        int id = static_cast<int>(t.nodes.size());
        CarrouselNode nd = raw[v];
        nd.children.clear();
        nd.parent = parent;
        t.nodes.push_back(nd);
        if (parent >= 0) t.nodes[parent].children.push_back(id);
        for (int c : raw[v].children) {
            int cc = c;
            while (!raw[cc].leaf && raw[cc].children.size() == 1) cc = raw[cc].children[0];
            copy(cc, id);
        }
    };
    copy(root, -1);
    return t;
}

CarrouselTree decorate(const CarrouselTree& in) {
    CarrouselTree t = in;
    std::function<void(int, long, const Rational*)> walk = [&](int v, long parent_n,
                                                               const Rational* parent_q) {
        auto& nd = t.nodes[v];
        if (nd.leaf) return;
        if (parent_q && !(*parent_q < nd.weight))
            throw DomainError("weights not increasing along a root path at " + nd.weight.str());
        long n = std::lcm(parent_n, nd.weight.den().get_si());
        nd.n = n;
        nd.m = (nd.weight * Rational(n)).to_long();
        if (parent_q) {
            nd.r = n / parent_n;
            nd.s = ((nd.weight - *parent_q) * Rational(n)).to_long();
        } else {
            nd.r.reset();
            nd.s.reset();
        }
        Rational q = nd.weight;
        for (int c : nd.children) walk(c, n, &q);
    };
    walk(0, 1, nullptr);
    t.decorated = true;
    return t;
}

CarrouselTree reduce_to_eggers(const CarrouselTree& in) {
    if (!in.decorated) throw DomainError("reduce_to_eggers needs a decorated tree");
    CarrouselTree out;
    out.decorated = true;
    out.reduced = true;
    std::function<void(int, int, std::optional<long>)> copy = [&](int v, int parent,
                                                                  std::optional<long> label) {
        int id = static_cast<int>(out.nodes.size());
        CarrouselNode nd = in.nodes[v];
        nd.children.clear();
        nd.parent = parent;
        nd.edge_label = label;
        out.nodes.push_back(nd);
        if (parent >= 0) out.nodes[parent].children.push_back(id);
        if (nd.leaf) return;
        long r = nd.r.value_or(1);
        std::map<std::string, std::vector<int>> classes;
        for (int c : in.nodes[v].children) classes[in.canonical(c)].push_back(c);
        int extra = -1;
        std::vector<int> keep;
        for (const auto& [code, members] : classes) {
            long size = static_cast<long>(members.size());
            long rem = size % r;
            if (rem > 1 || (rem == 1 && extra >= 0))
                throw DomainError("children of vertex " + nd.weight.str() +
                                  " cannot be grouped in groups of " + std::to_string(r));
            if (rem == 1) extra = members.back();
            for (long g = 0; g < size / r; ++g) keep.push_back(members[g * r]);
        }
        for (int c : keep) copy(c, id, std::nullopt);
        if (extra >= 0) copy(extra, id, r > 1 ? std::optional<long>(r) : std::nullopt);
    };
    copy(0, -1, std::nullopt);
    return out;
}

bool trees_isomorphic(const CarrouselTree& a, const CarrouselTree& b) {
    return a.canonical() == b.canonical();
}

ContactMatrix leaf_contacts(const CarrouselTree& t) {
    std::size_t m = t.leaf_count();
    std::vector<int> leaf_of(m, -1);
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        if (t.nodes[i].leaf) {
            if (t.nodes[i].strand >= m || leaf_of[t.nodes[i].strand] >= 0)
                throw DomainError("leaf strand ids are not a permutation");
            leaf_of[t.nodes[i].strand] = static_cast<int>(i);
        }
    auto ancestors = [&](int v) {
        std::vector<int> path;
        for (; v >= 0; v = t.nodes[v].parent) path.push_back(v);
        return path;
    };
    ContactMatrix q(m);
    for (std::size_t j = 0; j < m; ++j) {
        q.set(j, j, Extended::infinity());
        auto pj = ancestors(leaf_of[j]);
        std::set<int> sj(pj.begin(), pj.end());
        for (std::size_t k = j + 1; k < m; ++k)
            for (int a : ancestors(leaf_of[k]))
                if (sj.count(a)) {
                    q.set(j, k, t.nodes[a].weight);
                    break;
                }
    }
    return q;
}

}  // namespace singlip
