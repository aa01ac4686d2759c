#include "singlip/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace singlip {

std::string to_string(ArrowKind k) {
    switch (k) {
        case ArrowKind::GenericLinear: return "generic-linear";
        case ArrowKind::Polar: return "polar";
        case ArrowKind::Function: return "function";
        case ArrowKind::Branch: return "branch";
    }
    return "function";
}

ArrowKind arrow_kind_from_string(const std::string& s) {
    if (s == "generic-linear") return ArrowKind::GenericLinear;
    if (s == "polar") return ArrowKind::Polar;
    if (s == "function") return ArrowKind::Function;
    if (s == "branch") return ArrowKind::Branch;
    throw DomainError("unknown arrow kind '" + s + "'");
}

int DualGraph::add_vertex(Vertex v) {
    vertices.push_back(std::move(v));
    return static_cast<int>(vertices.size()) - 1;
}

bool DualGraph::remove_edge(int a, int b) {
    for (auto it = edges.begin(); it != edges.end(); ++it)
        if ((it->first == a && it->second == b) || (it->first == b && it->second == a)) {
            edges.erase(it);
            return true;
        }
    return false;
}

int DualGraph::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return static_cast<int>(i);
    return -1;
}

std::vector<int> DualGraph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v && a != v) out.push_back(a);
    }
    return out;
}

int DualGraph::valence(int v) const { return static_cast<int>(neighbors(v).size()); }

int DualGraph::edge_count(int a, int b) const {
    int c = 0;
    for (const auto& [x, y] : edges)
        if ((x == a && y == b) || (x == b && y == a)) ++c;
    return c;
}

bool DualGraph::connected() const {
    if (vertices.empty()) return true;
    std::vector<bool> seen(size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool DualGraph::is_tree() const { return connected() && edges.size() + 1 == vertices.size(); }

long DualGraph::arrow_mult(int v, const std::string& n) const {
    long s = 0;
    for (const auto& a : arrows)
        if (a.vertex == v && a.name == n) s += a.multiplicity;
    return s;
}

std::vector<std::string> DualGraph::function_names() const {
    if (vertices.empty()) return {};
    std::vector<std::string> out;
    for (const auto& [n, m] : vertices[0].mult) {
        bool all = std::all_of(vertices.begin(), vertices.end(),
                               [&](const Vertex& v) { return v.mult.count(n) > 0; });
        if (all) out.push_back(n);
    }
    return out;
}

std::vector<std::vector<Rational>> DualGraph::intersection_matrix() const {
    std::size_t n = size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(vertices[i].self_intersection);
    for (const auto& [a, b] : edges) {
        if (a == b) continue;
        m[a][b] += Rational(1);
        m[b][a] += Rational(1);
    }
    return m;
}

long DualGraph::laufer_residual(int v, const std::string& n) const {
    long r = vertices[v].mult.at(n) * vertices[v].self_intersection;
    for (int w : neighbors(v)) r += vertices[w].mult.at(n);
    return r + arrow_mult(v, n);
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    std::size_t n = m.size();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

bool negative_definite(const std::vector<std::vector<Rational>>& m) {
    std::size_t n = m.size();
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<Rational>> minor(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = -m[i][j];
        if (determinant(minor).sign() <= 0) return false;
    }
    return true;
}

std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> b) {
    std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) throw DomainError("singular intersection matrix");
        std::swap(m[p], m[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= m[i][i];
    return b;
}

}  // namespace singlip
