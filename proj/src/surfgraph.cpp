#include "singlip/surfgraph.hpp"

#include <algorithm>
#include <set>

namespace singlip {

bool Divisor::integral() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& r) { return r.is_integer(); });
}

Divisor solve_multiplicities(const DualGraph& g, const std::string& name, bool strict_integral) {
    auto m = g.intersection_matrix();
    if (!negative_definite(m)) throw DomainError("intersection matrix is not negative definite");
    std::vector<Rational> b(g.size(), Rational(0));
    Divisor d;
    for (const auto& a : g.arrows)
        if (a.name == name) {
            b[a.vertex] -= Rational(a.multiplicity);
            d.strict.push_back(a);
        }
    if (d.strict.empty()) throw DomainError("no arrows named '" + name + "'");
    d.coeffs = solve_linear(std::move(m), std::move(b));
    if (strict_integral && !d.integral())
        throw DomainError("multiplicities of '" + name + "' are not integral");
    return d;
}

Divisor pencil_min(const DualGraph& g, const std::vector<Divisor>& divisors, const std::string& name) {
    if (divisors.empty()) throw DomainError("pencil_min of no divisors");
    Divisor out;
    out.coeffs = divisors[0].coeffs;
    for (const auto& d : divisors) {
        if (d.coeffs.size() != g.size()) throw DomainError("divisor size does not match graph");
        for (std::size_t i = 0; i < g.size(); ++i) out.coeffs[i] = min(out.coeffs[i], d.coeffs[i]);
    }
    for (std::size_t j = 0; j < g.size(); ++j) {
        Rational r = out.coeffs[j] * Rational(g.vertices[j].self_intersection);
        for (int w : g.neighbors(static_cast<int>(j))) r += out.coeffs[w];
        r = -r;
        if (r.sign() < 0)
            throw DomainError("negative residual " + r.str() + " at " + g.vertices[j].id);
        if (r.sign() > 0) {
            if (!r.is_integer()) throw DomainError("non-integral residual at " + g.vertices[j].id);
            out.strict.push_back({static_cast<int>(j), name, r.to_long(), ArrowKind::Polar});
        }
    }
    return out;
}

bool has_base_point(const std::vector<Divisor>& divisors, int vertex) {
    for (const auto& d : divisors)
        if (d.coeffs.at(vertex) != divisors[0].coeffs.at(vertex)) return true;
    return false;
}

namespace {

std::string fresh_id(const DualGraph& g) {
    for (std::size_t k = g.size() + 1;; ++k) {
        std::string id = "E" + std::to_string(k);
        if (g.index_of(id) < 0) return id;
    }
}

void ensure_mult(DualGraph& g, const std::string& name) {
    bool have = std::all_of(g.vertices.begin(), g.vertices.end(),
                            [&](const Vertex& v) { return v.mult.count(name) > 0; });
    if (have) return;
    Divisor d = solve_multiplicities(g, name);
    for (std::size_t i = 0; i < g.size(); ++i) g.vertices[i].mult[name] = d.coeffs[i].to_long();
}

// Free-point blow-up on v where the listed arrows meet it.
int graph_blow_up(DualGraph& g, int v, const std::vector<std::size_t>& arrows) {
    Vertex nv;
    nv.id = fresh_id(g);
    nv.self_intersection = -1;
    for (const auto& [n, m] : g.vertices[v].mult) nv.mult[n] = m;
    for (std::size_t a : arrows) nv.mult[g.arrows[a].name] += g.arrows[a].multiplicity;
    int id = g.add_vertex(nv);
    g.vertices[v].self_intersection -= 1;
    g.add_edge(v, id);
    for (std::size_t a : arrows) g.arrows[a].vertex = id;
    return id;
}

}  // namespace

PencilResolution resolve_pencil(const DualGraph& g, const std::vector<std::string>& gens, int cap) {
    if (gens.size() < 2) throw DomainError("a pencil needs at least two generators");
    PencilResolution res{g, {}};
    auto& h = res.graph;
    for (const auto& n : gens) ensure_mult(h, n);

    // The least generator at v, when unique and carrying an arrow at v.
    auto carrier = [&](int v) -> long {
        long best = -1;
        int count = 0;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            long m = h.vertices[v].mult.at(gens[i]);
            if (best < 0 || m < h.vertices[v].mult.at(gens[best])) {
                best = static_cast<long>(i);
                count = 1;
            } else if (m == h.vertices[v].mult.at(gens[best])) {
                ++count;
            }
        }
        if (count != 1 || h.arrow_mult(v, gens[best]) == 0) return -1;
        return best;
    };

    std::vector<int> starts;
    for (std::size_t v = 0; v < h.size(); ++v)
        if (carrier(static_cast<int>(v)) >= 0) starts.push_back(static_cast<int>(v));
    for (int v : starts) {
        int cur = v;
        long gi;
        while ((gi = carrier(cur)) >= 0) {
            if (static_cast<int>(res.blown_up.size()) >= cap)
                throw DomainError("pencil resolution exceeded " + std::to_string(cap) + " blow-ups");
            std::vector<std::size_t> moving;
            for (std::size_t a = 0; a < h.arrows.size(); ++a)
                if (h.arrows[a].vertex == cur && h.arrows[a].name == gens[gi]) moving.push_back(a);
            cur = graph_blow_up(h, cur, moving);
            res.blown_up.push_back(cur);
        }
    }
    return res;
}

Tower laufer_parity_prepare(const Tower& in, const std::string& f) {
    Tower t = in;
    auto odd = [&](int v) { return t.tree.vertices[v].mult.at(f) % 2 != 0; };
    while (true) {
        bool done = true;
        for (const auto& [a, b] : t.tree.edges)
            if (odd(a) && odd(b)) {
                blow_up_point(t, a, b, {});
                done = false;
                break;
            }
        if (!done) continue;
        for (std::size_t i = 0; i < t.tree.arrows.size(); ++i) {
            const auto& ar = t.tree.arrows[i];
            if (ar.name == f && ar.multiplicity % 2 != 0 && odd(ar.vertex)) {
                blow_up_point(t, ar.vertex, -1, {i});
                done = false;
                break;
            }
        }
        if (done) return t;
    }
}

DualGraph laufer_double_cover(const DualGraph& tree, const std::string& f) {
    DualGraph out;
    out.name = tree.name.empty() ? "double-cover" : tree.name + "-double-cover";
    out.base = GraphBase::Surface;
    auto m = [&](int v) { return tree.vertices[v].mult.at(f); };
    for (std::size_t i = 0; i < tree.size(); ++i) {
        const auto& src = tree.vertices[i];
        Vertex v;
        v.id = src.id;
        v.rate = src.rate;
        long mi = m(static_cast<int>(i));
        if (mi % 2 != 0) {
            if (src.self_intersection % 2 != 0)
                throw DomainError("odd self-intersection " + std::to_string(src.self_intersection) +
                                  " on branch component " + src.id);
            v.self_intersection = src.self_intersection / 2;
            v.genus = src.genus;
            v.mult[f] = mi;
        } else {
            long k = 0;
            for (int w : tree.neighbors(static_cast<int>(i)))
                if (m(w) % 2 != 0) ++k;
            for (const auto& a : tree.arrows)
                if (a.vertex == static_cast<int>(i) && a.name == f && a.multiplicity % 2 != 0) ++k;
            if (k == 0) throw DomainError("split cover over " + src.id + " (no branch points)");
            if (k % 2 != 0) throw DomainError("odd branch point count over " + src.id);
            v.self_intersection = 2 * src.self_intersection;
            v.genus = 2 * src.genus - 1 + k / 2;
            v.mult[f] = mi / 2;
        }
        out.add_vertex(v);
    }
    for (const auto& [a, b] : tree.edges) {
        bool oa = m(a) % 2 != 0, ob = m(b) % 2 != 0;
        if (oa && ob)
            throw DomainError("adjacent odd components " + tree.vertices[a].id + " and " +
                              tree.vertices[b].id);
        out.add_edge(a, b);
        if (!oa && !ob) out.add_edge(a, b);
    }
    for (const auto& a : tree.arrows) {
        if (a.name != f) continue;
        if (a.multiplicity % 2 != 0) {
            out.arrows.push_back(a);
        } else {
            Arrow half = a;
            half.multiplicity /= 2;
            out.arrows.push_back(half);
            out.arrows.push_back(half);
        }
    }
    return out;
}

std::vector<int> contractible_vertices(const DualGraph& g) {
    std::vector<int> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        int v = static_cast<int>(i);
        const auto& x = g.vertices[i];
        bool arrow = std::any_of(g.arrows.begin(), g.arrows.end(),
                                 [&](const Arrow& a) { return a.vertex == v; });
        if (x.self_intersection == -1 && x.genus == 0 && g.valence(v) <= 2 && !arrow) out.push_back(v);
    }
    return out;
}

}  // namespace singlip
