#include "singlip/decomp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace singlip {

std::string Piece::label() const {
    switch (kind) {
        case PieceKind::Conical: return "B(1)";
        case PieceKind::B: return "B(" + q.str() + ")";
        case PieceKind::D: return "D(" + q.str() + ")";
        case PieceKind::A: return "A(" + q.str() + "," + q2.str() + ")";
    }
    return "?";
}

std::string to_string(DecompositionMode m) {
    switch (m) {
        case DecompositionMode::ThickThin: return "thickthin";
        case DecompositionMode::CSquare: return "csquare";
        case DecompositionMode::Initial: return "initial";
        case DecompositionMode::Inner: return "inner";
        case DecompositionMode::Outer: return "outer";
    }
    return "inner";
}

DecompositionMode decomposition_mode_from_string(const std::string& s) {
    for (auto m : {DecompositionMode::ThickThin, DecompositionMode::CSquare, DecompositionMode::Initial,
                   DecompositionMode::Inner, DecompositionMode::Outer})
        if (to_string(m) == s) return m;
    throw DomainError("unknown decomposition mode '" + s + "'");
}

std::vector<int> Decomposition::neighbors(int p) const {
    std::vector<int> out;
    for (const auto& [a, b] : adjacency) {
        if (a == p) out.push_back(b);
        if (b == p) out.push_back(a);
    }
    return out;
}

namespace {

std::string piece_key(const Piece& p) {
    std::string s = p.label();
    if (p.special) s += "*";
    if (p.is_protected) s += "!";
    s += "{";
    std::vector<int> v = p.vertices;
    std::sort(v.begin(), v.end());
    for (int x : v) s += std::to_string(x) + ",";
    s += "}[";
    auto e = p.edges;
    for (auto& [a, b] : e)
        if (a > b) std::swap(a, b);
    std::sort(e.begin(), e.end());
    for (const auto& [a, b] : e) s += std::to_string(a) + "-" + std::to_string(b) + ",";
    return s + "]";
}

}  // namespace

std::string Decomposition::canonical() const {
    std::vector<std::string> keys;
    for (const auto& p : pieces) keys.push_back(piece_key(p));
    std::vector<std::string> adj;
    for (const auto& [a, b] : adjacency) {
        auto x = keys[a], y = keys[b];
        if (y < x) std::swap(x, y);
        adj.push_back(x + "~" + y);
    }
    auto sorted_keys = keys;
    std::sort(sorted_keys.begin(), sorted_keys.end());
    std::sort(adj.begin(), adj.end());
    std::string s;
    for (const auto& k : sorted_keys) s += k + ";";
    s += "|";
    for (const auto& a : adj) s += a + ";";
    return s;
}

std::vector<NodeFlags> classify_nodes(const DualGraph& g, bool require_rates) {
    std::vector<NodeFlags> out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& v = g.vertices[i];
        auto& f = out[i];
        f.is_L = v.is_L;
        f.is_P = v.is_P;
        f.is_Delta = v.is_Delta;
        if (require_rates && !v.rate) throw DomainError("vertex " + v.id + " has no rate");
    }
    for (const auto& a : g.arrows) {
        if (a.kind == ArrowKind::GenericLinear) out[a.vertex].is_L = true;
        if (a.kind == ArrowKind::Polar) out[a.vertex].is_P = true;
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        int v = static_cast<int>(i);
        auto& f = out[i];
        auto nb = g.neighbors(v);
        if (f.is_P && nb.size() == 2 && g.vertices[i].rate) {
            bool lower = true;
            for (int w : nb)
                if (!g.vertices[w].rate || !(*g.vertices[w].rate < *g.vertices[i].rate)) lower = false;
            f.is_special_P = lower;
        }
        bool base = nb.size() >= 3 || g.vertices[i].genus > 0 || f.is_L;
        f.is_inner_node = base || f.is_special_P;
        f.is_outer_node = base || f.is_P;
        f.is_initial_node = base || f.is_Delta;
    }
    return out;
}

namespace {

// Maximal connected sets of non-node vertices and the nodes they attach to.
struct Segment {
    std::vector<int> vertices;
    std::vector<int> ends;  // attaching nodes, one per outgoing edge
};

struct Skeleton {
    std::vector<Segment> segments;
    std::vector<std::pair<int, int>> node_edges;
};

Skeleton skeleton(const DualGraph& g, const std::vector<bool>& node) {
    if (std::none_of(node.begin(), node.end(), [](bool b) { return b; }))
        throw DomainError("graph has no nodes");
    Skeleton sk;
    std::vector<int> comp(g.size(), -1);
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (node[s] || comp[s] >= 0) continue;
        Segment seg;
        int id = static_cast<int>(sk.segments.size());
        std::vector<int> stack{static_cast<int>(s)};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            seg.vertices.push_back(v);
            for (int w : g.neighbors(v)) {
                if (node[w]) {
                    seg.ends.push_back(w);
                } else if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(seg.vertices.begin(), seg.vertices.end());
        std::sort(seg.ends.begin(), seg.ends.end());
        sk.segments.push_back(seg);
    }
    for (const auto& [a, b] : g.edges)
        if (node[a] && node[b]) sk.node_edges.emplace_back(a, b);
    return sk;
}

const Rational& rate_of(const DualGraph& g, int v) {
    if (!g.vertices[v].rate) throw DomainError("vertex " + g.vertices[v].id + " has no rate");
    return *g.vertices[v].rate;
}

Piece point_piece(PieceKind kind, const Rational& q) {
    Piece p;
    p.kind = (kind != PieceKind::A && q == Rational(1)) ? PieceKind::Conical : kind;
    p.q = q;
    p.q2 = q;
    return p;
}

Piece a_piece(const Rational& a, const Rational& b) {
    Piece p;
    p.kind = PieceKind::A;
    p.q = min(a, b);
    p.q2 = max(a, b);
    return p;
}

void add_adjacency(Decomposition& d, int a, int b) {
    if (a == b) return;
    auto e = std::make_pair(std::min(a, b), std::max(a, b));
    if (std::find(d.adjacency.begin(), d.adjacency.end(), e) == d.adjacency.end())
        d.adjacency.push_back(e);
}

// Pieces of a decomposition determined by a node set: node + bamboos, then
// one A piece per string or node-node edge.
Decomposition from_nodes(const DualGraph& g, const std::vector<bool>& node,
                         const std::vector<bool>& special, DecompositionMode mode) {
    Decomposition d;
    d.mode = mode;
    auto sk = skeleton(g, node);
    std::map<int, int> piece_of;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!node[i]) continue;
        int v = static_cast<int>(i);
        Piece p = special[i] ? a_piece(rate_of(g, v), rate_of(g, v)) : point_piece(PieceKind::B, rate_of(g, v));
        p.node = v;
        p.vertices.push_back(v);
        if (special[i]) {
            p.special = true;
            p.is_protected = true;
        }
        piece_of[v] = static_cast<int>(d.pieces.size());
        d.pieces.push_back(p);
    }
    for (const auto& seg : sk.segments)
        if (seg.ends.size() == 1)
            for (int v : seg.vertices) d.pieces[piece_of[seg.ends[0]]].vertices.push_back(v);
    for (const auto& seg : sk.segments) {
        if (seg.ends.size() != 2) continue;
        Piece p = a_piece(rate_of(g, seg.ends[0]), rate_of(g, seg.ends[1]));
        p.vertices = seg.vertices;
        int id = static_cast<int>(d.pieces.size());
        d.pieces.push_back(p);
        add_adjacency(d, id, piece_of[seg.ends[0]]);
        add_adjacency(d, id, piece_of[seg.ends[1]]);
    }
    for (const auto& [a, b] : sk.node_edges) {
        Piece p = a_piece(rate_of(g, a), rate_of(g, b));
        p.edges.emplace_back(a, b);
        int id = static_cast<int>(d.pieces.size());
        d.pieces.push_back(p);
        add_adjacency(d, id, piece_of[a]);
        add_adjacency(d, id, piece_of[b]);
    }
    for (auto& p : d.pieces) std::sort(p.vertices.begin(), p.vertices.end());
    std::sort(d.adjacency.begin(), d.adjacency.end());
    return d;
}

}  // namespace

ThickThin thick_thin(const DualGraph& g) {
    auto flags = classify_nodes(g, false);
    std::vector<bool> node(g.size()), is_l(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        node[i] = flags[i].is_inner_node;
        is_l[i] = flags[i].is_L;
    }
    if (std::none_of(is_l.begin(), is_l.end(), [](bool b) { return b; }))
        throw DomainError("graph has no L-node");
    for (const auto& [a, b] : g.edges)
        if (is_l[a] && is_l[b])
            throw DomainError("adjacent L-nodes " + g.vertices[a].id + " and " + g.vertices[b].id);

    auto sk = skeleton(g, node);
    ThickThin tt;
    std::map<int, int> zone_of;
    std::vector<bool> thick(g.size(), false);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (is_l[i]) {
            zone_of[static_cast<int>(i)] = static_cast<int>(tt.thick.size());
            tt.thick.push_back({static_cast<int>(i), {static_cast<int>(i)}, std::nullopt});
            thick[i] = true;
        }
    for (const auto& seg : sk.segments) {
        int owner = -1;
        if (seg.ends.size() == 1 && is_l[seg.ends[0]]) owner = seg.ends[0];
        if (seg.ends.size() == 2 && is_l[seg.ends[0]] != is_l[seg.ends[1]])
            owner = is_l[seg.ends[0]] ? seg.ends[0] : seg.ends[1];
        if (owner < 0) continue;
        for (int v : seg.vertices) {
            tt.thick[zone_of[owner]].vertices.push_back(v);
            thick[v] = true;
        }
    }
    for (auto& z : tt.thick) std::sort(z.vertices.begin(), z.vertices.end());

    std::vector<bool> seen(g.size(), false);
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (thick[s] || seen[s]) continue;
        Zone z;
        std::vector<int> stack{static_cast<int>(s)};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            z.vertices.push_back(v);
            for (int w : g.neighbors(v))
                if (!thick[w] && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(z.vertices.begin(), z.vertices.end());
        bool rates = std::all_of(z.vertices.begin(), z.vertices.end(),
                                 [&](int v) { return g.vertices[v].rate.has_value(); });
        if (rates) z.rate = thin_zone_rate(g, z);
        tt.thin.push_back(z);
    }
    return tt;
}

bool is_metrically_conical(const DualGraph& g) { return thick_thin(g).metrically_conical(); }

Rational thin_zone_rate(const DualGraph& g, const Zone& zone) {
    if (zone.vertices.empty()) throw DomainError("empty zone");
    Rational q = rate_of(g, zone.vertices[0]);
    for (int v : zone.vertices) q = min(q, rate_of(g, v));
    if (!(Rational(1) < q))
        throw DomainError("thin zone contains rate " + q.str() + " <= 1");
    return q;
}

Decomposition csquare_decomposition(const DualGraph& t) {
    Decomposition d;
    d.mode = DecompositionMode::CSquare;
    std::vector<int> piece_of(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        int v = static_cast<int>(i);
        const Rational& q = rate_of(t, v);
        bool arrow = std::any_of(t.arrows.begin(), t.arrows.end(), [&](const Arrow& a) {
            return a.vertex == v && a.kind != ArrowKind::GenericLinear;
        });
        int val = t.valence(v);
        Piece p;
        if (i == 0) {
            p = point_piece(PieceKind::B, Rational(1));
        } else if (arrow || val >= 3) {
            p = point_piece(PieceKind::B, q);
        } else if (val == 1) {
            p = point_piece(PieceKind::D, q);
        } else {
            p = a_piece(q, q);
        }
        p.node = v;
        p.vertices.push_back(v);
        piece_of[i] = static_cast<int>(d.pieces.size());
        d.pieces.push_back(p);
    }
    for (const auto& [a, b] : t.edges) {
        Piece p = a_piece(rate_of(t, a), rate_of(t, b));
        p.edges.emplace_back(a, b);
        int id = static_cast<int>(d.pieces.size());
        d.pieces.push_back(p);
        add_adjacency(d, id, piece_of[a]);
        add_adjacency(d, id, piece_of[b]);
    }
    std::sort(d.adjacency.begin(), d.adjacency.end());
    return d;
}

namespace {

struct Merge {
    Rational priority;
    int lowest;
    int rule;
    int a, b;  // a absorbs b
    Piece result;
};

bool shares_rate(const Piece& p, const Rational& q) { return p.q == q || p.q2 == q; }

Rational other_rate(const Piece& p, const Rational& shared) { return p.q == shared ? p.q2 : p.q; }

Rational top_rate(const Piece& p) { return p.kind == PieceKind::A ? p.q2 : p.q; }

}  // namespace

Decomposition amalgamate(const Decomposition& in, const std::set<int>& protected_pieces) {
    std::vector<Piece> pieces = in.pieces;
    for (int p : protected_pieces) pieces.at(p).is_protected = true;
    std::vector<bool> alive(pieces.size(), true);
    std::vector<std::set<int>> nb(pieces.size());
    for (const auto& [a, b] : in.adjacency) {
        nb[a].insert(b);
        nb[b].insert(a);
    }

    auto candidates = [&]() {
        std::vector<Merge> out;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (!alive[i]) continue;
            const Piece& p = pieces[i];
            for (int j : nb[i]) {
                const Piece& r = pieces[j];
                int lo = std::min(static_cast<int>(i), j);
                Rational pr = max(top_rate(p), top_rate(r));
                // A(q,q') u A(q',q'') = A(q,q'')
                if (p.kind == PieceKind::A && r.kind == PieceKind::A && !p.is_protected &&
                    !r.is_protected && static_cast<int>(i) < j) {
                    for (const Rational& s : {p.q, p.q2})
                        if (shares_rate(r, s)) {
                            out.push_back({pr, lo, 0, static_cast<int>(i), j,
                                           a_piece(other_rate(p, s), other_rate(r, s))});
                            break;
                        }
                }
                // A(q,q') u D(q') = D(q) for a D piece hanging off the collar
                if (p.kind == PieceKind::A && r.kind == PieceKind::D && !p.is_protected &&
                    !r.is_protected && nb[j].size() == 1 && shares_rate(p, r.q)) {
                    out.push_back({pr, lo, 1, static_cast<int>(i), j,
                                   point_piece(PieceKind::D, other_rate(p, r.q))});
                }
                // D(q) u B(q) = B(q); the B piece may be protected and keeps its kind
                if (p.kind == PieceKind::B && r.kind == PieceKind::D && !r.is_protected &&
                    nb[j].size() == 1 && p.q == r.q) {
                    Piece res = p;
                    out.push_back({pr, lo, 2, static_cast<int>(i), j, res});
                }
                // conical pieces glued together form a conical piece
                if (p.kind == PieceKind::Conical && r.kind == PieceKind::Conical && !p.is_protected &&
                    !r.is_protected && static_cast<int>(i) < j) {
                    out.push_back({pr, lo, 3, static_cast<int>(i), j, p});
                }
            }
        }
        return out;
    };

    while (true) {
        auto cs = candidates();
        if (cs.empty()) break;
        auto best = std::min_element(cs.begin(), cs.end(), [](const Merge& x, const Merge& y) {
            if (x.priority != y.priority) return y.priority < x.priority;
            if (x.lowest != y.lowest) return x.lowest < y.lowest;
            if (x.rule != y.rule) return x.rule < y.rule;
            return std::max(x.a, x.b) < std::max(y.a, y.b);
        });
        int keep = std::min(best->a, best->b), drop = std::max(best->a, best->b);
        Piece merged = best->result;
        merged.vertices = pieces[best->a].vertices;
        merged.vertices.insert(merged.vertices.end(), pieces[best->b].vertices.begin(),
                               pieces[best->b].vertices.end());
        merged.edges = pieces[best->a].edges;
        merged.edges.insert(merged.edges.end(), pieces[best->b].edges.begin(), pieces[best->b].edges.end());
        std::sort(merged.vertices.begin(), merged.vertices.end());
        merged.is_protected = pieces[best->a].is_protected || pieces[best->b].is_protected;
        merged.special = pieces[best->a].special || pieces[best->b].special;
        merged.node = pieces[best->a].node >= 0 ? pieces[best->a].node : pieces[best->b].node;
        pieces[keep] = merged;
        alive[drop] = false;
        for (int x : nb[drop]) {
            nb[x].erase(drop);
            if (x != keep) {
                nb[x].insert(keep);
                nb[keep].insert(x);
            }
        }
        nb[keep].erase(drop);
        nb[keep].erase(keep);
        nb[drop].clear();
    }

    // Renumber by smallest support element for an order-independent result.
    std::vector<int> order;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (alive[i]) order.push_back(static_cast<int>(i));
    auto first_key = [&](int i) {
        const Piece& p = pieces[i];
        long v = p.vertices.empty() ? 1L << 40 : p.vertices.front();
        long e = 1L << 40;
        for (auto [a, b] : p.edges) e = std::min(e, static_cast<long>(std::min(a, b)) * 4096 + std::max(a, b));
        return std::make_pair(v, e);
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return first_key(a) < first_key(b); });
    std::map<int, int> renum;
    Decomposition out;
    out.mode = in.mode;
    for (int i : order) {
        renum[i] = static_cast<int>(out.pieces.size());
        out.pieces.push_back(pieces[i]);
    }
    for (int i : order)
        for (int j : nb[i])
            if (i < j) add_adjacency(out, renum[i], renum[j]);
    std::sort(out.adjacency.begin(), out.adjacency.end());
    return out;
}

Decomposition build_decomposition(const DualGraph& g, DecompositionMode mode) {
    auto flags = classify_nodes(g, true);
    std::vector<bool> node(g.size()), special(g.size(), false);
    for (std::size_t i = 0; i < g.size(); ++i) {
        switch (mode) {
            case DecompositionMode::Inner:
                node[i] = flags[i].is_inner_node;
                special[i] = flags[i].is_special_P;
                break;
            case DecompositionMode::Outer: node[i] = flags[i].is_outer_node; break;
            case DecompositionMode::Initial: node[i] = flags[i].is_initial_node; break;
            default: throw DomainError("build_decomposition supports initial, inner and outer modes");
        }
    }
    bool any_l = std::any_of(flags.begin(), flags.end(), [](const NodeFlags& f) { return f.is_L; });
    if (!any_l) throw DomainError("graph has no L-node");
    if (mode == DecompositionMode::Outer &&
        std::none_of(flags.begin(), flags.end(), [](const NodeFlags& f) { return f.is_P; }))
        throw DomainError("outer decomposition needs P-node flags or polar arrows");
    if (mode == DecompositionMode::Initial &&
        std::none_of(flags.begin(), flags.end(), [](const NodeFlags& f) { return f.is_Delta; }))
        throw DomainError("initial decomposition needs Delta-node flags");
    return from_nodes(g, node, special, mode);
}

// ---- canonical forms ----

namespace {

struct ColoredGraph {
    std::size_t n;
    std::vector<std::map<int, int>> adj;  // neighbour -> edge count
};

std::vector<int> refine(const ColoredGraph& g, std::vector<int> color) {
    std::size_t classes = std::set<int>(color.begin(), color.end()).size();
    while (true) {
        std::vector<std::string> sig(g.n);
        for (std::size_t v = 0; v < g.n; ++v) {
            std::vector<std::pair<int, int>> nc;
            for (const auto& [w, c] : g.adj[v]) nc.emplace_back(color[w], c);
            std::sort(nc.begin(), nc.end());
            std::string s = std::to_string(color[v]) + ":";
            for (const auto& [c, m] : nc) s += std::to_string(c) + "x" + std::to_string(m) + ",";
            sig[v] = s;
        }
        std::vector<std::string> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (std::size_t v = 0; v < g.n; ++v)
            color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        if (uniq.size() == classes) return color;
        classes = uniq.size();
    }
}

std::string encode(const ColoredGraph& g, const std::vector<int>& color,
                   const std::vector<std::string>& labels) {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
    std::string s;
    for (int v : order) s += labels[v] + ";";
    s += "|";
    std::vector<std::tuple<int, int, int>> es;
    for (std::size_t v = 0; v < g.n; ++v)
        for (const auto& [w, c] : g.adj[v])
            if (color[v] <= color[w]) es.emplace_back(color[v], color[w], c);
    std::sort(es.begin(), es.end());
    for (const auto& [a, b, c] : es)
        s += std::to_string(a) + "-" + std::to_string(b) + "x" + std::to_string(c) + ",";
    return s;
}

std::string search(const ColoredGraph& g, const std::vector<int>& color0,
                   const std::vector<std::string>& labels) {
    auto color = refine(g, color0);
    std::map<int, std::vector<int>> cls;
    for (std::size_t v = 0; v < g.n; ++v) cls[color[v]].push_back(static_cast<int>(v));
    const std::vector<int>* target = nullptr;
    for (const auto& [c, members] : cls)
        if (members.size() > 1) {
            target = &members;
            break;
        }
    if (!target) return encode(g, color, labels);
    std::string best;
    bool have = false;
    for (int v : *target) {
        std::vector<int> c2(g.n);
        for (std::size_t x = 0; x < g.n; ++x)
            c2[x] = 2 * color[x] + ((color[x] == color[v] && static_cast<int>(x) != v) ? 1 : 0);
        std::string s = search(g, c2, labels);
        if (!have || s < best) {
            best = s;
            have = true;
        }
    }
    return best;
}

}  // namespace

std::string canonical_graph_form(const std::vector<std::string>& labels,
                                 const std::vector<std::pair<int, int>>& edges) {
    if (labels.size() > 64) throw DomainError("canonical form limited to 64 vertices");
    ColoredGraph g{labels.size(), std::vector<std::map<int, int>>(labels.size())};
    for (const auto& [a, b] : edges) {
        g.adj[a][b] += 1;
        if (a != b) g.adj[b][a] += 1;
    }
    std::vector<std::string> uniq = labels;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> color(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v)
        color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), labels[v]) - uniq.begin());
    return search(g, color, labels);
}

std::string generic_linear_name(const DualGraph& g) {
    for (const auto& a : g.arrows)
        if (a.kind == ArrowKind::GenericLinear) return a.name;
    return "l";
}

namespace {

std::vector<long> generic_linear_mults(const DualGraph& g) {
    std::string n = generic_linear_name(g);
    std::vector<long> out;
    for (const auto& v : g.vertices) {
        auto it = v.mult.find(n);
        if (it == v.mult.end())
            throw DomainError("vertex " + v.id + " lacks generic linear multiplicity '" + n + "'");
        out.push_back(it->second);
    }
    return out;
}

}  // namespace

Signature inner_signature(const DualGraph& g) {
    auto d = build_decomposition(g, DecompositionMode::Inner);
    auto m = generic_linear_mults(g);
    long scale = 0;
    for (const auto& p : d.pieces)
        if (p.node >= 0) scale = std::gcd(scale, m[p.node]);
    if (scale == 0) scale = 1;
    std::vector<std::string> labels;
    for (const auto& p : d.pieces) {
        std::string s = p.label();
        if (p.special) s = "S" + s;
        if (p.node >= 0) s += "m" + std::to_string(m[p.node] / scale);
        labels.push_back(s);
    }
    return {"inner", canonical_graph_form(labels, d.adjacency)};
}

Signature outer_signature(const DualGraph& g) {
    auto flags = classify_nodes(g, true);
    auto m = generic_linear_mults(g);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& v = g.vertices[i];
        if (flags[i].is_outer_node)
            labels.push_back("N(" + v.rate->str() + ";" + std::to_string(v.self_intersection) + ";" +
                             std::to_string(m[i]) + ";g" + std::to_string(v.genus) + ")");
        else
            labels.push_back(".");
    }
    return {"outer", canonical_graph_form(labels, g.edges)};
}

bool signatures_equal(const Signature& a, const Signature& b) { return a == b; }

}  // namespace singlip
