#include "singlip/tower.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace singlip {

std::string ChartStep::str() const {
    switch (kind) {
        case Kind::Zero: return "0";
        case Kind::Finite: return c.str();
        case Kind::Infinity: return "inf";
    }
    return "?";
}

bool operator<(const ChartStep& a, const ChartStep& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.kind == ChartStep::Kind::Finite && a.c < b.c;
}

std::size_t event_cap_from_env() {
    const char* s = std::getenv("SINGLIP_EVENT_CAP");
    if (!s) return kDefaultEventCap;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end || v <= 0) return kDefaultEventCap;
    return static_cast<std::size_t>(v);
}

namespace {

struct PrecisionExhausted {};

// Power series in t known modulo t^{c.size()}.
struct Series {
    std::vector<Rational> c;

    std::size_t prec() const { return c.size(); }
    long order() const {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!c[i].is_zero()) return static_cast<long>(i);
        return -1;
    }
};

// a / b where ord a >= ord b = k, both known; result precision shrinks by k.
Series divide(const Series& a, const Series& b) {
    long k = b.order();
    if (k < 0) throw PrecisionExhausted{};
    std::size_t p = std::min(a.prec(), b.prec());
    if (p <= static_cast<std::size_t>(k)) throw PrecisionExhausted{};
    p -= k;
    Series q;
    q.c.assign(p, Rational(0));
    const Rational& lead = b.c[k];
    for (std::size_t i = 0; i < p; ++i) {
        Rational s = a.c[i + k];
        for (std::size_t j = 1; j <= i; ++j)
            if (!b.c[j + k].is_zero() && !q.c[i - j].is_zero()) s -= b.c[j + k] * q.c[i - j];
        q.c[i] = s / lead;
    }
    return q;
}

struct BranchState {
    std::size_t id;
    Series u, v;
};

// Order of v if known, or `more` when v vanishes beyond u's order.
struct PointData {
    long ou;
    long ov;  // -1 means ov > ou (v vanishes to the known precision)
};

PointData orders(const BranchState& b) {
    long ou = b.u.order();
    if (ou < 0) throw PrecisionExhausted{};
    long ov = b.v.order();
    if (ov < 0) {
        if (b.v.prec() > static_cast<std::size_t>(ou)) return {ou, -1};
        throw PrecisionExhausted{};
    }
    return {ou, ov};
}

ChartStep key_of(const BranchState& b) {
    auto [ou, ov] = orders(b);
    if (ov < 0 || ov > ou) return {ChartStep::Kind::Zero, Rational(0)};
    if (ov < ou) return {ChartStep::Kind::Infinity, Rational(0)};
    return {ChartStep::Kind::Finite, b.v.c[ov] / b.u.c[ou]};
}

BranchState transform(const BranchState& b, const ChartStep& k) {
    BranchState out{b.id, {}, {}};
    switch (k.kind) {
        case ChartStep::Kind::Zero:
            out.u = b.u;
            out.v = divide(b.v, b.u);
            break;
        case ChartStep::Kind::Finite:
            out.u = b.u;
            out.v = divide(b.v, b.u);
            out.v.c.at(0) -= k.c;
            break;
        case ChartStep::Kind::Infinity:
            out.u = b.v;
            out.v = divide(b.u, b.v);
            break;
    }
    return out;
}

struct Point {
    bool origin = false;
    int eu = -1;  // exceptional curve {u = 0}
    int ev = -1;  // exceptional curve {v = 0}, if any
};

Vertex new_exceptional(const Tower& t) {
    Vertex v;
    v.id = "E" + std::to_string(t.tree.size() + 1);
    v.self_intersection = -1;
    return v;
}

// Creates the exceptional curve of a blow-up centered on e1 (and e2), updating
// self-intersections, edges, rate vectors and the multiplicities of every
// tracked function by the curves through the center; arrow contributions are
// added by the caller.
int add_exceptional(Tower& t, int e1, int e2) {
    Vertex v = new_exceptional(t);
    auto& g = t.tree;
    if (e1 < 0) {
        v.rate_vector = RateVector{1, 1};
    } else if (e2 < 0) {
        auto r = *g.vertices[e1].rate_vector;
        v.rate_vector = RateVector{r.p + 1, r.q};
    } else {
        auto a = *g.vertices[e1].rate_vector, b = *g.vertices[e2].rate_vector;
        v.rate_vector = RateVector{a.p + b.p, a.q + b.q};
    }
    v.rate = v.rate_vector->value();
    std::set<std::string> names;
    for (int e : {e1, e2})
        if (e >= 0)
            for (const auto& [n, m] : g.vertices[e].mult) names.insert(n);
    for (const auto& n : names) {
        long m = 0;
        for (int e : {e1, e2})
            if (e >= 0) m += g.vertices[e].mult.at(n);
        v.mult[n] = m;
    }
    int id = g.add_vertex(v);
    for (int e : {e1, e2})
        if (e >= 0) {
            g.vertices[e].self_intersection -= 1;
            g.add_edge(e, id);
        }
    if (e1 >= 0 && e2 >= 0 && !g.remove_edge(e1, e2))
        throw DomainError("satellite center on curves that do not meet");
    return id;
}

class Resolver {
public:
    Resolver(const Curve& curve, std::size_t cap) : curve_(curve), cap_(cap) {}

    Tower run(std::size_t precision) {
        t_ = Tower{};
        t_.tree.base = GraphBase::Plane;
        t_.tree.name = "tower";
        std::vector<BranchState> bs;
        for (std::size_t i = 0; i < curve_.size(); ++i) {
            const auto& b = curve_[i];
            BranchState s{i, {}, {}};
            s.u.c.assign(precision, Rational(0));
            s.v.c.assign(precision, Rational(0));
            if (static_cast<std::size_t>(b.denominator) < precision) s.u.c[b.denominator] = Rational(1);
            for (const auto& term : b.terms) {
                long e = (term.exp * Rational(b.denominator)).to_long();
                if (static_cast<std::size_t>(e) < precision) s.v.c[e] = term.coeff;
            }
            bs.push_back(std::move(s));
        }
        Point origin;
        origin.origin = true;
        visit(origin, bs, {});
        return t_;
    }

private:
    void visit(const Point& p, const std::vector<BranchState>& bs, const std::vector<ChartStep>& chart) {
        if (bs.empty()) return;
        if (!p.origin && bs.size() == 1 && p.ev < 0) {
            long ou = bs[0].u.order();
            if (ou < 0) throw PrecisionExhausted{};
            if (ou == 1) {
                t_.tree.arrows.push_back({p.eu, "f", 1, ArrowKind::Branch});
                return;
            }
        }
        if (t_.events.size() >= cap_)
            throw DomainError("blow-up event cap " + std::to_string(cap_) + " exceeded");

        BlowupEvent ev;
        ev.has_chart = true;
        ev.chart = chart;
        long local_total = 0;
        for (const auto& b : bs) {
            auto [ou, ov] = orders(b);
            long lm = ov < 0 ? ou : std::min(ou, ov);
            ev.branches_through.emplace_back(b.id, lm);
            local_total += lm;
        }
        int id;
        if (p.origin) {
            id = add_exceptional(t_, -1, -1);
            auto& v = t_.tree.vertices[id];
            v.mult["f"] = local_total;
            v.mult["l"] = 1;
            t_.tree.arrows.push_back({id, "l", 1, ArrowKind::GenericLinear});
            ev.center = BlowupEvent::Center::Origin;
        } else {
            id = add_exceptional(t_, p.eu, p.ev);
            t_.tree.vertices[id].mult["f"] += local_total;
            ev.center = p.ev < 0 ? BlowupEvent::Center::Free : BlowupEvent::Center::Satellite;
            ev.e1 = p.eu;
            ev.e2 = p.ev;
            if (!chart.empty()) ev.position = chart.back().str();
        }
        ev.index = id;
        t_.events.push_back(ev);

        std::map<ChartStep, std::vector<BranchState>> groups;
        for (const auto& b : bs) {
            ChartStep k = key_of(b);
            groups[k].push_back(transform(b, k));
        }
        for (const auto& [k, members] : groups) {
            Point q;
            q.eu = id;
            if (k.kind == ChartStep::Kind::Zero) q.ev = p.ev;
            if (k.kind == ChartStep::Kind::Infinity) q.ev = p.eu;
            auto next = chart;
            next.push_back(k);
            visit(q, members, next);
        }
    }

    const Curve& curve_;
    std::size_t cap_;
    Tower t_;
};

}  // namespace

Tower resolve_curve(const Curve& curve, std::size_t event_cap) {
    strands_of(curve);  // validates branches and rejects duplicates
    long need = 0;
    for (const auto& b : curve) {
        long top = b.terms.empty() ? 1 : (b.terms.back().exp * Rational(b.denominator)).floor().get_si();
        need = std::max(need, top + b.denominator);
    }
    std::size_t precision = static_cast<std::size_t>(4 * need + 16);
    Resolver r(curve, event_cap);
    for (int attempt = 0; attempt < 12; ++attempt, precision *= 2) {
        try {
            return r.run(precision);
        } catch (const PrecisionExhausted&) {
        }
    }
    throw DomainError("series precision cap reached while resolving");
}

int blow_up_point(Tower& t, int e1, int e2, const std::vector<std::size_t>& arrows) {
    auto& g = t.tree;
    if (e1 < 0 || e1 >= static_cast<int>(g.size())) throw DomainError("blow-up center off the tree");
    int id = add_exceptional(t, e1, e2);
    for (std::size_t a : arrows) {
        auto& ar = g.arrows.at(a);
        if (ar.vertex != e1 && ar.vertex != e2) throw DomainError("arrow does not pass through center");
        g.vertices[id].mult[ar.name] += ar.multiplicity;
        ar.vertex = id;
    }
    BlowupEvent ev;
    ev.index = id;
    ev.center = e2 < 0 ? BlowupEvent::Center::Free : BlowupEvent::Center::Satellite;
    ev.e1 = e1;
    ev.e2 = e2;
    if (e2 < 0 && !arrows.empty()) ev.position = "arrow:" + g.arrows[arrows[0]].name;
    t.events.push_back(ev);
    return id;
}

void blow_up_double_points(Tower& t, const std::string& name) {
    auto edges = t.tree.edges;
    std::vector<std::size_t> arrows;
    for (std::size_t i = 0; i < t.tree.arrows.size(); ++i)
        if (t.tree.arrows[i].name == name) arrows.push_back(i);
    for (const auto& [a, b] : edges) blow_up_point(t, a, b, {});
    for (std::size_t i : arrows) blow_up_point(t, t.tree.arrows[i].vertex, -1, {i});
}

void blow_up_along_arrow(Tower& t, std::size_t arrow, int times) {
    if (arrow >= t.tree.arrows.size()) throw DomainError("no such arrow");
    for (int i = 0; i < times; ++i) blow_up_point(t, t.tree.arrows[arrow].vertex, -1, {arrow});
}

TowerReport verify_tower(const DualGraph& g) {
    TowerReport rep;
    if (g.size() == 0) {
        rep.violations.push_back("empty tree");
        return rep;
    }
    if (!g.is_tree()) rep.violations.push_back("graph is not a tree");
    for (const auto& n : g.function_names())
        for (std::size_t j = 0; j < g.size(); ++j) {
            long r = g.laufer_residual(static_cast<int>(j), n);
            if (r != 0)
                rep.violations.push_back("laufer residual " + std::to_string(r) + " for '" + n +
                                         "' at " + g.vertices[j].id);
        }
    Rational det = determinant(g.intersection_matrix());
    if (det != Rational(1) && det != Rational(-1))
        rep.violations.push_back("determinant " + det.str() + " is not +-1");
    bool rates = std::all_of(g.vertices.begin(), g.vertices.end(),
                             [](const Vertex& v) { return v.rate.has_value(); });
    if (rates) {
        if (*g.vertices[0].rate != Rational(1))
            rep.violations.push_back("root rate " + g.vertices[0].rate->str() + " is not 1");
        // BFS from the root; rates must strictly increase away from it.
        std::vector<int> parent(g.size(), -2);
        std::vector<int> queue{0};
        parent[0] = -1;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int v = queue[h];
            for (int w : g.neighbors(v)) {
                if (parent[w] != -2) continue;
                parent[w] = v;
                queue.push_back(w);
                if (!(*g.vertices[v].rate < *g.vertices[w].rate))
                    rep.violations.push_back("rate not increasing from " + g.vertices[v].id + " (" +
                                             g.vertices[v].rate->str() + ") to " + g.vertices[w].id +
                                             " (" + g.vertices[w].rate->str() + ")");
            }
        }
    }
    return rep;
}

}  // namespace singlip
