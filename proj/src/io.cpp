#include "singlip/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace singlip {

namespace {

struct Ctx {
    const ReadOptions& opt;

    void fields(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) const {
        if (!obj.is_object()) throw InputError(path + ": expected an object");
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            bool ok = std::any_of(allowed.begin(), allowed.end(),
                                  [&](const char* a) { return it.key() == a; });
            if (ok) continue;
            std::string msg = path + ": unknown field '" + it.key() + "'";
            if (opt.strict) throw InputError(msg);
            if (opt.warnings) opt.warnings->push_back(msg);
        }
    }
};

const json& need(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw InputError(path + ": missing field '" + key + "'");
    return *it;
}

long get_long(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw InputError(path + ": expected an integer");
    return j.get<long>();
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) throw InputError(path + ": expected a string");
    return j.get<std::string>();
}

mpz_class integer_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) == 0) return z;
    }
    throw InputError(path + ": expected an integer");
}

json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

void check_format(const json& j, const char* expected, const std::string& path) {
    auto it = j.find("format");
    if (it == j.end()) return;
    if (!it->is_string() || it->get<std::string>() != expected)
        throw InputError(path + ".format: expected \"" + std::string(expected) + "\"");
}

std::string flags_string(const Vertex& v) {
    std::string s;
    if (v.is_L) s += "L";
    if (v.is_Delta) s += "D";
    if (v.is_P) s += "P";
    return s;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                         ": invalid JSON (" + e.what() + ")");
    }
}

json rational_to_json(const Rational& q) {
    return json{{"num", integer_to_json(q.num())}, {"den", integer_to_json(q.den())}};
}

Rational rational_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const DomainError&) {
            throw InputError(path + ": malformed rational '" + j.get<std::string>() + "'");
        }
    }
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            if (it.key() != "num" && it.key() != "den")
                throw InputError(path + ": unknown field '" + it.key() + "' in rational");
        mpz_class n = integer_from_json(need(j, "num", path), path + ".num");
        mpz_class d = j.contains("den") ? integer_from_json(j["den"], path + ".den") : mpz_class(1);
        if (d == 0) throw InputError(path + ": zero denominator");
        return Rational(n, d);
    }
    throw InputError(path + ": expected a rational ({num,den}, \"p/q\" or integer)");
}

std::string format_of(const json& j) {
    if (j.is_object() && j.contains("format") && j["format"].is_string()) return j["format"].get<std::string>();
    return "";
}

// ---- curves ----

json curve_to_json(const Curve& c, const std::string& name) {
    json out;
    out["format"] = fmt::kCurve;
    if (!name.empty()) out["name"] = name;
    json branches = json::array();
    for (const auto& b : c) {
        json terms = json::array();
        for (const auto& t : b.terms)
            terms.push_back({{"exp", rational_to_json(t.exp)}, {"coeff", rational_to_json(t.coeff)}});
        branches.push_back({{"denominator", b.denominator}, {"terms", terms}});
    }
    out["branches"] = branches;
    return out;
}

Curve curve_from_json(const json& j, const ReadOptions& opt) {
    Ctx ctx{opt};
    ctx.fields(j, "$", {"format", "name", "branches"});
    check_format(j, fmt::kCurve, "$");
    const json& bs = need(j, "branches", "$");
    if (!bs.is_array() || bs.empty()) throw InputError("$.branches: expected a non-empty array");
    Curve c;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        std::string p = "$.branches[" + std::to_string(i) + "]";
        ctx.fields(bs[i], p, {"denominator", "terms"});
        PuiseuxBranch b;
        b.denominator = get_long(need(bs[i], "denominator", p), p + ".denominator");
        const json& ts = need(bs[i], "terms", p);
        if (!ts.is_array()) throw InputError(p + ".terms: expected an array");
        for (std::size_t k = 0; k < ts.size(); ++k) {
            std::string tp = p + ".terms[" + std::to_string(k) + "]";
            ctx.fields(ts[k], tp, {"exp", "coeff"});
            b.terms.push_back({rational_from_json(need(ts[k], "exp", tp), tp + ".exp"),
                               rational_from_json(need(ts[k], "coeff", tp), tp + ".coeff")});
        }
        try {
            b.validate();
        } catch (const DomainError& e) {
            throw InputError(p + ": " + e.what());
        }
        c.push_back(std::move(b));
    }
    return c;
}

// ---- graphs ----

namespace {

json graph_body(const DualGraph& g) {
    json out;
    if (!g.name.empty()) out["name"] = g.name;
    out["base"] = g.base == GraphBase::Plane ? "plane" : "surface";
    json vs = json::array();
    for (const auto& v : g.vertices) {
        json jv;
        jv["id"] = v.id;
        jv["self_intersection"] = v.self_intersection;
        jv["genus"] = v.genus;
        if (v.rate) jv["rate"] = rational_to_json(*v.rate);
        if (v.rate_vector) jv["rate_vector"] = {v.rate_vector->p, v.rate_vector->q};
        json m = json::object();
        for (const auto& [n, x] : v.mult) m[n] = x;
        jv["multiplicities"] = m;
        json flags = json::array();
        if (v.is_L) flags.push_back("L");
        if (v.is_Delta) flags.push_back("Delta");
        if (v.is_P) flags.push_back("P");
        jv["flags"] = flags;
        vs.push_back(jv);
    }
    out["vertices"] = vs;
    json es = json::array();
    for (const auto& [a, b] : g.edges) es.push_back({g.vertices[a].id, g.vertices[b].id});
    out["edges"] = es;
    json as = json::array();
    for (const auto& a : g.arrows)
        as.push_back({{"vertex", g.vertices[a.vertex].id},
                      {"name", a.name},
                      {"multiplicity", a.multiplicity},
                      {"kind", to_string(a.kind)}});
    out["arrows"] = as;
    return out;
}

}  // namespace

json graph_to_json(const DualGraph& g) {
    json out;
    out["format"] = fmt::kGraph;
    json body = graph_body(g);
    for (auto& [k, v] : body.items()) out[k] = v;
    return out;
}

DualGraph graph_from_json(const json& j, const ReadOptions& opt) {
    Ctx ctx{opt};
    ctx.fields(j, "$", {"format", "name", "base", "vertices", "edges", "arrows", "notes"});
    check_format(j, fmt::kGraph, "$");
    DualGraph g;
    if (j.contains("name")) g.name = get_string(j["name"], "$.name");
    if (j.contains("base")) {
        auto b = get_string(j["base"], "$.base");
        if (b == "plane") g.base = GraphBase::Plane;
        else if (b == "surface") g.base = GraphBase::Surface;
        else throw InputError("$.base: expected \"plane\" or \"surface\"");
    }
    const json& vs = need(j, "vertices", "$");
    if (!vs.is_array() || vs.empty()) throw InputError("$.vertices: expected a non-empty array");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::string p = "$.vertices[" + std::to_string(i) + "]";
        ctx.fields(vs[i], p, {"id", "self_intersection", "genus", "rate", "rate_vector", "multiplicities", "flags"});
        Vertex v;
        v.id = get_string(need(vs[i], "id", p), p + ".id");
        if (g.index_of(v.id) >= 0) throw InputError(p + ".id: duplicate vertex id '" + v.id + "'");
        v.self_intersection = get_long(need(vs[i], "self_intersection", p), p + ".self_intersection");
        if (v.self_intersection >= 0) throw InputError(p + ".self_intersection: must be negative");
        if (vs[i].contains("genus")) {
            v.genus = get_long(vs[i]["genus"], p + ".genus");
            if (v.genus < 0) throw InputError(p + ".genus: must be non-negative");
        }
        if (vs[i].contains("rate")) v.rate = rational_from_json(vs[i]["rate"], p + ".rate");
        if (vs[i].contains("rate_vector")) {
            const json& rv = vs[i]["rate_vector"];
            if (!rv.is_array() || rv.size() != 2) throw InputError(p + ".rate_vector: expected [p, q]");
            v.rate_vector = RateVector{get_long(rv[0], p + ".rate_vector[0]"), get_long(rv[1], p + ".rate_vector[1]")};
        }
        if (vs[i].contains("multiplicities")) {
            const json& m = vs[i]["multiplicities"];
            if (!m.is_object()) throw InputError(p + ".multiplicities: expected an object");
            for (auto it = m.begin(); it != m.end(); ++it) {
                long x = get_long(it.value(), p + ".multiplicities." + it.key());
                if (x < 0) throw InputError(p + ".multiplicities." + it.key() + ": must be non-negative");
                v.mult[it.key()] = x;
            }
        }
        if (vs[i].contains("flags")) {
            const json& fl = vs[i]["flags"];
            if (!fl.is_array()) throw InputError(p + ".flags: expected an array");
            for (const auto& f : fl) {
                auto s = get_string(f, p + ".flags");
                if (s == "L") v.is_L = true;
                else if (s == "Delta") v.is_Delta = true;
                else if (s == "P") v.is_P = true;
                else throw InputError(p + ".flags: unknown flag '" + s + "'");
            }
        }
        g.add_vertex(v);
    }
    auto vid = [&](const json& x, const std::string& p) {
        int k = g.index_of(get_string(x, p));
        if (k < 0) throw InputError(p + ": unknown vertex '" + x.get<std::string>() + "'");
        return k;
    };
    if (j.contains("edges")) {
        const json& es = j["edges"];
        if (!es.is_array()) throw InputError("$.edges: expected an array");
        for (std::size_t i = 0; i < es.size(); ++i) {
            std::string p = "$.edges[" + std::to_string(i) + "]";
            if (!es[i].is_array() || es[i].size() != 2) throw InputError(p + ": expected [id, id]");
            int a = vid(es[i][0], p + "[0]"), b = vid(es[i][1], p + "[1]");
            if (a == b) throw InputError(p + ": loops are not allowed");
            g.add_edge(a, b);
        }
    }
    if (j.contains("arrows")) {
        const json& as = j["arrows"];
        if (!as.is_array()) throw InputError("$.arrows: expected an array");
        for (std::size_t i = 0; i < as.size(); ++i) {
            std::string p = "$.arrows[" + std::to_string(i) + "]";
            ctx.fields(as[i], p, {"vertex", "name", "multiplicity", "kind"});
            Arrow a;
            a.vertex = vid(need(as[i], "vertex", p), p + ".vertex");
            a.name = get_string(need(as[i], "name", p), p + ".name");
            if (as[i].contains("multiplicity")) a.multiplicity = get_long(as[i]["multiplicity"], p + ".multiplicity");
            if (a.multiplicity <= 0) throw InputError(p + ".multiplicity: must be positive");
            if (as[i].contains("kind")) {
                try {
                    a.kind = arrow_kind_from_string(get_string(as[i]["kind"], p + ".kind"));
                } catch (const DomainError& e) {
                    throw InputError(p + ".kind: " + e.what());
                }
            }
            g.arrows.push_back(a);
        }
    }
    if (!g.connected()) throw InputError("$: graph is not connected");
    return g;
}

// ---- reports ----

json tower_to_json(const Tower& t) {
    json out;
    out["format"] = fmt::kTower;
    json evs = json::array();
    for (const auto& e : t.events) {
        json je;
        je["vertex"] = t.tree.vertices[e.index].id;
        const char* c = e.center == BlowupEvent::Center::Origin ? "origin"
                        : e.center == BlowupEvent::Center::Free ? "free"
                                                                : "satellite";
        je["center"] = c;
        json on = json::array();
        if (e.e1 >= 0) on.push_back(t.tree.vertices[e.e1].id);
        if (e.e2 >= 0) on.push_back(t.tree.vertices[e.e2].id);
        je["on"] = on;
        if (!e.position.empty()) je["position"] = e.position;
        json br = json::array();
        for (const auto& [b, m] : e.branches_through) br.push_back({{"branch", b}, {"multiplicity", m}});
        je["branches"] = br;
        if (e.has_chart) {
            json ch = json::array();
            for (const auto& s : e.chart) ch.push_back(s.str());
            je["chart"] = ch;
        }
        evs.push_back(je);
    }
    out["events"] = evs;
    out["graph"] = graph_body(t.tree);
    return out;
}

json contacts_to_json(const ContactMatrix& q, const std::vector<Strand>& strands) {
    json out;
    out["format"] = fmt::kContacts;
    out["size"] = q.size();
    json ss = json::array();
    for (const auto& s : strands) ss.push_back({{"branch", s.branch}, {"twist", s.twist}});
    out["strands"] = ss;
    json rows = json::array();
    for (std::size_t j = 0; j < q.size(); ++j) {
        json row = json::array();
        for (std::size_t k = 0; k < q.size(); ++k)
            row.push_back(q.at(j, k).is_inf() ? json("inf") : rational_to_json(q.at(j, k).value()));
        rows.push_back(row);
    }
    out["matrix"] = rows;
    json vals = json::array();
    for (const auto& v : q.finite_values()) vals.push_back(rational_to_json(v));
    out["values"] = vals;
    out["ultrametric"] = q.is_ultrametric();
    return out;
}

namespace {

json carrousel_node_json(const CarrouselTree& t, int v) {
    const auto& n = t.nodes[v];
    json out;
    if (n.leaf) {
        out["leaf"] = true;
        out["strand"] = n.strand;
    } else {
        out["weight"] = rational_to_json(n.weight);
    }
    if (n.m) out["m"] = *n.m;
    if (n.n) out["n"] = *n.n;
    if (n.r) out["r"] = *n.r;
    if (n.s) out["s"] = *n.s;
    if (n.edge_label) out["edge_label"] = *n.edge_label;
    if (!n.leaf) {
        json ch = json::array();
        for (int c : n.children) ch.push_back(carrousel_node_json(t, c));
        out["children"] = ch;
    }
    return out;
}

}  // namespace

json carrousel_to_json(const CarrouselTree& t) {
    json out;
    out["format"] = fmt::kCarrousel;
    out["decorated"] = t.decorated;
    out["reduced"] = t.reduced;
    out["leaves"] = t.leaf_count();
    out["canonical"] = t.canonical();
    out["root"] = carrousel_node_json(t, 0);
    return out;
}

json decomposition_to_json(const DualGraph& g, const Decomposition& d) {
    json out;
    out["format"] = fmt::kDecomposition;
    out["mode"] = to_string(d.mode);
    json ps = json::array();
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        const auto& p = d.pieces[i];
        json jp;
        jp["id"] = i;
        const char* kind = p.kind == PieceKind::A ? "A"
                           : p.kind == PieceKind::B ? "B"
                           : p.kind == PieceKind::D ? "D"
                                                    : "conical";
        jp["kind"] = kind;
        jp["label"] = p.label();
        jp["q"] = rational_to_json(p.q);
        if (p.kind == PieceKind::A) jp["q2"] = rational_to_json(p.q2);
        json vs = json::array();
        for (int v : p.vertices) vs.push_back(g.vertices[v].id);
        jp["vertices"] = vs;
        json es = json::array();
        for (const auto& [a, b] : p.edges) es.push_back({g.vertices[a].id, g.vertices[b].id});
        jp["edges"] = es;
        if (p.node >= 0) jp["node"] = g.vertices[p.node].id;
        jp["special"] = p.special;
        jp["protected"] = p.is_protected;
        ps.push_back(jp);
    }
    out["pieces"] = ps;
    json adj = json::array();
    for (const auto& [a, b] : d.adjacency) adj.push_back({a, b});
    out["adjacency"] = adj;
    return out;
}

json thick_thin_to_json(const DualGraph& g, const ThickThin& tt) {
    auto ids = [&](const std::vector<int>& vs) {
        json a = json::array();
        for (int v : vs) a.push_back(g.vertices[v].id);
        return a;
    };
    json out;
    out["format"] = fmt::kThickThin;
    json thick = json::array();
    for (const auto& z : tt.thick) thick.push_back({{"l_node", g.vertices[z.l_node].id}, {"vertices", ids(z.vertices)}});
    json thin = json::array();
    for (const auto& z : tt.thin) {
        json jz{{"vertices", ids(z.vertices)}};
        if (z.rate) jz["rate"] = rational_to_json(*z.rate);
        thin.push_back(jz);
    }
    out["thick"] = thick;
    out["thin"] = thin;
    out["metrically_conical"] = tt.metrically_conical();
    return out;
}

json divisor_to_json(const DualGraph& g, const Divisor& d, const std::string& name) {
    json out;
    out["format"] = fmt::kDivisor;
    out["name"] = name;
    json cs = json::object();
    for (std::size_t i = 0; i < g.size(); ++i) cs[g.vertices[i].id] = rational_to_json(d.coeffs[i]);
    out["coefficients"] = cs;
    json st = json::array();
    for (const auto& a : d.strict)
        st.push_back({{"vertex", g.vertices[a.vertex].id}, {"name", a.name}, {"multiplicity", a.multiplicity},
                      {"kind", to_string(a.kind)}});
    out["strict"] = st;
    return out;
}

// ---- DOT ----

std::string carrousel_dot(const CarrouselTree& t) {
    std::ostringstream os;
    os << "digraph carrousel {\n  node [shape=circle, fontsize=10];\n";
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& n = t.nodes[i];
        os << "  n" << i;
        if (n.leaf)
            os << " [shape=point, xlabel=\"s" << n.strand << "\"];\n";
        else
            os << " [label=\"" << n.weight.str() << "\"];\n";
    }
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        for (int c : t.nodes[i].children) {
            os << "  n" << i << " -> n" << c;
            const auto& cn = t.nodes[c];
            if (cn.edge_label) os << " [label=\"" << *cn.edge_label << "\"]";
            else if (cn.r && *cn.r > 1) os << " [label=\"" << *cn.r << "\"]";
            os << ";\n";
        }
    os << "}\n";
    return os.str();
}

std::string graph_dot(const DualGraph& g) {
    std::ostringstream os;
    os << "graph \"" << dot_escape(g.name.empty() ? "resolution" : g.name) << "\" {\n";
    os << "  node [shape=circle, fontsize=10];\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& v = g.vertices[i];
        // Rate, multiplicities, name, self-intersection top to bottom.
        std::vector<std::string> lines;
        if (v.rate) lines.push_back(v.rate->str());
        if (!v.mult.empty()) {
            std::string m;
            for (const auto& [n, x] : v.mult) {
                if (!m.empty()) m += ",";
                m += v.mult.size() == 1 ? std::to_string(x) : n + "=" + std::to_string(x);
            }
            lines.push_back("(" + m + ")");
        }
        lines.push_back(v.id);
        lines.push_back(std::to_string(v.self_intersection) +
                        (v.genus > 0 ? " [" + std::to_string(v.genus) + "]" : ""));
        std::string label;
        for (const auto& l : lines) label += (label.empty() ? "" : "\\n") + dot_escape(l);
        os << "  v" << i << " [label=\"" << label << "\"";
        if (v.is_L) os << ", shape=doublecircle";
        std::string f = flags_string(v);
        if (!f.empty()) os << ", tooltip=\"" << f << "\"";
        os << "];\n";
    }
    for (const auto& [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
    for (std::size_t k = 0; k < g.arrows.size(); ++k) {
        const auto& a = g.arrows[k];
        os << "  a" << k << " [shape=none, label=\"" << dot_escape(a.name);
        if (a.multiplicity != 1) os << " (" << a.multiplicity << ")";
        os << "\"];\n";
        os << "  v" << a.vertex << " -- a" << k << " [dir=forward, arrowhead=normal, style="
           << (a.kind == ArrowKind::Polar ? "dashed" : "solid") << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string decomposition_dot(const DualGraph& g, const Decomposition& d) {
    std::ostringstream os;
    os << "graph \"" << dot_escape(to_string(d.mode)) << "\" {\n";
    os << "  node [shape=box, style=filled, fontsize=10];\n";
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        const auto& p = d.pieces[i];
        std::string fill, font = "black";
        if (p.special) fill = "blue", font = "white";
        else if (p.kind == PieceKind::A) fill = "white";
        else if (p.kind == PieceKind::Conical) fill = "black", font = "white";
        else fill = "red";
        std::string support;
        for (int v : p.vertices) support += (support.empty() ? "" : ",") + g.vertices[v].id;
        for (const auto& [a, b] : p.edges)
            support += (support.empty() ? "" : ",") + g.vertices[a].id + "-" + g.vertices[b].id;
        os << "  p" << i << " [label=\"" << dot_escape(p.label()) << "\\n" << dot_escape(support)
           << "\", fillcolor=" << fill << ", fontcolor=" << font << "];\n";
    }
    for (const auto& [a, b] : d.adjacency) os << "  p" << a << " -- p" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace singlip
