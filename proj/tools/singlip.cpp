#include "embedded_fixtures.hpp"

#include "singlip/carrousel.hpp"
#include "singlip/decomp.hpp"
#include "singlip/io.hpp"
#include "singlip/strands.hpp"
#include "singlip/surfgraph.hpp"
#include "singlip/tower.hpp"
#include "singlip/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace singlip;

namespace {

enum class OutFormat { Text, Json, Dot };

struct Options {
    OutFormat format = OutFormat::Text;
    bool lenient = false;
};

Options g_opt;

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    ss << in.rdbuf();
    return ss.str();
}

ReadOptions read_options() {
    static std::vector<std::string> warnings;
    return {!g_opt.lenient, &warnings};
}

void flush_warnings() {
    auto opt = read_options();
    for (const auto& w : *opt.warnings) std::cerr << "warning: " << w << "\n";
    opt.warnings->clear();
}

json load(const std::string& path) { return parse_json(read_input(path), path == "-" ? "<stdin>" : path); }

Curve load_curve(const std::string& path) {
    json j = load(path);
    auto f = format_of(j);
    if (!f.empty() && f != fmt::kCurve) throw InputError(path + ": expected a curve, got " + f);
    auto c = curve_from_json(j, read_options());
    flush_warnings();
    return c;
}

DualGraph load_graph(const std::string& path) {
    json j = load(path);
    auto f = format_of(j);
    if (f == fmt::kTower) {
        if (!j.contains("graph")) throw InputError(path + ": tower without graph");
        j = j["graph"];
    } else if (!f.empty() && f != fmt::kGraph) {
        throw InputError(path + ": expected a graph, got " + f);
    }
    auto g = graph_from_json(j, read_options());
    flush_warnings();
    return g;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void require_format(std::initializer_list<OutFormat> allowed, const std::string& what) {
    for (auto f : allowed)
        if (f == g_opt.format) return;
    throw InputError(what + ": unsupported output format");
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

void print_graph_text(const DualGraph& g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& v = g.vertices[i];
        std::cout << v.id << "  e=" << v.self_intersection;
        if (v.genus) std::cout << "  g=" << v.genus;
        if (v.rate) std::cout << "  rate=" << v.rate->str();
        if (!v.mult.empty()) {
            std::vector<std::string> ms;
            for (const auto& [n, m] : v.mult) ms.push_back(n + "=" + std::to_string(m));
            std::cout << "  mult(" << join(ms, ",") << ")";
        }
        std::string fl = std::string(v.is_L ? "L" : "") + (v.is_Delta ? "D" : "") + (v.is_P ? "P" : "");
        if (!fl.empty()) std::cout << "  [" << fl << "]";
        std::vector<std::string> nb;
        for (int w : g.neighbors(static_cast<int>(i))) nb.push_back(g.vertices[w].id);
        std::cout << "  -- " << join(nb, " ") << "\n";
    }
    for (const auto& a : g.arrows)
        std::cout << "arrow " << a.name << " at " << g.vertices[a.vertex].id << " (" << a.multiplicity << ", "
                  << to_string(a.kind) << ")\n";
}

void emit_graph(const DualGraph& g) {
    switch (g_opt.format) {
        case OutFormat::Json: emit_json(graph_to_json(g)); break;
        case OutFormat::Dot: std::cout << graph_dot(g); break;
        case OutFormat::Text: print_graph_text(g); break;
    }
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

// ---- curve ----

int cmd_contacts(const std::string& path) {
    require_format({OutFormat::Text, OutFormat::Json}, "curve contacts");
    auto c = load_curve(path);
    auto strands = strands_of(c);
    auto q = contact_matrix(strands);
    if (g_opt.format == OutFormat::Json) {
        emit_json(contacts_to_json(q, strands));
        return 0;
    }
    std::cout << "strands: " << q.size() << "\n";
    for (std::size_t j = 0; j < q.size(); ++j) {
        std::vector<std::string> row;
        for (std::size_t k = 0; k < q.size(); ++k) row.push_back(q.at(j, k).str());
        std::cout << "  b" << strands[j].branch << "." << strands[j].twist << ": " << join(row, " ") << "\n";
    }
    std::vector<std::string> vals;
    for (const auto& v : q.finite_values()) vals.push_back(v.str());
    std::cout << "values: {" << join(vals, ", ") << "}\n";
    std::cout << "ultrametric: " << (q.is_ultrametric() ? "true" : "false") << "\n";
    return 0;
}

void print_carrousel(const CarrouselTree& t, int v, int depth) {
    const auto& n = t.nodes[v];
    std::cout << std::string(2 * depth, ' ');
    if (n.leaf) {
        std::cout << "leaf s" << n.strand;
    } else {
        std::cout << n.weight.str();
        if (n.n) std::cout << "  n=" << *n.n << " m=" << *n.m;
        if (n.r) std::cout << " r=" << *n.r << " s=" << *n.s;
    }
    if (n.edge_label) std::cout << "  edge=" << *n.edge_label;
    std::cout << "\n";
    for (int c : n.children) print_carrousel(t, c, depth + 1);
}

int cmd_carrousel(const std::string& path, bool dec, bool reduce) {
    auto c = load_curve(path);
    auto t = build_carrousel_tree(contact_matrix(c));
    if (dec || reduce) t = decorate(t);
    if (reduce) t = reduce_to_eggers(t);
    switch (g_opt.format) {
        case OutFormat::Json: emit_json(carrousel_to_json(t)); break;
        case OutFormat::Dot: std::cout << carrousel_dot(t); break;
        case OutFormat::Text:
            print_carrousel(t, 0, 0);
            std::cout << "canonical: " << t.canonical() << "\n";
            break;
    }
    return 0;
}

int cmd_horns(const std::string& path, std::size_t base) {
    require_format({OutFormat::Text, OutFormat::Json}, "curve horns");
    auto q = contact_matrix(load_curve(path));
    if (base >= q.size()) throw InputError("--base " + std::to_string(base) + " out of range");
    auto prof = horn_jump_profile(q, base);
    std::vector<std::string> th, counts{"1"};
    json jp = json::array();
    for (const auto& h : prof) {
        th.push_back(h.threshold.str());
        counts.push_back(std::to_string(h.count_below));
        jp.push_back({{"threshold", rational_to_json(h.threshold)}, {"count_below", h.count_below}});
    }
    if (g_opt.format == OutFormat::Json) {
        emit_json({{"base", base}, {"jumps", jp}});
    } else {
        std::cout << "thresholds: (" << join(th, ", ") << ")\n";
        std::cout << "counts: (" << join(counts, ", ") << ")\n";
    }
    return 0;
}

int cmd_resolve(const std::string& path, std::size_t cap) {
    auto t = resolve_curve(load_curve(path), cap);
    if (g_opt.format == OutFormat::Json) {
        emit_json(tower_to_json(t));
        return 0;
    }
    if (g_opt.format == OutFormat::Text) std::cout << "blow-ups: " << t.events.size() << "\n";
    emit_graph(t.tree);
    return 0;
}

int cmd_equiv(const std::string& a, const std::string& b) {
    auto ta = build_carrousel_tree(contact_matrix(load_curve(a)));
    auto tb = build_carrousel_tree(contact_matrix(load_curve(b)));
    bool eq = trees_isomorphic(ta, tb);
    if (g_opt.format == OutFormat::Json) emit_json({{"equivalent", eq}});
    else std::cout << "equivalent: " << (eq ? "true" : "false") << "\n";
    return 0;
}

// ---- graph ----

int cmd_mult(const std::string& path, const std::string& name, bool rational) {
    require_format({OutFormat::Text, OutFormat::Json}, "graph mult");
    auto g = load_graph(path);
    auto d = solve_multiplicities(g, name, !rational);
    if (g_opt.format == OutFormat::Json) {
        emit_json(divisor_to_json(g, d, name));
        return 0;
    }
    std::vector<std::string> cs;
    for (std::size_t i = 0; i < g.size(); ++i) cs.push_back(g.vertices[i].id + "=" + d.coeffs[i].str());
    std::cout << name << ": " << join(cs, " ") << "\n";
    for (const auto& a : d.strict)
        std::cout << "strict " << a.name << " at " << g.vertices[a.vertex].id << " (" << a.multiplicity << ")\n";
    return 0;
}

int cmd_laufer(const std::string& path, const std::string& stage) {
    auto t = resolve_curve(load_curve(path));
    auto prepared = laufer_parity_prepare(t, "f");
    if (stage == "prepared") {
        if (g_opt.format == OutFormat::Json) emit_json(tower_to_json(prepared));
        else emit_graph(prepared.tree);
        return 0;
    }
    emit_graph(laufer_double_cover(prepared.tree, "f"));
    return 0;
}

int cmd_pencil(const std::string& path, const std::string& gens, int cap) {
    auto g = load_graph(path);
    auto res = resolve_pencil(g, split_list(gens), cap);
    if (g_opt.format == OutFormat::Text) {
        std::vector<std::string> ids;
        for (int v : res.blown_up) ids.push_back(res.graph.vertices[v].id);
        std::cout << "blow-ups: " << res.blown_up.size() << (ids.empty() ? "" : " (" + join(ids, ", ") + ")")
                  << "\n";
    }
    emit_graph(res.graph);
    return 0;
}

int cmd_thickthin(const std::string& path) {
    require_format({OutFormat::Text, OutFormat::Json}, "graph thickthin");
    auto g = load_graph(path);
    auto tt = thick_thin(g);
    if (g_opt.format == OutFormat::Json) {
        emit_json(thick_thin_to_json(g, tt));
        return 0;
    }
    auto ids = [&](const std::vector<int>& vs) {
        std::vector<std::string> s;
        for (int v : vs) s.push_back(g.vertices[v].id);
        return join(s, ",");
    };
    std::size_t nthick = 0, nthin = 0;
    for (const auto& z : tt.thick) nthick += z.vertices.size();
    for (const auto& z : tt.thin) nthin += z.vertices.size();
    std::cout << "thick " << nthick << " vertices, thin " << nthin << " vertices\n";
    std::cout << "thick zones: " << tt.thick.size() << "\n";
    for (const auto& z : tt.thick) std::cout << "  " << g.vertices[z.l_node].id << ": " << ids(z.vertices) << "\n";
    std::cout << "thin zones: " << tt.thin.size() << (tt.thin.empty() ? " (thin empty)" : "") << "\n";
    for (const auto& z : tt.thin)
        std::cout << "  " << ids(z.vertices) << (z.rate ? " rate " + z.rate->str() : "") << "\n";
    std::cout << "metrically conical: " << (tt.metrically_conical() ? "true" : "false") << "\n";
    return 0;
}

int cmd_decompose(const std::string& path, const std::string& mode, bool amalg, const std::string& protect) {
    auto g = load_graph(path);
    auto m = decomposition_mode_from_string(mode);
    Decomposition d;
    if (m == DecompositionMode::CSquare) d = csquare_decomposition(g);
    else if (m == DecompositionMode::ThickThin) throw InputError("use `graph thickthin` for the thick-thin split");
    else d = build_decomposition(g, m);
    if (amalg) {
        std::set<int> prot;
        for (const auto& s : split_list(protect)) {
            int p = std::stoi(s);
            if (p < 0 || p >= static_cast<int>(d.pieces.size())) throw InputError("--protect: no piece " + s);
            prot.insert(p);
        }
        d = amalgamate(d, prot);
    }
    switch (g_opt.format) {
        case OutFormat::Json: emit_json(decomposition_to_json(g, d)); break;
        case OutFormat::Dot: std::cout << decomposition_dot(g, d); break;
        case OutFormat::Text: {
            std::vector<std::string> labels;
            for (const auto& p : d.pieces) labels.push_back(p.label());
            std::cout << d.pieces.size() << " pieces: " << join(labels, ", ") << "\n";
            for (std::size_t i = 0; i < d.pieces.size(); ++i) {
                const auto& p = d.pieces[i];
                std::vector<std::string> sup;
                for (int v : p.vertices) sup.push_back(g.vertices[v].id);
                for (const auto& [a, b] : p.edges) sup.push_back(g.vertices[a].id + "-" + g.vertices[b].id);
                std::cout << "  [" << i << "] " << p.label() << (p.special ? " special" : "")
                          << (p.is_protected ? " protected" : "") << ": " << join(sup, ",") << "\n";
            }
            std::vector<std::string> adj;
            for (const auto& [a, b] : d.adjacency) adj.push_back(std::to_string(a) + "-" + std::to_string(b));
            std::cout << "adjacency: " << join(adj, " ") << "\n";
            break;
        }
    }
    return 0;
}

int cmd_signature(const std::vector<std::string>& paths, const std::string& metric) {
    require_format({OutFormat::Text, OutFormat::Json}, "graph signature");
    if (metric != "inner" && metric != "outer") throw InputError("--metric must be inner or outer");
    std::vector<Signature> sigs;
    for (const auto& p : paths) {
        auto g = load_graph(p);
        sigs.push_back(metric == "inner" ? inner_signature(g) : outer_signature(g));
    }
    bool equal = std::all_of(sigs.begin(), sigs.end(), [&](const Signature& s) { return s == sigs[0]; });
    if (g_opt.format == OutFormat::Json) {
        json arr = json::array();
        for (const auto& s : sigs) arr.push_back(s.form);
        json out{{"metric", metric}, {"signatures", arr}};
        if (sigs.size() > 1) out["equal"] = equal;
        emit_json(out);
    } else {
        for (std::size_t i = 0; i < sigs.size(); ++i) std::cout << paths[i] << ": " << sigs[i].form << "\n";
        if (sigs.size() > 1) std::cout << "equal: " << (equal ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& path) {
    json j = load(path);
    auto f = format_of(j);
    VerifyReport rep;
    bool is_curve = f == fmt::kCurve || (f.empty() && j.is_object() && j.contains("branches"));
    if (is_curve) {
        rep = verify_curve(curve_from_json(j, read_options()));
    } else {
        if (f == fmt::kTower) j = j.at("graph");
        else if (!f.empty() && f != fmt::kGraph) throw InputError(path + ": cannot verify " + f);
        rep = verify_graph(graph_from_json(j, read_options()));
    }
    flush_warnings();
    for (const auto& c : rep.checks) {
        std::cout << (c.ok ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
    }
    std::cout << "verified: " << (rep.ok() ? "true" : "false") << "\n";
    return rep.ok() ? 0 : 1;
}

int cmd_fixtures_list() {
    for (const auto& f : embedded_fixtures()) std::cout << f.name << "\n";
    return 0;
}

int cmd_fixtures_dump(const std::string& name) {
    for (const auto& f : embedded_fixtures())
        if (f.name == name) {
            std::cout << f.text;
            return 0;
        }
    throw InputError("unknown fixture '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of plane curve and surface singularities"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_flag("--lenient", g_opt.lenient, "Warn about unknown JSON fields instead of failing");

    std::function<int()> job;
    std::string in, in2, arrow, gens, mode = "inner", metric = "inner", protect, stage = "cover", name;
    std::vector<std::string> inputs;
    std::size_t base = 0, cap = event_cap_from_env();
    int pencil_cap = kDefaultPencilCap;
    bool dec = false, reduce = false, rational = false, amalg = false;

    auto* curve = app.add_subcommand("curve", "Plane curve germs given by Puiseux branches");
    curve->require_subcommand(1);
    curve->fallthrough();
    auto* c1 = curve->add_subcommand("contacts", "Contact matrix of all strands");
    c1->add_option("input", in)->required();
    c1->callback([&] { job = [&] { return cmd_contacts(in); }; });
    auto* c2 = curve->add_subcommand("carrousel", "Carrousel tree");
    c2->add_option("input", in)->required();
    c2->add_flag("--decorate", dec, "Attach n, m, r, s decorations");
    c2->add_flag("--reduce", reduce, "Reduce to the Eggers-Wall tree");
    c2->callback([&] { job = [&] { return cmd_carrousel(in, dec, reduce); }; });
    auto* c3 = curve->add_subcommand("horns", "Horn-jump profile around one strand");
    c3->add_option("input", in)->required();
    c3->add_option("--base", base, "Strand index")->required();
    c3->callback([&] { job = [&] { return cmd_horns(in, base); }; });
    auto* c4 = curve->add_subcommand("resolve", "Minimal embedded resolution");
    c4->add_option("input", in)->required();
    c4->add_option("--event-cap", cap, "Maximum number of blow-ups");
    c4->callback([&] { job = [&] { return cmd_resolve(in, cap); }; });
    auto* c5 = curve->add_subcommand("equiv", "Compare carrousel trees of two curves");
    c5->add_option("a", in)->required();
    c5->add_option("b", in2)->required();
    c5->callback([&] { job = [&] { return cmd_equiv(in, in2); }; });

    auto* graph = app.add_subcommand("graph", "Resolution graphs");
    graph->require_subcommand(1);
    graph->fallthrough();
    auto* g1 = graph->add_subcommand("mult", "Solve the multiplicities of a total transform");
    g1->add_option("input", in)->required();
    g1->add_option("--arrow", arrow, "Arrow name")->required();
    g1->add_flag("--rational", rational, "Allow non-integral solutions");
    g1->callback([&] { job = [&] { return cmd_mult(in, arrow, rational); }; });
    auto* g2 = graph->add_subcommand("laufer", "Double cover z^2 + f = 0 over a curve's resolution");
    g2->add_option("input", in, "Curve JSON")->required();
    g2->add_option("--stage", stage)->check(CLI::IsMember({"prepared", "cover"}));
    g2->callback([&] { job = [&] { return cmd_laufer(in, stage); }; });
    auto* g3 = graph->add_subcommand("pencil", "Resolve the base points of a pencil");
    g3->add_option("input", in)->required();
    g3->add_option("--gens", gens, "Comma-separated generator names")->required();
    g3->add_option("--cap", pencil_cap, "Maximum number of blow-ups");
    g3->callback([&] { job = [&] { return cmd_pencil(in, gens, pencil_cap); }; });
    auto* g4 = graph->add_subcommand("thickthin", "Thick-thin decomposition");
    g4->add_option("input", in)->required();
    g4->callback([&] { job = [&] { return cmd_thickthin(in); }; });
    auto* g5 = graph->add_subcommand("decompose", "Geometric decomposition into standard pieces");
    g5->add_option("input", in)->required();
    g5->add_option("--mode", mode)->check(CLI::IsMember({"initial", "inner", "outer", "csquare"}));
    g5->add_flag("--amalgamate", amalg, "Apply the amalgamation rules");
    g5->add_option("--protect", protect, "Comma-separated piece ids kept out of amalgamation");
    g5->callback([&] { job = [&] { return cmd_decompose(in, mode, amalg, protect); }; });
    auto* g6 = graph->add_subcommand("signature", "Classification signature");
    g6->add_option("inputs", inputs)->required();
    g6->add_option("--metric", metric)->check(CLI::IsMember({"inner", "outer"}));
    g6->callback([&] { job = [&] { return cmd_signature(inputs, metric); }; });

    auto* ver = app.add_subcommand("verify", "Check the invariants of a curve, tower or graph");
    ver->add_option("input", in)->required();
    ver->callback([&] { job = [&] { return cmd_verify(in); }; });

    auto* fix = app.add_subcommand("fixtures", "Bundled example data");
    fix->require_subcommand(1);
    fix->fallthrough();
    fix->add_subcommand("list", "List fixture names")->callback([&] { job = cmd_fixtures_list; });
    auto* dump = fix->add_subcommand("dump", "Print a fixture");
    dump->add_option("name", name)->required();
    dump->callback([&] { job = [&] { return cmd_fixtures_dump(name); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    g_opt.format = format == "json" ? OutFormat::Json : format == "dot" ? OutFormat::Dot : OutFormat::Text;
    try {
        return job();
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    }
}
