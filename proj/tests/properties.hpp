#pragma once

// Randomized property suites shared by the doctest runner and the acceptance
// report. Each returns how many cases ran and the first failure, if any.

#include "singlip/carrousel.hpp"
#include "singlip/decomp.hpp"
#include "singlip/tower.hpp"

#include "curvette.hpp"
#include "support.hpp"

#include <functional>
#include <sstream>

namespace props {

using namespace singlip;

struct SuiteResult {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
    void fail(int i, const std::string& what) {
        if (failures++ == 0) first_failure = "case " + std::to_string(i) + ": " + what;
    }
};

inline constexpr int kCases = 200;

inline std::string describe(const Curve& c) {
    std::ostringstream os;
    for (const auto& b : c) {
        os << "[n=" << b.denominator;
        for (const auto& t : b.terms) os << " " << t.coeff << "x^" << t.exp;
        os << "]";
    }
    return os.str();
}

inline SuiteResult ultrametric(std::uint64_t seed = 1) {
    std::mt19937_64 rng(seed);
    SuiteResult r;
    for (int i = 0; i < kCases; ++i, ++r.cases) {
        auto c = testsupport::random_curve(rng, 4, 6, 3);
        std::size_t j, k, l;
        if (!contact_matrix(c).is_ultrametric(&j, &k, &l))
            r.fail(i, describe(c) + " violates at (" + std::to_string(j) + "," + std::to_string(k) + "," +
                          std::to_string(l) + ")");
    }
    return r;
}

inline SuiteResult carrousel_round_trip(std::uint64_t seed = 2) {
    std::mt19937_64 rng(seed);
    SuiteResult r;
    for (int i = 0; i < kCases; ++i, ++r.cases) {
        auto c = testsupport::random_curve(rng, 4, 6, 3);
        auto q = contact_matrix(c);
        if (!(leaf_contacts(build_carrousel_tree(q)) == q)) r.fail(i, describe(c));
    }
    return r;
}

// Laufer-zero residuals, unimodularity and rates increasing away from the root,
// checked directly on the tree.
inline SuiteResult tower_invariants(std::uint64_t seed = 3) {
    std::mt19937_64 rng(seed);
    SuiteResult r;
    for (int i = 0; i < kCases; ++i, ++r.cases) {
        auto c = testsupport::random_curve(rng, 2, 6, 3);
        const auto g = resolve_curve(c).tree;
        std::string bad;
        for (const auto& n : {std::string("f"), std::string("l")})
            for (std::size_t v = 0; v < g.size(); ++v)
                if (g.laufer_residual(static_cast<int>(v), n) != 0) bad = "residual of " + n + " at " + g.vertices[v].id;
        Rational det = determinant(g.intersection_matrix());
        if (det != Rational(1) && det != Rational(-1)) bad = "determinant " + det.str();
        std::vector<int> seen(g.size(), 0), stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (seen[w]) continue;
                seen[w] = 1;
                stack.push_back(w);
                if (!(*g.vertices[v].rate < *g.vertices[w].rate)) bad = "rate drops at " + g.vertices[w].id;
            }
        }
        if (!g.is_tree()) bad = "not a tree";
        if (!bad.empty()) r.fail(i, describe(c) + " " + bad);
    }
    return r;
}

inline SuiteResult curvette_rates(std::uint64_t seed = 4) {
    std::mt19937_64 rng(seed);
    SuiteResult r;
    for (int i = 0; i < kCases; ++i, ++r.cases) {
        auto c = testsupport::random_curve(rng, 2, 6, 3);
        auto t = resolve_curve(c);
        for (const auto& ev : t.events) {
            Rational want = *t.tree.vertices[ev.index].rate, got = curvette::contact(ev.chart);
            if (got != want) {
                r.fail(i, describe(c) + " " + t.tree.vertices[ev.index].id + ": rate " + want.str() +
                              ", curvettes " + got.str());
                break;
            }
        }
    }
    return r;
}

inline Decomposition permute_pieces(const Decomposition& d, const std::vector<int>& order) {
    Decomposition out;
    out.mode = d.mode;
    std::vector<int> where(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.pieces.push_back(d.pieces[order[i]]);
        where[order[i]] = static_cast<int>(i);
    }
    for (auto [a, b] : d.adjacency)
        out.adjacency.emplace_back(std::min(where[a], where[b]), std::max(where[a], where[b]));
    std::sort(out.adjacency.begin(), out.adjacency.end());
    return out;
}

inline SuiteResult amalgamation_confluence(std::uint64_t seed = 5) {
    std::mt19937_64 rng(seed);
    SuiteResult r;
    for (int i = 0; i < kCases; ++i, ++r.cases) {
        auto c = testsupport::random_curve(rng, 2, 6, 3);
        auto t = resolve_curve(c);
        if (i % 2) blow_up_double_points(t);
        auto d = csquare_decomposition(t.tree);
        auto expect = amalgamate(d).canonical();
        std::vector<int> order(d.pieces.size());
        std::iota(order.begin(), order.end(), 0);
        for (int k = 0; k < 3; ++k) {
            std::shuffle(order.begin(), order.end(), rng);
            if (amalgamate(permute_pieces(d, order)).canonical() != expect) {
                r.fail(i, describe(c));
                break;
            }
        }
    }
    return r;
}

struct Suite {
    const char* name;
    std::function<SuiteResult()> run;
};

inline std::vector<Suite> all_suites() {
    return {{"ultrametric contact matrices", [] { return ultrametric(); }},
            {"carrousel round trip", [] { return carrousel_round_trip(); }},
            {"tower invariants", [] { return tower_invariants(); }},
            {"rates equal curvette contacts", [] { return curvette_rates(); }},
            {"amalgamation confluence", [] { return amalgamation_confluence(); }}};
}

}  // namespace props
