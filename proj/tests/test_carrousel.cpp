#include "singlip/carrousel.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace singlip;
using testsupport::branch;

namespace {

const CarrouselNode& only_child(const CarrouselTree& t, int v) {
    REQUIRE(t.nodes[v].children.size() == 1);
    return t.nodes[t.nodes[v].children[0]];
}

std::size_t leaves_below(const CarrouselTree& t, int v) {
    if (t.nodes[v].leaf) return 1;
    std::size_t n = 0;
    for (int c : t.nodes[v].children) n += leaves_below(t, c);
    return n;
}

// Two ultrametric matrices describe isomorphic trees iff they agree up to a
// relabelling of strands.
bool matrices_equivalent(const ContactMatrix& a, const ContactMatrix& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::size_t> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        if (a.permuted(p) == b) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace

TEST_CASE("carrousel tree of the example curve") {
    auto t = build_carrousel_tree(contact_matrix(testsupport::fixture_curve("carrousel-example")));
    CHECK(t.root().weight == Rational(1));
    const auto& mid = only_child(t, 0);
    CHECK(mid.weight == Rational(3, 2));
    std::vector<std::pair<Rational, std::size_t>> kids;
    for (int c : mid.children) kids.emplace_back(t.nodes[c].weight, leaves_below(t, c));
    std::sort(kids.begin(), kids.end());
    CHECK(kids == std::vector<std::pair<Rational, std::size_t>>{
                      {Rational(13, 6), 3}, {Rational(13, 6), 3}, {Rational(5, 2), 2}});
    CHECK(t.leaf_count() == 8);
}

TEST_CASE("small carrousel trees") {
    auto one = build_carrousel_tree(contact_matrix({branch(1, {{"2", 1}})}));
    CHECK(one.nodes.size() == 2);
    CHECK(one.nodes[1].leaf);
    auto cusp = build_carrousel_tree(contact_matrix({branch(2, {{"3/2", 1}})}));
    const auto& v = only_child(cusp, 0);
    CHECK(v.weight == Rational(3, 2));
    CHECK(v.children.size() == 2);
}

TEST_CASE("decorations") {
    auto t = decorate(build_carrousel_tree(contact_matrix(testsupport::fixture_curve("carrousel-example"))));
    CHECK(*t.root().m == 1);
    CHECK(*t.root().n == 1);
    CHECK_FALSE(t.root().r.has_value());
    const auto& mid = only_child(t, 0);
    CHECK(*mid.n == 2);
    CHECK(*mid.m == 3);
    CHECK(*mid.r == 2);
    CHECK(*mid.s == 1);
    for (int c : mid.children) {
        const auto& k = t.nodes[c];
        if (k.weight == Rational(13, 6)) {
            CHECK(*k.n == 6);
            CHECK(*k.r == 3);
            CHECK(*k.s == 4);
        } else {
            CHECK(*k.n == 2);
            CHECK(*k.r == 1);
            CHECK(*k.s == 2);
        }
    }
}

TEST_CASE("reduction to the Eggers-type tree") {
    auto t = reduce_to_eggers(
        decorate(build_carrousel_tree(contact_matrix(testsupport::fixture_curve("carrousel-example")))));
    // The pair of 13/6 subtrees collapses; the lone 5/2 subtree keeps the label r = 2;
    // the three leaves under 13/6 collapse (r = 3) while the two under 5/2 stay (r = 1).
    CHECK(t.canonical() == "(1 (3/2 (13/6 L) (5/2^2 L L)))");
    auto cusp = reduce_to_eggers(decorate(build_carrousel_tree(contact_matrix({branch(2, {{"3/2", 1}})}))));
    CHECK(cusp.leaf_count() == 1);
    auto trivial = build_carrousel_tree(contact_matrix({branch(1, {{"1", 1}})}));
    CHECK(reduce_to_eggers(decorate(trivial)).canonical() == decorate(trivial).canonical());
}

TEST_CASE("isomorphism decides equivalence") {
    auto a = build_carrousel_tree(contact_matrix(testsupport::fixture_curve("carrousel-example")));
    CHECK(trees_isomorphic(a, a));
    auto b = build_carrousel_tree(contact_matrix({branch(2, {{"5/2", 1}})}));
    CHECK_FALSE(trees_isomorphic(a, b));
    auto c = build_carrousel_tree(
        contact_matrix({branch(6, {{"3/2", 2}, {"13/6", 5}}), branch(2, {{"5/2", -1}})}));
    CHECK(trees_isomorphic(a, c));
}

TEST_CASE("canonical equality agrees with brute-force relabelling") {
    std::mt19937_64 rng(99);
    std::vector<ContactMatrix> ms;
    while (ms.size() < 40) {
        auto c = testsupport::random_curve(rng, 3, 3, 2);
        auto q = contact_matrix(c);
        if (q.size() <= 6) ms.push_back(q);
    }
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i; j < ms.size(); ++j) {
            bool iso = trees_isomorphic(build_carrousel_tree(ms[i]), build_carrousel_tree(ms[j]));
            CHECK(iso == matrices_equivalent(ms[i], ms[j]));
        }
}

TEST_CASE("strand relabelling keeps the isomorphism class") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 100; ++it) {
        auto q = contact_matrix(testsupport::random_curve(rng, 3, 6, 3));
        std::vector<std::size_t> p(q.size());
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        auto a = build_carrousel_tree(q), b = build_carrousel_tree(q.permuted(p));
        CHECK(a.canonical() == b.canonical());
        CHECK(leaf_contacts(b) == q.permuted(p));
    }
}
