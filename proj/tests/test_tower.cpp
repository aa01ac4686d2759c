#include "singlip/tower.hpp"

#include "curvette.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace singlip;
using testsupport::branch;

namespace {

std::vector<Rational> rates_in_order(const Tower& t) {
    std::vector<Rational> out;
    for (const auto& ev : t.events) out.push_back(*t.tree.vertices[ev.index].rate);
    return out;
}

std::multiset<Rational> rate_set(const DualGraph& g) {
    std::multiset<Rational> out;
    for (const auto& v : g.vertices) out.insert(*v.rate);
    return out;
}

std::vector<long> self_intersections(const DualGraph& g) {
    std::vector<long> out;
    for (const auto& v : g.vertices) out.push_back(v.self_intersection);
    return out;
}

}  // namespace

TEST_CASE("tower of the (3,5) cusp") {
    auto t = resolve_curve({branch(3, {{"5/3", 1}})});
    const auto& g = t.tree;
    REQUIRE(g.size() == 4);
    CHECK(self_intersections(g) == std::vector<long>{-3, -3, -2, -1});
    CHECK(rates_in_order(t) == std::vector<Rational>{1, 2, Rational(3, 2), Rational(5, 3)});
    std::vector<long> f;
    for (const auto& v : g.vertices) f.push_back(v.mult.at("f"));
    CHECK(f == std::vector<long>{3, 5, 9, 15});
    CHECK(g.edge_count(0, 2) == 1);
    CHECK(g.edge_count(2, 3) == 1);
    CHECK(g.edge_count(3, 1) == 1);
    CHECK(g.vertices[3].rate_vector == RateVector{5, 3});
    CHECK(t.events[2].center == BlowupEvent::Center::Satellite);
    CHECK(t.events[3].chart.size() == 3);
    REQUIRE(g.arrows.size() == 2);
    CHECK(g.arrows[1].vertex == 3);
    CHECK(verify_tower(g).ok());
}

TEST_CASE("tower of y = x^{3/2} + x^{7/4}") {
    auto t = resolve_curve(testsupport::fixture_curve("curve-32-74"));
    CHECK(rates_in_order(t) == std::vector<Rational>{1, 2, Rational(3, 2), 2, Rational(7, 4)});
    std::vector<long> f;
    for (const auto& v : t.tree.vertices) f.push_back(v.mult.at("f"));
    CHECK(f == std::vector<long>{4, 6, 12, 13, 26});
    CHECK(verify_tower(t.tree).ok());
}

TEST_CASE("double point blow-ups of the cusp tower") {
    auto t = resolve_curve({branch(3, {{"5/3", 1}})});
    blow_up_double_points(t);
    CHECK(t.tree.size() == 8);
    CHECK(rate_set(t.tree) == std::multiset<Rational>{1, Rational(4, 3), Rational(3, 2), Rational(8, 5),
                                                      Rational(5, 3), Rational(7, 4), 2, 2});
    CHECK(verify_tower(t.tree).ok());
}

TEST_CASE("blowing up along the strict transform") {
    auto t = resolve_curve({branch(3, {{"5/3", 1}})});
    std::size_t arrow = 1;
    REQUIRE(t.tree.arrows[arrow].name == "f");
    blow_up_along_arrow(t, arrow, 5);
    std::vector<Rational> tail;
    for (std::size_t i = 4; i < t.tree.size(); ++i) tail.push_back(*t.tree.vertices[i].rate);
    CHECK(tail == std::vector<Rational>{2, Rational(7, 3), Rational(8, 3), 3, Rational(10, 3)});
    CHECK(t.tree.vertices.back().self_intersection == -1);
    CHECK(verify_tower(t.tree).ok());
    CHECK_THROWS_AS(blow_up_along_arrow(t, 9, 1), DomainError);
}

TEST_CASE("rates of a monomial branch are its approximation numbers") {
    // A smooth branch (q = 1) is resolved by the first blow-up.
    for (long q = 2; q <= 7; ++q)
        for (long p = q + 1; p <= 4 * q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            PuiseuxBranch b;
            b.denominator = q;
            b.terms.push_back({Rational(p, q), Rational(1)});
            auto t = resolve_curve({b});
            CHECK(rates_in_order(t) == cf_intermediate_approximants(cf_expand(Rational(p, q))));
        }
}

TEST_CASE("verify flags a broken tower") {
    auto t = resolve_curve({branch(3, {{"5/3", 1}})});
    t.tree.vertices[1].self_intersection = -2;
    auto rep = verify_tower(t.tree);
    REQUIRE_FALSE(rep.ok());
    bool residual = false;
    for (const auto& v : rep.violations) residual = residual || v.find("laufer residual 5") != std::string::npos;
    CHECK(residual);
    t = resolve_curve({branch(3, {{"5/3", 1}})});
    t.tree.vertices[2].rate = Rational(5, 2);
    CHECK_FALSE(verify_tower(t.tree).ok());
}

TEST_CASE("event cap") {
    Curve c{branch(2, {{"41/2", 1}})};
    CHECK_THROWS_AS(resolve_curve(c, 10), DomainError);
    CHECK(resolve_curve(c, 22).events.size() == 22);
    CHECK(resolve_curve({branch(1, {{"40", 1}})}, 1).events.size() == 1);
    setenv("SINGLIP_EVENT_CAP", "7", 1);
    CHECK(event_cap_from_env() == 7);
    setenv("SINGLIP_EVENT_CAP", "seven", 1);
    CHECK(event_cap_from_env() == kDefaultEventCap);
    unsetenv("SINGLIP_EVENT_CAP");
    CHECK(event_cap_from_env() == kDefaultEventCap);
}

TEST_CASE("vertex rates are curvette contacts") {
    for (const auto& c : {testsupport::fixture_curve("cusp-53"), testsupport::fixture_curve("curve-32-74"),
                          testsupport::fixture_curve("carrousel-example")}) {
        auto t = resolve_curve(c);
        for (const auto& ev : t.events) {
            auto got = curvette::contact(ev.chart);
            CHECK(got == *t.tree.vertices[ev.index].rate);
        }
    }
}
