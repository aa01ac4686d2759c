#include "singlip/strands.hpp"

#include "support.hpp"

#include <doctest.h>

#include <complex>
#include <map>

using namespace singlip;
using testsupport::branch;
using cd = std::complex<double>;

namespace {

const double kPi = 3.14159265358979323846;

// Difference of two strands at x, summed term by term from the branch data
// (coefficient a * exp(2 pi i j m / n) at exponent m/n), never from the
// cyclotomic coefficients stored in the strands.
cd numeric_difference(const Curve& c, const Strand& s, const Strand& t, double x) {
    std::map<Rational, cd> diff;
    for (int side = 0; side < 2; ++side) {
        const Strand& st = side ? t : s;
        const auto& b = c[st.branch];
        for (const auto& term : b.terms) {
            long m = (term.exp * Rational(b.denominator)).floor().get_si();
            long k = (st.twist * m) % b.denominator;
            cd coef = term.coeff.to_double() *
                      std::polar(1.0, 2 * kPi * static_cast<double>(k) / static_cast<double>(b.denominator));
            diff[term.exp] += side ? -coef : coef;
        }
    }
    cd acc = 0;
    // Coefficients that cancel exactly leave rounding noise; drop it.
    for (const auto& [e, c2] : diff)
        if (std::abs(c2) > 1e-9) acc += c2 * std::pow(x, e.to_double());
    return acc;
}

}  // namespace

TEST_CASE("strand counts") {
    auto ex = testsupport::fixture_curve("carrousel-example");
    CHECK(strands_of(ex).size() == 8);
    CHECK(strands_of({branch(1, {{"2", 1}})}).size() == 1);
    auto s = strands_of({branch(2, {{"3/2", 1}})});
    REQUIRE(s.size() == 2);
    CHECK(s[0].series[0].coeff == CyclotomicNumber::embed(1, 2));
    CHECK(s[1].series[0].coeff == CyclotomicNumber::embed(-1, 2));
}

TEST_CASE("branch validation") {
    CHECK_THROWS_AS(branch(2, {{"3/4", 1}}).validate(), DomainError);
    CHECK_THROWS_AS(branch(4, {{"3/2", 1}}).validate(), DomainError);
    CHECK_THROWS_AS(branch(2, {{"5/2", 1}, {"3/2", 1}}).validate(), DomainError);
    CHECK_THROWS_AS(branch(2, {{"1/2", 1}}).validate(), DomainError);
    CHECK_THROWS_AS(strands_of({branch(2, {{"3/2", 1}}), branch(2, {{"3/2", 1}})}), DomainError);
    // The conjugate parametrization is the same branch.
    CHECK_THROWS_AS(strands_of({branch(2, {{"3/2", 1}, {"2", 1}}), branch(2, {{"3/2", -1}, {"2", 1}})}),
                    DomainError);
}

TEST_CASE("strand contacts") {
    auto s = strands_of({branch(2, {{"3/2", 1}})});
    CHECK(strand_contact(s[0], s[1]) == Extended(Rational(3, 2)));
    CHECK(strand_contact(s[0], s[0]).is_inf());
    auto t = strands_of({branch(6, {{"3/2", 1}, {"13/6", 1}})});
    // twists 0 and 2 agree on 3/2 (2*9 = 18 = 0 mod 6) and differ on 13/6.
    CHECK(strand_contact(t[0], t[2]) == Extended(Rational(13, 6)));
    CHECK(strand_contact(t[0], t[1]) == Extended(Rational(3, 2)));
}

TEST_CASE("contact matrix of the carrousel example") {
    auto q = contact_matrix(testsupport::fixture_curve("carrousel-example"));
    CHECK(q.size() == 8);
    CHECK(q.finite_values() == std::vector<Rational>{Rational(3, 2), Rational(13, 6), Rational(5, 2)});
    CHECK(q.is_ultrametric());
    CHECK(contact_matrix({branch(1, {{"2", 1}})}).at(0, 0).is_inf());
}

TEST_CASE("two branches sharing the cusp term") {
    Curve c{branch(2, {{"3/2", 1}, {"2", 1}}), branch(2, {{"3/2", 1}, {"2", 3}})};
    auto q = contact_matrix(c);
    auto v = q.finite_values();
    CHECK(v.front() == Rational(3, 2));
    CHECK(v.back() == Rational(2));
    // Intersection multiplicity: sum of cross contacts, against the numeric
    // order of the product of cross differences.
    auto s = strands_of(c);
    Rational sum = 0;
    double x1 = 1e-8, x2 = 1e-10;
    double l1 = 0, l2 = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (s[i].branch == 0 && s[j].branch == 1) {
                sum += q.at(i, j).value();
                l1 += std::log(std::abs(numeric_difference(c, s[i], s[j], x1)));
                l2 += std::log(std::abs(numeric_difference(c, s[i], s[j], x2)));
            }
    CHECK(sum == Rational(7));
    CHECK((l1 - l2) / std::log(x1 / x2) == doctest::Approx(7.0).epsilon(1e-3));
}

TEST_CASE("characteristic exponents") {
    CHECK(branch_char_exponents(branch(6, {{"3/2", 1}, {"13/6", 1}})) ==
          std::set<Rational>{Rational(3, 2), Rational(13, 6)});
    CHECK(branch_char_exponents(branch(2, {{"5/2", 1}})) == std::set<Rational>{Rational(5, 2)});
    CHECK(branch_char_exponents(branch(1, {{"2", 1}, {"3", 1}})).empty());
    CHECK(branch_char_exponents(branch(4, {{"3/2", 1}, {"7/4", 1}, {"2", 1}})) ==
          std::set<Rational>{Rational(3, 2), Rational(7, 4)});
}

TEST_CASE("coincidence exponents") {
    auto ex = testsupport::fixture_curve("carrousel-example");
    CHECK(coincidence_exponent(ex[0], ex[1]) == Rational(3, 2));
    CHECK(coincidence_exponent(branch(1, {{"2", 1}}), branch(1, {{"2", 1}, {"5", 1}})) == Rational(5));
    CHECK(coincidence_exponent(branch(2, {{"3/2", 1}, {"5/2", 1}}), branch(2, {{"3/2", 1}, {"5/2", 2}})) ==
          Rational(5, 2));
}

TEST_CASE("horn jump profiles") {
    auto q = contact_matrix(testsupport::fixture_curve("carrousel-example"));
    auto s = strands_of(testsupport::fixture_curve("carrousel-example"));
    std::size_t two = 0, six = 0;
    for (std::size_t i = 0; i < s.size(); ++i) (s[i].branch == 1 ? two : six) = i;
    auto p2 = horn_jump_profile(q, two);
    REQUIRE(p2.size() == 2);
    CHECK(p2[0].threshold == Rational(5, 2));
    CHECK(p2[0].count_below == 2);
    CHECK(p2[1].threshold == Rational(3, 2));
    CHECK(p2[1].count_below == 8);
    auto p6 = horn_jump_profile(q, six);
    REQUIRE(p6.size() == 2);
    CHECK(p6[0].threshold == Rational(13, 6));
    CHECK(p6[0].count_below == 3);
    CHECK(p6[1].count_below == 8);
    CHECK(horn_jump_profile(contact_matrix({branch(1, {{"1", 1}})}), 0).empty());
}

TEST_CASE("contact properties on random curves") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 200; ++it) {
        auto c = testsupport::random_curve(rng, 4, 6, 3);
        auto s = strands_of(c);
        auto q = contact_matrix(s);
        CHECK(q.is_ultrametric());
        for (std::size_t j = 0; j < q.size(); ++j)
            for (std::size_t k = 0; k < q.size(); ++k) {
                if (j == k) CHECK(q.at(j, k).is_inf());
                else CHECK(q.at(j, k) >= Extended(Rational(1)));
            }
        // Horn counts grow from 1 to M.
        for (std::size_t b = 0; b < q.size(); ++b) {
            auto prof = horn_jump_profile(q, b);
            std::size_t prev = 1;
            for (const auto& h : prof) {
                CHECK(h.count_below > prev);
                prev = h.count_below;
            }
            CHECK(prev == q.size());
        }
        // Rescaling y and reversing the branch order keep the entry multiset.
        Curve d(c.rbegin(), c.rend());
        for (auto& b : d)
            for (auto& t : b.terms) t.coeff *= Rational(-7, 3);
        auto q2 = contact_matrix(d);
        std::multiset<Extended> e1, e2;
        for (std::size_t j = 0; j < q.size(); ++j)
            for (std::size_t k = 0; k < q.size(); ++k) {
                e1.insert(q.at(j, k));
                e2.insert(q2.at(j, k));
            }
        CHECK(e1 == e2);
    }
}

TEST_CASE("numeric oracle for strand contacts") {
    std::mt19937_64 rng(77);
    // Tiny x keeps the next term's relative size below 1e-4 for denominators <= 6.
    const double xs[] = {1e-24, 1e-30, 1e-36};
    for (int it = 0; it < 60; ++it) {
        auto c = testsupport::random_curve(rng, 3, 6, 3);
        auto s = strands_of(c);
        for (std::size_t j = 0; j < s.size(); ++j)
            for (std::size_t k = j + 1; k < s.size(); ++k) {
                Rational e = strand_contact(s[j], s[k]).value();
                double r[3];
                for (int i = 0; i < 3; ++i)
                    r[i] = std::abs(numeric_difference(c, s[j], s[k], xs[i])) / std::pow(xs[i], e.to_double());
                CHECK(r[0] > 1e-9);
                CHECK(r[1] == doctest::Approx(r[0]).epsilon(0.05));
                CHECK(r[2] == doctest::Approx(r[0]).epsilon(0.05));
            }
    }
}
