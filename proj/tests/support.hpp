#pragma once

#include "singlip/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

namespace testsupport {

inline singlip::json load_fixture_json(const std::string& name) {
    std::ifstream in(std::string(SINGLIP_FIXTURE_DIR) + "/" + name + ".json");
    std::stringstream ss;
    ss << in.rdbuf();
    return singlip::parse_json(ss.str(), name);
}

inline singlip::DualGraph fixture_graph(const std::string& name) {
    return singlip::graph_from_json(load_fixture_json(name));
}

inline singlip::Curve fixture_curve(const std::string& name) {
    return singlip::curve_from_json(load_fixture_json(name));
}

inline singlip::PuiseuxBranch branch(std::int64_t n,
                                     std::initializer_list<std::pair<const char*, long>> terms) {
    singlip::PuiseuxBranch b;
    b.denominator = n;
    for (const auto& [e, c] : terms) b.terms.push_back({singlip::Rational::parse(e), singlip::Rational(c)});
    return b;
}

// Random valid branch: denominator <= max_den, up to max_terms terms with
// exponents in [1, 4], coefficients in [-3, 3] \ {0}.
inline singlip::PuiseuxBranch random_branch(std::mt19937_64& rng, long max_den, int max_terms) {
    std::uniform_int_distribution<long> den(1, max_den), coef(1, 3), sign(0, 1);
    std::uniform_int_distribution<int> count(1, max_terms);
    while (true) {
        long n = den(rng);
        int k = count(rng);
        std::uniform_int_distribution<long> num(n, 4 * n);
        std::vector<long> ms;
        for (int i = 0; i < k; ++i) ms.push_back(num(rng));
        std::sort(ms.begin(), ms.end());
        ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
        long g = n;
        for (long m : ms) g = std::gcd(g, m);
        if (g != 1) continue;
        singlip::PuiseuxBranch b;
        b.denominator = n;
        for (long m : ms) {
            long c = coef(rng) * (sign(rng) ? 1 : -1);
            b.terms.push_back({singlip::Rational(m, n), singlip::Rational(c)});
        }
        return b;
    }
}

inline bool same_strands(const singlip::PuiseuxBranch& a, const singlip::PuiseuxBranch& b) {
    try {
        singlip::strands_of({a, b});
        return false;
    } catch (const singlip::DomainError&) {
        return true;
    }
}

inline singlip::Curve random_curve(std::mt19937_64& rng, int max_branches, long max_den, int max_terms) {
    std::uniform_int_distribution<int> nb(1, max_branches);
    int k = nb(rng);
    singlip::Curve c;
    while (static_cast<int>(c.size()) < k) {
        auto b = random_branch(rng, max_den, max_terms);
        bool dup = false;
        for (const auto& o : c) dup = dup || same_strands(o, b);
        if (!dup) c.push_back(b);
    }
    return c;
}

}  // namespace testsupport
