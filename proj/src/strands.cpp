#include "singlip/strands.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace singlip {

void PuiseuxBranch::validate() const {
    if (denominator < 1) throw DomainError("branch denominator must be positive");
    mpz_class g = denominator;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        if (t.coeff.is_zero()) throw DomainError("term " + std::to_string(i) + " has zero coefficient");
        if (t.exp < Rational(1))
            throw DomainError("term " + std::to_string(i) + " has exponent " + t.exp.str() + " < 1");
        if (i && !(terms[i - 1].exp < t.exp))
            throw DomainError("exponents not strictly increasing at term " + std::to_string(i));
        Rational scaled = t.exp * Rational(denominator);
        if (!scaled.is_integer())
            throw DomainError("exponent " + t.exp.str() + " has denominator not dividing " +
                              std::to_string(denominator));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.num().get_mpz_t());
    }
    if (g != 1)
        throw DomainError("denominator " + std::to_string(denominator) +
                          " is not the minimal common denominator of the exponents");
}

void ContactMatrix::set(std::size_t j, std::size_t k, Extended v) {
    q_[j * m_ + k] = v;
    q_[k * m_ + j] = std::move(v);
}

std::vector<Rational> ContactMatrix::finite_values() const {
    std::set<Rational> s;
    for (const auto& e : q_)
        if (!e.is_inf()) s.insert(e.value());
    return {s.begin(), s.end()};
}

bool ContactMatrix::is_ultrametric(std::size_t* jj, std::size_t* kk, std::size_t* ll) const {
    for (std::size_t j = 0; j < m_; ++j)
        for (std::size_t k = 0; k < m_; ++k)
            for (std::size_t l = 0; l < m_; ++l)
                if (at(j, l) < std::min(at(j, k), at(k, l))) {
                    if (jj) *jj = j;
                    if (kk) *kk = k;
                    if (ll) *ll = l;
                    return false;
                }
    return true;
}

ContactMatrix ContactMatrix::permuted(const std::vector<std::size_t>& perm) const {
    ContactMatrix out(m_);
    for (std::size_t j = 0; j < m_; ++j)
        for (std::size_t k = 0; k < m_; ++k) out.q_[j * m_ + k] = at(perm[j], perm[k]);
    return out;
}

std::int64_t curve_order(const Curve& curve) {
    std::int64_t n = 1;
    for (const auto& b : curve) n = std::lcm(n, b.denominator);
    return n;
}

namespace {

std::vector<Strand> branch_strands(const PuiseuxBranch& b, std::size_t index, std::int64_t order) {
    std::vector<Strand> out;
    std::int64_t n = b.denominator;
    for (std::int64_t j = 0; j < n; ++j) {
        Strand s;
        s.branch = index;
        s.twist = j;
        for (const auto& t : b.terms) {
            std::int64_t m = (t.exp * Rational(n)).to_long();
            // a * zeta_n^{j m} written over zeta_order
            std::int64_t e = ((j * m) % n) * (order / n);
            std::vector<Rational> poly(e + 1, Rational(0));
            poly[e] = t.coeff;
            s.series.push_back({t.exp, CyclotomicNumber::from_poly(order, std::move(poly))});
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

std::vector<Strand> strands_of(const Curve& curve) {
    if (curve.empty()) throw DomainError("curve has no branches");
    for (std::size_t i = 0; i < curve.size(); ++i) {
        try {
            curve[i].validate();
        } catch (const DomainError& e) {
            throw DomainError("branch " + std::to_string(i) + ": " + e.what());
        }
    }
    std::int64_t order = curve_order(curve);
    std::vector<std::vector<Strand>> per_branch;
    for (std::size_t i = 0; i < curve.size(); ++i)
        per_branch.push_back(branch_strands(curve[i], i, order));
    // A branch's strands form one conjugation orbit, so one representative suffices.
    for (std::size_t a = 0; a < curve.size(); ++a)
        for (std::size_t b = a + 1; b < curve.size(); ++b)
            for (const auto& s : per_branch[a])
                if (strand_contact(s, per_branch[b][0]).is_inf())
                    throw DomainError("branches " + std::to_string(a) + " and " +
                                      std::to_string(b) + " are identical");
    std::vector<Strand> out;
    for (auto& v : per_branch)
        for (auto& s : v) out.push_back(std::move(s));
    return out;
}

Extended strand_contact(const Strand& a, const Strand& b) {
    std::size_t i = 0, j = 0;
    while (i < a.series.size() || j < b.series.size()) {
        if (j == b.series.size() || (i < a.series.size() && a.series[i].exp < b.series[j].exp))
            return a.series[i].exp;
        if (i == a.series.size() || b.series[j].exp < a.series[i].exp) return b.series[j].exp;
        if (!(a.series[i].coeff - b.series[j].coeff).is_zero()) return a.series[i].exp;
        ++i;
        ++j;
    }
    return Extended::infinity();
}

ContactMatrix contact_matrix(const std::vector<Strand>& strands) {
    ContactMatrix q(strands.size());
    for (std::size_t j = 0; j < strands.size(); ++j) {
        q.set(j, j, Extended::infinity());
        for (std::size_t k = j + 1; k < strands.size(); ++k)
            q.set(j, k, strand_contact(strands[j], strands[k]));
    }
    return q;
}

ContactMatrix contact_matrix(const Curve& curve) { return contact_matrix(strands_of(curve)); }

std::set<Rational> branch_char_exponents(const PuiseuxBranch& b) {
    b.validate();
    std::set<Rational> out;
    mpz_class lattice = 1;
    for (const auto& t : b.terms) {
        mpz_class d = t.exp.den();
        if (lattice % d != 0) {
            out.insert(t.exp);
            mpz_lcm(lattice.get_mpz_t(), lattice.get_mpz_t(), d.get_mpz_t());
        }
    }
    return out;
}

Rational coincidence_exponent(const PuiseuxBranch& a, const PuiseuxBranch& b) {
    auto strands = strands_of({a, b});
    std::optional<Rational> best;
    for (const auto& s : strands) {
        if (s.branch != 0) continue;
        for (const auto& t : strands) {
            if (t.branch != 1) continue;
            Rational c = strand_contact(s, t).value();
            if (!best || *best < c) best = c;
        }
    }
    return *best;
}

std::vector<HornJump> horn_jump_profile(const ContactMatrix& q, std::size_t base) {
    if (base >= q.size()) throw DomainError("base strand index out of range");
    std::set<Rational> values;
    for (std::size_t k = 0; k < q.size(); ++k)
        if (!q.at(base, k).is_inf()) values.insert(q.at(base, k).value());
    std::vector<HornJump> out;
    for (auto it = values.rbegin(); it != values.rend(); ++it) {
        std::size_t count = 0;
        for (std::size_t k = 0; k < q.size(); ++k)
            if (q.at(base, k) >= Extended(*it)) ++count;
        out.push_back({*it, count});
    }
    return out;
}

}  // namespace singlip
