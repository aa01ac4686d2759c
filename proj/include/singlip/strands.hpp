#pragma once

#include "singlip/exactnum.hpp"

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace singlip {

struct PuiseuxTerm {
    Rational exp;
    Rational coeff;
};

// y = sum coeff * x^exp, exponents with denominators dividing `denominator`.
struct PuiseuxBranch {
    std::int64_t denominator = 1;
    std::vector<PuiseuxTerm> terms;

    // Throws DomainError describing the first violated invariant.
    void validate() const;
};

using Curve = std::vector<PuiseuxBranch>;

struct StrandTerm {
    Rational exp;
    CyclotomicNumber coeff;
};

struct Strand {
    std::size_t branch = 0;
    std::int64_t twist = 0;
    std::vector<StrandTerm> series;
};

class ContactMatrix {
public:
    ContactMatrix() = default;
    explicit ContactMatrix(std::size_t m) : m_(m), q_(m * m) {}

    std::size_t size() const { return m_; }
    const Extended& at(std::size_t j, std::size_t k) const { return q_[j * m_ + k]; }
    void set(std::size_t j, std::size_t k, Extended v);

    // Distinct finite entries, increasing.
    std::vector<Rational> finite_values() const;
    // Returns the first violating triple (j,k,l) if the ultrametric inequality fails.
    bool is_ultrametric(std::size_t* j = nullptr, std::size_t* k = nullptr,
                        std::size_t* l = nullptr) const;
    ContactMatrix permuted(const std::vector<std::size_t>& perm) const;

    friend bool operator==(const ContactMatrix& a, const ContactMatrix& b) {
        return a.m_ == b.m_ && a.q_ == b.q_;
    }

private:
    std::size_t m_ = 0;
    std::vector<Extended> q_;
};

// Common cyclotomic order of a curve: lcm of the branch denominators.
std::int64_t curve_order(const Curve& curve);

std::vector<Strand> strands_of(const Curve& curve);
Extended strand_contact(const Strand& a, const Strand& b);
ContactMatrix contact_matrix(const Curve& curve);
ContactMatrix contact_matrix(const std::vector<Strand>& strands);
std::set<Rational> branch_char_exponents(const PuiseuxBranch& b);
Rational coincidence_exponent(const PuiseuxBranch& a, const PuiseuxBranch& b);

struct HornJump {
    Rational threshold;
    std::size_t count_below;
};

// Component counts of the horn around strand `base`: 1 above the first
// threshold, then count_below after passing each threshold.
std::vector<HornJump> horn_jump_profile(const ContactMatrix& q, std::size_t base);

}  // namespace singlip
