#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace singlip {

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(n) {}   // NOLINT(google-explicit-constructor)
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational parse(const std::string& s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    mpz_class floor() const;
    long to_long() const;  // throws unless integral and fits
    double to_double() const { return v_.get_d(); }
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// A rational or +infinity; used for contact orders.
class Extended {
public:
    Extended() : inf_(true) {}
    Extended(Rational v) : inf_(false), v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    static Extended infinity() { return Extended(); }

    bool is_inf() const { return inf_; }
    const Rational& value() const;
    std::string str() const { return inf_ ? "inf" : v_.str(); }

    friend bool operator==(const Extended& a, const Extended& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
        if (a.inf_ && b.inf_) return std::strong_ordering::equal;
        if (a.inf_) return std::strong_ordering::greater;
        if (b.inf_) return std::strong_ordering::less;
        return a.v_ <=> b.v_;
    }

private:
    bool inf_;
    Rational v_;
};

// ---- plus continued fractions ----

// [a1, ..., ar] with value a1 + 1/(a2 + 1/(...)); a1 >= 0, later terms >= 1,
// last term >= 2 whenever r >= 2.
struct PlusContinuedFraction {
    std::vector<mpz_class> terms;

    Rational value() const;
    std::string str() const;
};

PlusContinuedFraction cf_expand(const Rational& r);
std::vector<Rational> cf_approximants(const PlusContinuedFraction& cf);
// Values of [a1..a_{k-1}, j] for every k and 1 <= j <= a_k: one entry per
// blow-up when resolving y = x^r, in creation order.
std::vector<Rational> cf_intermediate_approximants(const PlusContinuedFraction& cf);

// ---- cyclotomic fields ----

std::int64_t euler_phi(std::int64_t n);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
const std::vector<mpz_class>& cyclotomic_polynomial(std::int64_t n);

// Element of Q(zeta_N) stored as a polynomial in zeta_N of degree < phi(N).
class CyclotomicNumber {
public:
    CyclotomicNumber() : order_(1), coeffs_{Rational(0)} {}

    static CyclotomicNumber embed(const Rational& r, std::int64_t order);
    static CyclotomicNumber root_of_unity(std::int64_t order, std::int64_t k);
    // Coefficients are reduced on construction.
    static CyclotomicNumber from_poly(std::int64_t order, std::vector<Rational> poly);

    std::int64_t order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    // Re-express in Q(zeta_M) for a multiple M of the current order.
    CyclotomicNumber lift(std::int64_t new_order) const;

    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-() const;
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return (a - b).is_zero();
    }

    std::string str() const;

private:
    void check_same(const CyclotomicNumber& o) const;
    std::int64_t order_;
    std::vector<Rational> coeffs_;
};

}  // namespace singlip
