#include "singlip/exactnum.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace singlip {

Rational::Rational(long n, long d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(s), mpz_class(1));
        return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw DomainError("not a rational: '" + s + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw DomainError("rational " + str() + " is not a machine integer");
    return v_.get_num().get_si();
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

const Rational& Extended::value() const {
    if (inf_) throw DomainError("infinite contact has no rational value");
    return v_;
}

// ---- continued fractions ----

Rational PlusContinuedFraction::value() const {
    if (terms.empty()) throw DomainError("empty continued fraction");
    Rational acc(terms.back(), 1);
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it)
        acc = Rational(*it, 1) + Rational(1) / acc;
    return acc;
}

std::string PlusContinuedFraction::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) s += ",";
        s += terms[i].get_str();
    }
    return s + "]";
}

PlusContinuedFraction cf_expand(const Rational& r) {
    if (r.sign() < 0) throw DomainError("continued fraction of negative rational " + r.str());
    PlusContinuedFraction cf;
    Rational x = r;
    while (true) {
        mpz_class a = x.floor();
        cf.terms.push_back(a);
        Rational rest = x - Rational(a, 1);
        if (rest.is_zero()) break;
        x = Rational(1) / rest;
    }
    return cf;
}

std::vector<Rational> cf_approximants(const PlusContinuedFraction& cf) {
    if (cf.terms.empty()) throw DomainError("empty continued fraction");
    std::vector<Rational> out;
    // Convergent recurrence h_k = a_k h_{k-1} + h_{k-2}.
    mpz_class h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    for (const auto& a : cf.terms) {
        mpz_class h = a * h1 + h2, k = a * k1 + k2;
        out.emplace_back(h, k);
        h2 = h1; h1 = h; k2 = k1; k1 = k;
    }
    return out;
}

std::vector<Rational> cf_intermediate_approximants(const PlusContinuedFraction& cf) {
    if (cf.terms.empty()) throw DomainError("empty continued fraction");
    std::vector<Rational> out;
    mpz_class h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    for (const auto& a : cf.terms) {
        for (mpz_class j = 1; j <= a; ++j) out.emplace_back(j * h1 + h2, j * k1 + k2);
        mpz_class h = a * h1 + h2, k = a * k1 + k2;
        h2 = h1; h1 = h; k2 = k1; k1 = k;
    }
    return out;
}

// ---- cyclotomic ----

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw DomainError("euler_phi of non-positive integer");
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

namespace {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact quotient of a by the monic polynomial b.
ZPoly divide_exact(ZPoly a, const ZPoly& b) {
    std::size_t db = b.size() - 1;
    ZPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        mpz_class c = a[i];
        q[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    trim(q);
    return q;
}

std::mutex phi_mutex;
std::map<std::int64_t, ZPoly> phi_cache;

const ZPoly& phi_locked(std::int64_t n) {
    auto it = phi_cache.find(n);
    if (it != phi_cache.end()) return it->second;
    ZPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::int64_t d = 1; d < n; ++d)
        if (n % d == 0) p = divide_exact(p, phi_locked(d));
    return phi_cache.emplace(n, std::move(p)).first->second;
}

// Reduce a rational polynomial modulo the monic integer polynomial m.
std::vector<Rational> reduce_mod(std::vector<Rational> p, const ZPoly& m) {
    std::size_t dm = m.size() - 1;
    for (std::size_t i = p.size(); i-- > dm;) {
        if (p[i].is_zero()) continue;
        Rational c = p[i];
        for (std::size_t j = 0; j <= dm; ++j) p[i - dm + j] -= c * Rational(m[j], 1);
    }
    p.resize(dm, Rational(0));
    return p;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(std::int64_t n) {
    if (n < 1) throw DomainError("cyclotomic polynomial of order < 1");
    std::lock_guard<std::mutex> lock(phi_mutex);
    return phi_locked(n);
}

CyclotomicNumber CyclotomicNumber::from_poly(std::int64_t order, std::vector<Rational> poly) {
    if (order < 1) throw DomainError("cyclotomic order must be >= 1");
    CyclotomicNumber c;
    c.order_ = order;
    c.coeffs_ = reduce_mod(std::move(poly), cyclotomic_polynomial(order));
    return c;
}

CyclotomicNumber CyclotomicNumber::embed(const Rational& r, std::int64_t order) {
    return from_poly(order, {r});
}

CyclotomicNumber CyclotomicNumber::root_of_unity(std::int64_t order, std::int64_t k) {
    if (order < 1) throw DomainError("cyclotomic order must be >= 1");
    std::int64_t e = ((k % order) + order) % order;
    std::vector<Rational> p(e + 1, Rational(0));
    p[e] = Rational(1);
    return from_poly(order, std::move(p));
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

CyclotomicNumber CyclotomicNumber::lift(std::int64_t new_order) const {
    if (new_order % order_ != 0)
        throw DomainError("cannot lift order " + std::to_string(order_) + " to " +
                          std::to_string(new_order));
    std::int64_t step = new_order / order_;
    std::vector<Rational> p(coeffs_.empty() ? 1 : (coeffs_.size() - 1) * step + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
    return from_poly(new_order, std::move(p));
}

void CyclotomicNumber::check_same(const CyclotomicNumber& o) const {
    if (order_ != o.order_)
        throw DomainError("cyclotomic operands of orders " + std::to_string(order_) + " and " +
                          std::to_string(o.order_) + "; lift to the lcm order first");
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    check_same(o);
    CyclotomicNumber r = *this;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
    check_same(o);
    CyclotomicNumber r = *this;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    return r;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    check_same(o);
    std::vector<Rational> p(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) p[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return from_poly(order_, std::move(p));
}

std::string CyclotomicNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[i] << ")";
        if (i) os << "*z" << order_ << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace singlip
