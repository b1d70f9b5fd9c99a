#include "divseq/polynomial.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "divseq/product.hpp"

namespace divseq {

IntPolynomial::IntPolynomial(std::vector<ExactInt> coefficients)
    : coeffs_(std::move(coefficients)) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(ExactInt c) {
    std::vector<ExactInt> v;
    v.push_back(std::move(c));
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::monomial(unsigned degree, ExactInt coefficient) {
    std::vector<ExactInt> v(degree + 1, ExactInt(0));
    v[degree] = std::move(coefficient);
    return IntPolynomial(std::move(v));
}

const ExactInt& IntPolynomial::coefficient(std::size_t k) const {
    static const ExactInt zero(0);
    if (k >= coeffs_.size()) return zero;
    return coeffs_[k];
}

const ExactInt& IntPolynomial::leading() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

ExactInt IntPolynomial::eval(const ExactInt& x) const {
    ExactInt acc(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

ExactInt IntPolynomial::content() const {
    ExactInt g(0);
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    ExactInt g = content();
    std::vector<ExactInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(divexact(c, g));
    return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<ExactInt> out(std::max(p.coeffs_.size(), q.coeffs_.size()), ExactInt(0));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.coefficient(k) + q.coefficient(k);
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<ExactInt> out(std::max(p.coeffs_.size(), q.coeffs_.size()), ExactInt(0));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.coefficient(k) - q.coefficient(k);
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<ExactInt> out(p.coeffs_.size() + q.coeffs_.size() - 1, ExactInt(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
            out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const ExactInt& c = coeffs_[k];
        if (c.is_zero()) continue;
        bool negative = c.is_negative();
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        ExactInt mag = abs(c);
        if (!mag.is_one() || k == 0) out += mag.to_string();
        if (k > 0) {
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

PolyDivision exact_div(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    if (p.degree() < q.degree()) return {IntPolynomial{}, p};
    std::size_t dq = static_cast<std::size_t>(q.degree());
    std::vector<ExactInt> rem;
    rem.reserve(static_cast<std::size_t>(p.degree()) + 1);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(p.degree()); ++k)
        rem.push_back(p.coefficient(k));
    std::vector<ExactInt> quot(rem.size() - dq, ExactInt(0));
    const ExactInt& lead = q.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        ExactInt& cur = rem[k + dq];
        if (cur.is_zero()) continue;
        // If the leading coefficient does not divide here, q cannot divide p
        // in Z[x]; stop and hand back the obstruction.
        if (!divides(lead, cur)) break;
        ExactInt factor = divexact(cur, lead);
        for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= factor * q.coefficient(j);
        quot[k] = std::move(factor);
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial binomial_xn(Index n) {
    if (n < 1) throw std::domain_error("binomial_xn: need n >= 1");
    std::vector<ExactInt> coeffs(static_cast<std::size_t>(n) + 1, ExactInt(0));
    coeffs[0] = ExactInt(-1);
    coeffs[static_cast<std::size_t>(n)] = ExactInt(1);
    return IntPolynomial(std::move(coeffs));
}

const IntPolynomial& CyclotomicCache::phi(Index n) {
    if (n < 1) throw std::domain_error("cyclotomic: need n >= 1");
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    for (Index d : divisors(n)) {
        if (memo_.contains(d)) continue;
        IntPolynomial quotient = binomial_xn(d);
        for (Index e : divisors(d)) {
            if (e == d) continue;
            PolyDivision div = exact_div(quotient, memo_.at(e));
            if (!div.exact())
                throw std::logic_error("cyclotomic: inexact division at n=" + std::to_string(d));
            quotient = std::move(div.quotient);
        }
        memo_.emplace(d, std::move(quotient));
    }
    return memo_.at(n);
}

IntPolynomial cyclotomic(Index n) {
    CyclotomicCache cache;
    return cache.phi(n);
}

IntPolynomial cyclotomic_by_mobius(Index n) {
    if (n < 1) throw std::domain_error("cyclotomic_by_mobius: need n >= 1");
    IntPolynomial numerator = IntPolynomial::constant(ExactInt(1));
    IntPolynomial denominator = IntPolynomial::constant(ExactInt(1));
    for (Index d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu > 0)
            numerator = numerator * binomial_xn(d);
        else if (mu < 0)
            denominator = denominator * binomial_xn(d);
    }
    PolyDivision div = exact_div(numerator, denominator);
    if (!div.exact()) throw std::logic_error("cyclotomic_by_mobius: inexact normalization");
    return div.quotient;
}

bool verify_cyclotomic_product(Index n) {
    CyclotomicCache cache;
    IntPolynomial product = IntPolynomial::constant(ExactInt(1));
    for (Index d : divisors(n)) product = product * cache.phi(d);
    return product == binomial_xn(n);
}

namespace {

// Pseudo-remainder: repeatedly r = lc(b) * r - lc(r) * x^delta * b until
// deg r < deg b. Fraction-free; degree drops every step.
IntPolynomial pseudo_rem(IntPolynomial r, const IntPolynomial& b) {
    const ExactInt& lead_b = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        unsigned delta = static_cast<unsigned>(r.degree() - b.degree());
        IntPolynomial shift = IntPolynomial::monomial(delta, r.leading());
        r = IntPolynomial::constant(lead_b) * r - shift * b;
    }
    return r;
}

IntPolynomial normalize_primitive(const IntPolynomial& p) {
    if (p.is_zero()) return {};
    IntPolynomial pp = p.primitive_part();
    if (pp.leading().is_negative())
        return IntPolynomial::constant(ExactInt(-1)) * pp;
    return pp;
}

}  // namespace

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_rem(std::move(a), b);
        if (!r.is_zero()) r = r.primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return normalize_primitive(a);
}

bool poly_gcd_identity(Index m, Index n) {
    if (m < 1 || n < 1) throw std::domain_error("poly_gcd_identity: need m, n >= 1");
    IntPolynomial g = poly_gcd(binomial_xn(m), binomial_xn(n));
    return g == binomial_xn(std::gcd(m, n));
}

bool window_divisibility_poly(Index m, Index n, WindowMode mode) {
    if (n < 1) throw std::domain_error("window_divisibility_poly: need n >= 1");
    if (mode == WindowMode::exponent) {
        // Multiplicity of phi_d in the quotient is the floor-exponent gap.
        for (Index d = 1; d <= m + n; ++d)
            if (window_exponent(d, m, n) < 0) return false;
        return true;
    }
    IntPolynomial window = IntPolynomial::constant(ExactInt(1));
    for (Index i = m + 1; i <= m + n; ++i) window = window * binomial_xn(i);
    IntPolynomial head = IntPolynomial::constant(ExactInt(1));
    for (Index i = 1; i <= n; ++i) head = head * binomial_xn(i);
    return exact_div(window, head).exact();
}

}  // namespace divseq
