#pragma once

#include <map>
#include <string>
#include <vector>

#include "divseq/exact_int.hpp"
#include "divseq/numtheory.hpp"

namespace divseq {

/// Dense integer-coefficient polynomial. coefficient(k) is the coefficient
/// of x^k; no trailing zeros are stored. The zero polynomial has degree
/// kZeroPolyDegree, the distinguished "negative infinity" marker.
class IntPolynomial {
public:
    static constexpr int kZeroPolyDegree = -1;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<ExactInt> coefficients);

    static IntPolynomial constant(ExactInt c);
    static IntPolynomial monomial(unsigned degree, ExactInt coefficient = ExactInt(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^k; zero beyond the degree.
    const ExactInt& coefficient(std::size_t k) const;
    const ExactInt& leading() const;
    bool is_monic() const { return !is_zero() && leading().is_one(); }

    ExactInt eval(const ExactInt& x) const;

    /// gcd of the coefficients (non-negative); zero for the zero polynomial.
    ExactInt content() const;
    IntPolynomial primitive_part() const;

    /// "x^4 - x^2 + 1": descending powers, explicit signs, zero terms and
    /// unit coefficients suppressed; "0" for the zero polynomial.
    std::string to_string() const;

    friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
    friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
    friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
    bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }

private:
    void trim();

    std::vector<ExactInt> coeffs_;
};

/// Quotient and remainder of long division in Z[x]. The division is exact
/// when the remainder is zero; otherwise the remainder is the first
/// obstruction (a proper remainder, or the point where a leading
/// coefficient failed to divide).
struct PolyDivision {
    IntPolynomial quotient;
    IntPolynomial remainder;

    bool exact() const { return remainder.is_zero(); }
};

/// Long division of p by q over the integers. Throws on q = 0.
PolyDivision exact_div(const IntPolynomial& p, const IntPolynomial& q);

/// x^n - 1 (the dehomogenized representative of x^n - y^n).
IntPolynomial binomial_xn(Index n);

/// Memo table for cyclotomic polynomials: phi(n) is computed as
/// (x^n - 1) / prod of phi(d) over proper divisors d, all divisions exact.
class CyclotomicCache {
public:
    const IntPolynomial& phi(Index n);

private:
    std::map<Index, IntPolynomial> memo_;
};

/// One-shot cyclotomic polynomial; monic, integer, degree totient(n).
IntPolynomial cyclotomic(Index n);

/// Cross-check route: prod (x^d - 1)^{mu(n/d)} normalized as one exact
/// division of the positive-mu product by the negative-mu product.
IntPolynomial cyclotomic_by_mobius(Index n);

/// Multiplies phi(d) over all d | n and compares with x^n - 1.
bool verify_cyclotomic_product(Index n);

/// Fraction-free (primitive pseudo-remainder) Euclid; result normalized to
/// its primitive part with positive leading coefficient. Content of the
/// inputs is deliberately dropped.
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

/// gcd(x^m - 1, x^n - 1) == x^gcd(m,n) - 1.
bool poly_gcd_identity(Index m, Index n);

enum class WindowMode { division, exponent };

/// Does (x-1)...(x^n-1) divide (x^{m+1}-1)...(x^{m+n}-1)?
/// division mode forms both products and divides; exponent mode checks the
/// floor-exponent multiplicity of each cyclotomic factor instead.
bool window_divisibility_poly(Index m, Index n, WindowMode mode);

}  // namespace divseq
