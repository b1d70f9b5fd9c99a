#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace divseq {

/// Thrown when a computed value would exceed the configured bit-length cap.
/// The cap exists to turn runaway products into a clean failure instead of
/// an out-of-memory condition.
class limit_error : public std::runtime_error {
public:
    limit_error(std::size_t bits, std::size_t cap);
    std::size_t bits() const noexcept { return bits_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t bits_;
    std::size_t cap_;
};

/// Current cap on the bit length of any single ExactInt. Initialised once
/// from the DIVSEQ_MAX_BITS environment variable; defaults to 2^20.
std::size_t max_bit_length();

/// Override the cap for the current process (used by tests and embedders).
void set_max_bit_length(std::size_t bits);

/// Arbitrary-precision signed integer. Every operation is exact; there is
/// no division operator on purpose — callers must go through divexact or
/// ExactRational so that inexact division can never slip through silently.
class ExactInt {
public:
    ExactInt() : v_(0) {}
    ExactInt(int n) : v_(n) {}
    ExactInt(long n) : v_(n) {}
    ExactInt(unsigned long n);
    explicit ExactInt(const std::string& decimal);

    bool is_zero() const { return mpz_sgn(v_.get_mpz_t()) == 0; }
    bool is_one() const { return mpz_cmp_ui(v_.get_mpz_t(), 1) == 0; }
    bool is_negative() const { return mpz_sgn(v_.get_mpz_t()) < 0; }
    int sign() const { return mpz_sgn(v_.get_mpz_t()); }

    /// Number of bits in the absolute value; 1 for zero (GMP convention).
    std::size_t bit_length() const { return mpz_sizeinbase(v_.get_mpz_t(), 2); }

    std::string to_string() const { return v_.get_str(); }

    /// Value as unsigned long; throws if negative or too large.
    unsigned long to_ulong() const;

    friend ExactInt operator+(const ExactInt& a, const ExactInt& b);
    friend ExactInt operator-(const ExactInt& a, const ExactInt& b);
    friend ExactInt operator*(const ExactInt& a, const ExactInt& b);
    ExactInt operator-() const;

    ExactInt& operator+=(const ExactInt& b) { return *this = *this + b; }
    ExactInt& operator-=(const ExactInt& b) { return *this = *this - b; }
    ExactInt& operator*=(const ExactInt& b) { return *this = *this * b; }

    friend bool operator==(const ExactInt& a, const ExactInt& b) {
        return mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t()) == 0;
    }
    friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
        int c = mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return c <=> 0;
    }

    /// True iff a divides b (everything divides zero, only zero divides zero).
    friend bool divides(const ExactInt& a, const ExactInt& b);

    /// Exact quotient n / d; throws std::domain_error when d is zero or the
    /// division leaves a remainder.
    friend ExactInt divexact(const ExactInt& n, const ExactInt& d);

    friend ExactInt gcd(const ExactInt& a, const ExactInt& b);
    friend ExactInt abs(const ExactInt& a);
    friend ExactInt pow(const ExactInt& base, unsigned long exponent);

private:
    void check_cap() const;

    mpz_class v_;
};

}  // namespace divseq
