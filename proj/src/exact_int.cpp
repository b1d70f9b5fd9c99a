#include "divseq/exact_int.hpp"

#include <atomic>
#include <cstdlib>

namespace divseq {

namespace {

constexpr std::size_t kDefaultMaxBits = std::size_t{1} << 20;

std::size_t initial_cap() {
    const char* env = std::getenv("DIVSEQ_MAX_BITS");
    if (env == nullptr || *env == '\0') return kDefaultMaxBits;
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0' || parsed == 0) return kDefaultMaxBits;
    return static_cast<std::size_t>(parsed);
}

std::atomic<std::size_t>& cap_storage() {
    static std::atomic<std::size_t> cap{initial_cap()};
    return cap;
}

}  // namespace

limit_error::limit_error(std::size_t bits, std::size_t cap)
    : std::runtime_error("integer of " + std::to_string(bits) +
                         " bits exceeds the configured cap of " + std::to_string(cap) +
                         " bits (see DIVSEQ_MAX_BITS)"),
      bits_(bits),
      cap_(cap) {}

std::size_t max_bit_length() { return cap_storage().load(std::memory_order_relaxed); }

void set_max_bit_length(std::size_t bits) {
    cap_storage().store(bits, std::memory_order_relaxed);
}

void ExactInt::check_cap() const {
    std::size_t bits = bit_length();
    std::size_t cap = max_bit_length();
    if (bits > cap) throw limit_error(bits, cap);
}

ExactInt::ExactInt(unsigned long n) {
    mpz_set_ui(v_.get_mpz_t(), n);
}

ExactInt::ExactInt(const std::string& decimal) {
    if (decimal.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (decimal[0] == '-' || decimal[0] == '+') ? 1 : 0;
    if (start == decimal.size()) throw std::invalid_argument("sign without digits: " + decimal);
    for (std::size_t i = start; i < decimal.size(); ++i) {
        if (decimal[i] < '0' || decimal[i] > '9')
            throw std::invalid_argument("invalid digit in integer literal: " + decimal);
    }
    v_ = mpz_class(decimal, 10);
    check_cap();
}

unsigned long ExactInt::to_ulong() const {
    if (is_negative() || !v_.fits_ulong_p())
        throw std::domain_error("value does not fit in unsigned long: " + to_string());
    return v_.get_ui();
}

ExactInt operator+(const ExactInt& a, const ExactInt& b) {
    ExactInt r;
    r.v_ = a.v_ + b.v_;
    r.check_cap();
    return r;
}

ExactInt operator-(const ExactInt& a, const ExactInt& b) {
    ExactInt r;
    r.v_ = a.v_ - b.v_;
    r.check_cap();
    return r;
}

ExactInt operator*(const ExactInt& a, const ExactInt& b) {
    ExactInt r;
    r.v_ = a.v_ * b.v_;
    r.check_cap();
    return r;
}

ExactInt ExactInt::operator-() const {
    ExactInt r;
    r.v_ = -v_;
    return r;
}

bool divides(const ExactInt& a, const ExactInt& b) {
    return mpz_divisible_p(b.v_.get_mpz_t(), a.v_.get_mpz_t()) != 0;
}

ExactInt divexact(const ExactInt& n, const ExactInt& d) {
    if (d.is_zero()) throw std::domain_error("divexact: division by zero");
    if (!divides(d, n))
        throw std::domain_error("divexact: " + d.to_string() + " does not divide " + n.to_string());
    ExactInt r;
    mpz_divexact(r.v_.get_mpz_t(), n.v_.get_mpz_t(), d.v_.get_mpz_t());
    return r;
}

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
    ExactInt r;
    mpz_gcd(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return r;
}

ExactInt abs(const ExactInt& a) {
    ExactInt r;
    mpz_abs(r.v_.get_mpz_t(), a.v_.get_mpz_t());
    return r;
}

ExactInt pow(const ExactInt& base, unsigned long exponent) {
    // Reject exponents that would blow past the cap before allocating.
    if (exponent > 0) {
        std::size_t predicted = base.bit_length() * exponent;
        std::size_t cap = max_bit_length();
        if (predicted > cap + 64) throw limit_error(predicted, cap);
    }
    ExactInt r;
    mpz_pow_ui(r.v_.get_mpz_t(), base.v_.get_mpz_t(), exponent);
    r.check_cap();
    return r;
}

}  // namespace divseq
