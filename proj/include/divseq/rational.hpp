#pragma once

#include <string>

#include "divseq/exact_int.hpp"

namespace divseq {

/// Exact rational number kept in lowest terms with a positive denominator.
/// Used wherever a quotient may legitimately fail to be an integer — the
/// reduced fraction is then the non-integrality witness.
class ExactRational {
public:
    ExactRational() : num_(0), den_(1) {}
    ExactRational(ExactInt n) : num_(std::move(n)), den_(1) {}
    ExactRational(int n) : num_(n), den_(1) {}
    ExactRational(long n) : num_(n), den_(1) {}
    ExactRational(ExactInt numerator, ExactInt denominator);

    bool is_integer() const { return den_.is_one(); }
    bool is_zero() const { return num_.is_zero(); }

    const ExactInt& numerator() const { return num_; }
    const ExactInt& denominator() const { return den_; }

    /// Integer value; throws std::domain_error for non-integral values.
    const ExactInt& as_integer() const;

    friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b);

    ExactRational& operator*=(const ExactRational& b) { return *this = *this * b; }
    ExactRational& operator/=(const ExactRational& b) { return *this = *this / b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// "p" when integral, "p/q" otherwise.
    std::string to_string() const;

private:
    void reduce();

    ExactInt num_;
    ExactInt den_;
};

}  // namespace divseq
