#include "divseq/rational.hpp"

#include <utility>

namespace divseq {

ExactRational::ExactRational(ExactInt numerator, ExactInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    reduce();
}

void ExactRational::reduce() {
    if (num_.is_zero()) {
        den_ = ExactInt(1);
        return;
    }
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    ExactInt g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
}

const ExactInt& ExactRational::as_integer() const {
    if (!is_integer())
        throw std::domain_error("rational " + to_string() + " is not an integer");
    return num_;
}

ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return ExactRational(a.num_ * b.num_, a.den_ * b.den_);
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.num_.is_zero()) throw std::domain_error("rational division by zero");
    return ExactRational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string ExactRational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace divseq
