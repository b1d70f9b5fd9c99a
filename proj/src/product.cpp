#include "divseq/product.hpp"

#include <stdexcept>
#include <utility>

namespace divseq {

void OperandStats::record(const ExactInt& value) {
    ++multiplications;
    std::size_t bits = value.bit_length();
    total_bits += bits;
    if (bits > peak_bits) peak_bits = bits;
}

nonintegral_error::nonintegral_error(Index index, ExactRational witness)
    : std::runtime_error("characteristic entry c_" + std::to_string(index) +
                         " is not integral: " + witness.to_string()),
      index_(index),
      witness_(std::move(witness)) {}

FactoredProduct::FactoredProduct(std::shared_ptr<const CharacteristicTable> base,
                                 std::map<Index, std::uint64_t> exponents)
    : base_(std::move(base)), exponents_(std::move(exponents)) {
    for (auto it = exponents_.begin(); it != exponents_.end();) {
        if (it->second == 0) {
            it = exponents_.erase(it);
            continue;
        }
        const ExactRational& c = base_->entry(it->first);
        if (!c.is_integer()) throw nonintegral_error(it->first, c);
        ++it;
    }
}

ExactInt FactoredProduct::expand(OperandStats* stats) const {
    ExactInt result(1);
    for (const auto& [i, e] : exponents_) {
        ExactInt power = pow(base_->entry(i).as_integer(), static_cast<unsigned long>(e));
        if (stats) stats->record(power);
        result *= power;
        if (stats) stats->record(result);
    }
    return result;
}

ProductEngine::ProductEngine(SequenceSpec spec)
    : spec_(spec), terms_(spec), prefix_{ExactInt(1)} {}

ExactInt ProductEngine::prefix(Index n) {
    while (prefix_.size() <= n)
        prefix_.push_back(prefix_.back() * terms_.at(static_cast<Index>(prefix_.size())));
    return prefix_[static_cast<std::size_t>(n)];
}

ExactInt ProductEngine::partial_product(Index n) { return prefix(n); }

ExactInt ProductEngine::window_product(Index m, Index n) {
    if (n == 0) return ExactInt(1);
    return divexact(prefix(m + n), prefix(m));
}

std::shared_ptr<const CharacteristicTable> ProductEngine::characteristic_table(Index upto) {
    if (!table_ || table_->size() < upto)
        table_ = std::make_shared<const CharacteristicTable>(extract(spec_, upto));
    return table_;
}

FactoredProduct ProductEngine::partial_product_factored(Index n) {
    if (n < 1) throw std::domain_error("partial_product_factored: need n >= 1");
    auto table = characteristic_table(n);
    std::map<Index, std::uint64_t> exps;
    for (Index i = 1; i <= n; ++i) {
        const ExactRational& c = table->entry(i);
        if (!c.is_integer()) throw nonintegral_error(i, c);
        exps[i] = n / i;
    }
    return FactoredProduct(std::move(table), std::move(exps));
}

ExactRational ProductEngine::generalized_binomial(Index m, Index n, BinomialMethod method,
                                                  OperandStats* stats) {
    if (method == BinomialMethod::factored) {
        if (m + n == 0) return ExactRational(1);
        auto table = characteristic_table(m + n);
        std::map<Index, std::uint64_t> exps;
        for (Index i = 1; i <= m + n; ++i) {
            const ExactRational& c = table->entry(i);
            if (!c.is_integer()) throw nonintegral_error(i, c);
            std::int64_t e = window_exponent(i, m, n);
            if (e > 0) exps[i] = static_cast<std::uint64_t>(e);
        }
        return ExactRational(FactoredProduct(std::move(table), std::move(exps)).expand(stats));
    }
    if (stats) {
        // Fresh products so the counters reflect the quotient route itself
        // rather than cache state.
        ExactInt num(1);
        for (Index i = 1; i <= m + n; ++i) {
            num *= terms_.at(i);
            stats->record(num);
        }
        ExactInt den(1);
        for (Index i = 1; i <= m; ++i) {
            den *= terms_.at(i);
            stats->record(den);
        }
        ExactInt den2(1);
        for (Index i = 1; i <= n; ++i) {
            den2 *= terms_.at(i);
            stats->record(den2);
        }
        den *= den2;
        stats->record(den);
        return ExactRational(std::move(num), std::move(den));
    }
    return ExactRational(prefix(m + n), prefix(m) * prefix(n));
}

ExactInt partial_product(const SequenceSpec& spec, Index n) {
    return ProductEngine(spec).partial_product(n);
}

ExactInt window_product(const SequenceSpec& spec, Index m, Index n) {
    return ProductEngine(spec).window_product(m, n);
}

FactoredProduct partial_product_factored(const SequenceSpec& spec, Index n) {
    return ProductEngine(spec).partial_product_factored(n);
}

ExactRational generalized_binomial(const SequenceSpec& spec, Index m, Index n,
                                   BinomialMethod method, OperandStats* stats) {
    return ProductEngine(spec).generalized_binomial(m, n, method, stats);
}

}  // namespace divseq
