#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "divseq/charseq.hpp"
#include "divseq/rational.hpp"
#include "divseq/sequence.hpp"

namespace divseq {

/// Operand-growth counters for comparing the quotient and factored routes.
struct OperandStats {
    std::uint64_t multiplications = 0;
    std::uint64_t total_bits = 0;  // sum of result bit lengths
    std::size_t peak_bits = 0;

    void record(const ExactInt& value);
};

/// Raised when an operation needs an integral characteristic entry but the
/// table holds a fraction there; carries the witness.
class nonintegral_error : public std::runtime_error {
public:
    nonintegral_error(Index index, ExactRational witness);
    Index index() const noexcept { return index_; }
    const ExactRational& witness() const noexcept { return witness_; }

private:
    Index index_;
    ExactRational witness_;
};

/// Sparse product prod c_i^{e_i} over a characteristic table. Zero
/// exponents are omitted; every stored index must have an integral entry.
class FactoredProduct {
public:
    FactoredProduct(std::shared_ptr<const CharacteristicTable> base,
                    std::map<Index, std::uint64_t> exponents);

    const std::map<Index, std::uint64_t>& exponents() const { return exponents_; }
    const CharacteristicTable& base_table() const { return *base_; }

    /// Exact expanded value, by binary exponentiation per index.
    ExactInt expand(OperandStats* stats = nullptr) const;

private:
    std::shared_ptr<const CharacteristicTable> base_;
    std::map<Index, std::uint64_t> exponents_;
};

/// floor((m+n)/i) - floor(m/i) - floor(n/i); always 0 or 1.
inline std::int64_t window_exponent(Index i, Index m, Index n) {
    if (i == 0) throw std::domain_error("window_exponent: index starts at 1");
    return static_cast<std::int64_t>((m + n) / i) - static_cast<std::int64_t>(m / i) -
           static_cast<std::int64_t>(n / i);
}

enum class BinomialMethod { quotient, factored };

/// Per-sequence computation context with prefix-product and characteristic
/// caches, so grid sweeps do not recompute shared state. The free functions
/// below wrap a throwaway engine for one-shot calls.
class ProductEngine {
public:
    explicit ProductEngine(SequenceSpec spec);

    const SequenceSpec& spec() const { return spec_; }

    /// P(n) = a_1 ... a_n; empty product is 1.
    ExactInt partial_product(Index n);

    /// P(m, n) = a_{m+1} ... a_{m+n}; equals P(m+n)/P(m) exactly.
    ExactInt window_product(Index m, Index n);

    /// Characteristic table covering at least [1, upto].
    std::shared_ptr<const CharacteristicTable> characteristic_table(Index upto);

    /// Exponent of index i is floor(n/i); expand() equals partial_product(n).
    /// Throws nonintegral_error when some c_i with i <= n is not integral.
    FactoredProduct partial_product_factored(Index n);

    /// P(m+n) / (P(m) P(n)). Both methods return identical values where the
    /// factored method applies; a non-integer result is returned as the
    /// reduced fraction (itself a divisibility counterexample).
    ExactRational generalized_binomial(Index m, Index n, BinomialMethod method,
                                       OperandStats* stats = nullptr);

private:
    // By value: the backing vector grows on demand, so references into it
    // must not escape.
    ExactInt prefix(Index n);

    SequenceSpec spec_;
    TermCache terms_;
    std::vector<ExactInt> prefix_;  // prefix_[k] = P(k)
    std::shared_ptr<const CharacteristicTable> table_;
};

ExactInt partial_product(const SequenceSpec& spec, Index n);
ExactInt window_product(const SequenceSpec& spec, Index m, Index n);
FactoredProduct partial_product_factored(const SequenceSpec& spec, Index n);
ExactRational generalized_binomial(const SequenceSpec& spec, Index m, Index n,
                                   BinomialMethod method, OperandStats* stats = nullptr);

}  // namespace divseq
