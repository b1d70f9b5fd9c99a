#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "divseq/exact_int.hpp"
#include "divseq/numtheory.hpp"

namespace divseq {

enum class SequenceFamily { identity, fibonacci, lucas, mersenne, table };

/// Parse or constraint failure for the sequence-spec grammar; position is a
/// byte offset into the offending text (npos for pure constraint errors).
class spec_error : public std::runtime_error {
public:
    spec_error(const std::string& message, std::size_t position = std::string::npos);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Immutable description of a sequence family, indexed from 1.
///
/// identity:   a_n = n
/// fibonacci:  a_1 = a_2 = 1, a_n = a_{n-1} + a_{n-2}
/// lucas(a,b): a_1 = 1, a_2 = a, a_n = a*a_{n-1} + b*a_{n-2}; gcd(a,b) = 1
/// mersenne(x): a_n = x^n - 1, x >= 2
/// table:      explicit values, all >= 1
class SequenceSpec {
public:
    static SequenceSpec identity();
    static SequenceSpec fibonacci();
    static SequenceSpec lucas(Index a, Index b);
    static SequenceSpec mersenne(Index x);
    static SequenceSpec table(std::vector<ExactInt> values, std::string label = "table");

    SequenceFamily family() const { return family_; }
    Index lucas_a() const { return a_; }
    Index lucas_b() const { return b_; }
    Index mersenne_x() const { return x_; }
    const std::vector<ExactInt>& table_values() const { return table_; }

    /// Canonical text form, e.g. "fib", "lucas:a=1,b=2"; used in reports.
    const std::string& label() const { return label_; }

    bool operator==(const SequenceSpec& other) const;

private:
    SequenceSpec() = default;

    SequenceFamily family_ = SequenceFamily::identity;
    Index a_ = 0;
    Index b_ = 0;
    Index x_ = 0;
    std::vector<ExactInt> table_;
    std::string label_;
};

/// Grammar: "id" | "fib" | "lucas:a=<int>,b=<int>" | "mersenne:x=<int>"
///        | "table:<path>" (one positive decimal per line, line k = a_k).
SequenceSpec parse_spec(const std::string& text);

/// Exact n-th term, n >= 1. Throws std::domain_error for index 0 or past
/// the end of a table-backed sequence.
ExactInt term(const SequenceSpec& spec, Index n);

/// [a_lo, ..., a_hi] computed in one forward pass.
std::vector<ExactInt> terms_range(const SequenceSpec& spec, Index lo, Index hi);

/// Growable forward-recurrence term cache. Owned by a single computation
/// context; SequenceSpec itself stays immutable and shareable.
class TermCache {
public:
    explicit TermCache(SequenceSpec spec);

    const ExactInt& at(Index n);
    void ensure(Index n);
    const SequenceSpec& spec() const { return spec_; }

private:
    SequenceSpec spec_;
    std::vector<ExactInt> terms_;  // terms_[k] = a_{k+1}
};

}  // namespace divseq
