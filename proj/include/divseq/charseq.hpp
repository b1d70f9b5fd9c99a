#pragma once

#include <optional>
#include <vector>

#include "divseq/rational.hpp"
#include "divseq/sequence.hpp"

namespace divseq {

/// Memoized characteristic terms c_1..c_N of a sequence. Entries are exact
/// rationals in lowest terms; a denominator other than 1 is the
/// non-integrality witness for that index (data, not an error: sequences
/// that are divisible but not strong-divisible produce such entries, and
/// the audit harness needs them as counterexamples).
class CharacteristicTable {
public:
    CharacteristicTable(SequenceSpec spec, std::vector<ExactRational> entries);

    const SequenceSpec& spec() const { return spec_; }
    Index size() const { return static_cast<Index>(entries_.size()); }

    /// c_n, 1-based.
    const ExactRational& entry(Index n) const;

    bool fully_integral() const;
    std::optional<Index> first_nonintegral() const;

    bool operator==(const CharacteristicTable& other) const {
        return entries_ == other.entries_;
    }

private:
    SequenceSpec spec_;
    std::vector<ExactRational> entries_;  // entries_[k] = c_{k+1}
};

/// Iterative construction c_n = a_n / prod_{d|n, d<n} c_d in increasing n.
/// By construction prod_{d|n} c_d = a_n holds exactly for every n, whether
/// or not all entries are integral.
CharacteristicTable extract(const SequenceSpec& spec, Index max_n);

/// The closed form prod_{d|n} a_d^{mu(n/d)}, assembled as a reduced
/// fraction (positive-mu factors in the numerator, negative-mu in the
/// denominator, reduced after every multiplication).
ExactRational char_term_mobius(const SequenceSpec& spec, Index n);

/// Boolean verdict plus the smallest failing index when not ok.
struct CheckResult {
    bool ok = true;
    Index first_failure = 0;
};

/// Checks prod_{d|n} c_d = a_n for every n up to the table length.
/// Rejects tables containing non-integral entries.
CheckResult verify_reconstruction(const CharacteristicTable& table);

/// Entry-for-entry comparison of the iterative and Moebius routes,
/// including integrality status.
CheckResult agreement_check(const SequenceSpec& spec, Index max_n);

}  // namespace divseq
