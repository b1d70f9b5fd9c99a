#include "divseq/charseq.hpp"

#include <stdexcept>
#include <utility>

#include "divseq/numtheory.hpp"

namespace divseq {

CharacteristicTable::CharacteristicTable(SequenceSpec spec, std::vector<ExactRational> entries)
    : spec_(std::move(spec)), entries_(std::move(entries)) {}

const ExactRational& CharacteristicTable::entry(Index n) const {
    if (n < 1 || n > entries_.size())
        throw std::domain_error("characteristic index " + std::to_string(n) + " out of range");
    return entries_[static_cast<std::size_t>(n - 1)];
}

bool CharacteristicTable::fully_integral() const { return !first_nonintegral().has_value(); }

std::optional<Index> CharacteristicTable::first_nonintegral() const {
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (!entries_[k].is_integer()) return static_cast<Index>(k + 1);
    return std::nullopt;
}

CharacteristicTable extract(const SequenceSpec& spec, Index max_n) {
    if (max_n < 1) throw std::domain_error("extract: need max_n >= 1");
    std::vector<ExactInt> terms = terms_range(spec, 1, max_n);
    std::vector<ExactRational> entries;
    entries.reserve(static_cast<std::size_t>(max_n));
    for (Index n = 1; n <= max_n; ++n) {
        ExactRational proper(1);
        for (Index d : divisors(n)) {
            if (d == n) continue;
            proper *= entries[static_cast<std::size_t>(d - 1)];
        }
        entries.push_back(ExactRational(terms[static_cast<std::size_t>(n - 1)]) / proper);
    }
    return CharacteristicTable(spec, std::move(entries));
}

ExactRational char_term_mobius(const SequenceSpec& spec, Index n) {
    if (n < 1) throw std::domain_error("char_term_mobius: indices start at 1");
    TermCache terms(spec);
    ExactRational result(1);
    for (Index d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu == 0) continue;
        const ExactInt& a_d = terms.at(d);
        if (mu > 0)
            result *= ExactRational(a_d);
        else
            result /= ExactRational(a_d);
    }
    return result;
}

CheckResult verify_reconstruction(const CharacteristicTable& table) {
    if (auto bad = table.first_nonintegral())
        throw std::invalid_argument("verify_reconstruction: non-integral entry at index " +
                                    std::to_string(*bad));
    TermCache terms(table.spec());
    for (Index n = 1; n <= table.size(); ++n) {
        ExactInt product(1);
        for (Index d : divisors(n)) product *= table.entry(d).as_integer();
        if (product != terms.at(n)) return {false, n};
    }
    return {};
}

CheckResult agreement_check(const SequenceSpec& spec, Index max_n) {
    CharacteristicTable table = extract(spec, max_n);
    for (Index n = 1; n <= max_n; ++n) {
        // Rational equality covers the integrality status as well.
        if (!(table.entry(n) == char_term_mobius(spec, n))) return {false, n};
    }
    return {};
}

}  // namespace divseq
