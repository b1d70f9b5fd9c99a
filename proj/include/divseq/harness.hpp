#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "divseq/sequence.hpp"

namespace divseq {

enum class AuditStatus { holds, violated, skipped };

std::string_view to_string(AuditStatus status);

/// Minimal counterexample as ordered (name, value) pairs — everything
/// needed to recheck the violation by hand.
using Witness = std::vector<std::pair<std::string, std::string>>;

/// Outcome of one claim audit over a finite scan range. A violated report
/// always carries the lexicographically smallest failing tuple of its scan
/// space; a skipped report carries the reason in `detail`.
struct PropertyReport {
    std::string claim_id;
    std::string sub;      // sub-audit label when a claim has several parts
    std::string subject;  // sequence label or function description
    std::string range;
    AuditStatus status = AuditStatus::holds;
    Witness witness;
    std::uint64_t checked_count = 0;
    std::string detail;
};

// --- Individual checks. Scan orders (and hence witness minimality) are
// --- lexicographic over the loop tuples as documented per check.

/// a_k | a_{nk} for all k >= 1, n >= 1 with nk <= max_index; scan (k, n).
PropertyReport check_divisible(const SequenceSpec& spec, Index max_index);

/// gcd(a_m, a_n) = a_gcd(m,n) for 1 <= m <= n <= max_index; scan (m, n).
PropertyReport check_strong_gcd(const SequenceSpec& spec, Index max_index);

/// P(n) | P(m, n) for 1 <= m <= m_max, 1 <= n <= n_max; scan (m, n).
PropertyReport check_humble(const SequenceSpec& spec, Index m_max, Index n_max);

/// gcd(c_d, c_e) = 1 for d | m, e | n over coprime pairs m, n <= max_index;
/// scan (m, n, d, e). Throws std::domain_error unless a_1 = 1.
PropertyReport check_coprime_char(const SequenceSpec& spec, Index max_index);

enum class MultiplicativityMode { weak, strong };

/// Does multiplicativity of F transfer to the characteristic sequence f?
/// Scan space: pairs m < n with m*n <= max_product (coprime pairs only in
/// weak mode). First verifies F itself is multiplicative on those pairs and
/// skips with a status report when it is not.
PropertyReport check_multiplicativity_transfer(const SequenceSpec& F, Index max_product,
                                               MultiplicativityMode mode);

/// The three separately-reported audits over f(n) = prod_{d|n} F(d)^{mu(n/d)}:
///   rad_equal:    rad(m) = rad(n) implies f(m) = f(n)         (scan (m, n))
///   rad_formula:  f(n) = rad(n) for n >= 2                    (scan n)
///   oracle_match: f(n) = prime_power_root(n), or 1            (scan n)
struct RadInvarianceReports {
    PropertyReport rad_equal;
    PropertyReport rad_formula;
    PropertyReport oracle_match;
};

RadInvarianceReports check_rad_invariance(const SequenceSpec& F, Index max_index);

/// Strong-gcd and divisibility audits of lucas(a, b) up to max_index.
/// Rejects gcd(a, b) != 1.
struct LucasGcdReports {
    PropertyReport gcd;
    PropertyReport divisible;
};

LucasGcdReports check_lucas_gcd(Index a, Index b, Index max_index);

/// Existence of an integral {b_i} with a_n = prod_{d|n} b_d, confirmed by
/// extraction and reconstruction. Preconditions (a_1 = 1, strong gcd up to
/// max_index) failing are reported as skipped-with-reason.
PropertyReport iran2001_existence(const SequenceSpec& spec, Index max_index);

// --- Suite-level checks backing the remaining claim ids.

/// Re-extraction from reconstructed values reproduces the table exactly.
PropertyReport check_uniqueness(const SequenceSpec& spec, Index max_n);

/// Strong-gcd gate, then full integrality of c_1..c_max_n.
PropertyReport check_existence(const SequenceSpec& spec, Index max_n);

/// partial_product(n) equals the expanded factored form for n <= max_n.
PropertyReport check_product_form(const SequenceSpec& spec, Index max_n);

/// window_exponent(i, m, n) in {0, 1}, exhaustive triple scan.
PropertyReport check_window_exponent_range(Index i_max, Index m_max, Index n_max);

/// Quotient and factored generalized binomials agree for m + n <= sum_max.
PropertyReport check_binomial_agreement(const SequenceSpec& spec, Index sum_max);

/// c_{p^alpha} = p over the identity sequence, prime powers <= max_n.
PropertyReport check_prime_power_char(Index max_n);

/// prod_{d|n} d^{mu(n/d)} = rad(n) for 2 <= n <= max_n.
PropertyReport check_rad_mobius_formula(Index max_n);

/// poly_gcd_identity(m, n) for all 1 <= m, n <= max_mn.
PropertyReport check_poly_gcd_range(Index max_mn);

/// Polynomial window divisibility: division and exponent modes agree and
/// hold for 0 <= m <= m_max, 1 <= n <= n_max.
PropertyReport check_poly_window_range(Index m_max, Index n_max);

/// binomial(m, n) * P(m) * P(n) = P(m + n) over the identity sequence,
/// multiplication only.
PropertyReport check_factorial_identity(Index max_mn);

/// Generalized binomials of fibonacci are integers for m, n in the grid.
PropertyReport check_fibonomial_integrality(Index m_max, Index n_max);

// --- Audit plans.

/// One schedulable audit producing one report. `expected_status` pins the
/// known outcome: refuted claims ship expecting `violated` with an exact
/// witness, so an audit run distinguishes expected refutations from
/// regressions.
struct AuditCell {
    std::string claim_id;
    std::string sub;
    std::string subject;
    std::function<PropertyReport()> run;
    AuditStatus expected_status = AuditStatus::holds;
    Witness expected_witness;
};

/// The six bundled sequences: id, fib, lucas(1,2), lucas(2,1),
/// mersenne(2), mersenne(3).
const std::vector<SequenceSpec>& bundled_specs();

/// The documented claim ids, in report order.
const std::vector<std::string>& known_claim_ids();

/// Full default suite over the bundled sequences with per-family bounds.
std::vector<AuditCell> default_audit_plan();

/// Cells for one claim. `specs` empty selects the claim's default
/// sequences; `max_override` rescales the scan bound where applicable.
/// Throws std::invalid_argument for unknown claim ids.
std::vector<AuditCell> claim_plan(const std::string& claim_id,
                                  const std::vector<SequenceSpec>& specs,
                                  std::optional<Index> max_override);

struct SuiteResult {
    std::vector<PropertyReport> reports;
    bool all_expected = true;
};

/// Runs every cell (in parallel when jobs > 1) and emits reports in plan
/// order, so output is byte-deterministic regardless of the worker count.
/// A cell that throws becomes a skipped report carrying the error text.
SuiteResult run_audit_suite(std::vector<AuditCell> plan, unsigned jobs = 1);

/// Does a report match its cell's pinned expectation? Violations must
/// reproduce the exact witness; a precondition skip is acceptable wherever
/// `holds` was expected.
bool matches_expectation(const PropertyReport& report, const AuditCell& cell);

}  // namespace divseq
