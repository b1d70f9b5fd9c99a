#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "divseq/charseq.hpp"
#include "divseq/harness.hpp"
#include "divseq/report_json.hpp"
#include "divseq/sequence.hpp"

using namespace divseq;

namespace {

SequenceSpec bad_table() {
    return SequenceSpec::table({ExactInt(1), ExactInt(2), ExactInt(3), ExactInt(5)}, "table:bad");
}

// phi(1..20); a weakly multiplicative function that is not its own
// characteristic sequence.
SequenceSpec phi_table() {
    std::vector<long> phi = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 8, 8, 16, 6, 18, 8};
    std::vector<ExactInt> values;
    for (long v : phi) values.push_back(ExactInt(v));
    return SequenceSpec::table(std::move(values), "table:phi20");
}

std::string witness_value(const PropertyReport& r, const std::string& key) {
    for (const auto& [k, v] : r.witness)
        if (k == key) return v;
    return {};
}

}  // namespace

TEST_CASE("check_divisible holds for divisible families") {
    CHECK(check_divisible(SequenceSpec::fibonacci(), 200).status == AuditStatus::holds);
    CHECK(check_divisible(SequenceSpec::mersenne(2), 200).status == AuditStatus::holds);
}

TEST_CASE("check_divisible finds the minimal fault in a constructed table") {
    PropertyReport r = check_divisible(bad_table(), 4);
    REQUIRE(r.status == AuditStatus::violated);
    CHECK(witness_value(r, "k") == "2");
    CHECK(witness_value(r, "n") == "2");
    CHECK(witness_value(r, "a_k") == "2");
    CHECK(witness_value(r, "a_nk") == "5");

    // Self-validation: the witness re-fails the predicate in isolation.
    CHECK_FALSE(divides(term(bad_table(), 2), term(bad_table(), 4)));

    // Minimality: exhaustive rescan below the witness tuple.
    for (Index k = 1; k <= 4; ++k)
        for (Index n = 1; n * k <= 4; ++n) {
            if (std::make_pair(k, n) >= std::make_pair(Index{2}, Index{2})) continue;
            CHECK(divides(term(bad_table(), k), term(bad_table(), n * k)));
        }
}

TEST_CASE("check_strong_gcd holds and includes the classic spot value") {
    PropertyReport r = check_strong_gcd(SequenceSpec::fibonacci(), 150);
    CHECK(r.status == AuditStatus::holds);
    CHECK(r.checked_count == 150 * 151 / 2);
    // gcd(F_12, F_18) = 8 = F_6
    ExactInt f12 = term(SequenceSpec::fibonacci(), 12);
    ExactInt f18 = term(SequenceSpec::fibonacci(), 18);
    CHECK(gcd(f12, f18) == ExactInt(8));
    CHECK(term(SequenceSpec::fibonacci(), 6) == ExactInt(8));
    CHECK(check_strong_gcd(SequenceSpec::identity(), 300).status == AuditStatus::holds);
    CHECK(check_strong_gcd(SequenceSpec::mersenne(2), 100).status == AuditStatus::holds);
}

TEST_CASE("check_strong_gcd minimal witness on a constructed fault") {
    PropertyReport r = check_strong_gcd(bad_table(), 4);
    REQUIRE(r.status == AuditStatus::violated);
    CHECK(witness_value(r, "m") == "2");
    CHECK(witness_value(r, "n") == "4");
    CHECK(witness_value(r, "gcd") == "1");
    CHECK(witness_value(r, "a_gcd_mn") == "2");
}

TEST_CASE("check_humble holds on identity and fibonacci") {
    CHECK(check_humble(SequenceSpec::identity(), 20, 20).status == AuditStatus::holds);
    CHECK(check_humble(SequenceSpec::fibonacci(), 15, 15).status == AuditStatus::holds);
}

TEST_CASE("check_humble minimal witness on a constructed fault") {
    PropertyReport r = check_humble(bad_table(), 2, 2);
    REQUIRE(r.status == AuditStatus::violated);
    CHECK(witness_value(r, "m") == "2");
    CHECK(witness_value(r, "n") == "2");
    CHECK(witness_value(r, "P_n") == "2");
    CHECK(witness_value(r, "P_m_n") == "15");
}

TEST_CASE("check_coprime_char holds where a_1 = 1") {
    CHECK(check_coprime_char(SequenceSpec::fibonacci(), 60).status == AuditStatus::holds);
    CHECK(check_coprime_char(SequenceSpec::identity(), 100).status == AuditStatus::holds);
    CHECK_THROWS_AS(check_coprime_char(SequenceSpec::mersenne(3), 20), std::domain_error);
}

TEST_CASE("multiplicativity transfer is refuted on the identity sequence") {
    for (auto mode : {MultiplicativityMode::strong, MultiplicativityMode::weak}) {
        PropertyReport r = check_multiplicativity_transfer(SequenceSpec::identity(), 50, mode);
        REQUIRE(r.status == AuditStatus::violated);
        CHECK(witness_value(r, "m") == "2");
        CHECK(witness_value(r, "n") == "3");
        CHECK(witness_value(r, "f_mn") == "1");
        CHECK(witness_value(r, "f_m_times_f_n") == "6");
    }
    // Self-validation of the witness against the extraction oracle.
    CharacteristicTable t = extract(SequenceSpec::identity(), 6);
    CHECK(t.entry(6) == ExactRational(ExactInt(1)));
    CHECK(t.entry(2) * t.entry(3) == ExactRational(ExactInt(6)));
}

TEST_CASE("multiplicativity transfer skips when the premise fails") {
    PropertyReport r = check_multiplicativity_transfer(SequenceSpec::fibonacci(), 30,
                                                       MultiplicativityMode::weak);
    CHECK(r.status == AuditStatus::skipped);
    CHECK(r.detail.find("premise") != std::string::npos);
}

TEST_CASE("multiplicativity transfer on the totient table") {
    // phi is weakly multiplicative, its characteristic sequence is not:
    // f(6) = 1 while f(2) f(3) = 1 * 2 = 2.
    PropertyReport r =
        check_multiplicativity_transfer(phi_table(), 20, MultiplicativityMode::weak);
    REQUIRE(r.status == AuditStatus::violated);
    CHECK(witness_value(r, "m") == "2");
    CHECK(witness_value(r, "n") == "3");
    CHECK(witness_value(r, "f_mn") == "1");
    CHECK(witness_value(r, "f_m_times_f_n") == "2");
}

TEST_CASE("rad invariance sub-audits on the identity sequence") {
    RadInvarianceReports rr = check_rad_invariance(SequenceSpec::identity(), 2000);
    CHECK(rr.rad_equal.status == AuditStatus::holds);
    CHECK(rr.rad_equal.checked_count > 0);

    REQUIRE(rr.rad_formula.status == AuditStatus::violated);
    CHECK(witness_value(rr.rad_formula, "n") == "6");
    CHECK(witness_value(rr.rad_formula, "f_n") == "1");
    CHECK(witness_value(rr.rad_formula, "rad_n") == "6");
    // Minimality: every n below the witness satisfies the formula.
    for (Index n = 2; n < 6; ++n)
        CHECK(char_term_mobius(SequenceSpec::identity(), n) ==
              ExactRational(ExactInt(static_cast<long>(radical(n)))));

    CHECK(rr.oracle_match.status == AuditStatus::holds);
}

TEST_CASE("lucas gcd wrapper") {
    LucasGcdReports r = check_lucas_gcd(1, 1, 100);
    CHECK(r.gcd.status == AuditStatus::holds);
    CHECK(r.divisible.status == AuditStatus::holds);
    LucasGcdReports r12 = check_lucas_gcd(1, 2, 80);
    CHECK(r12.gcd.status == AuditStatus::holds);
    CHECK(r12.divisible.status == AuditStatus::holds);
    CHECK_THROWS_AS(check_lucas_gcd(2, 4, 10), std::invalid_argument);
}

TEST_CASE("iran2001 existence") {
    CHECK(iran2001_existence(SequenceSpec::fibonacci(), 60).status == AuditStatus::holds);
    CHECK(iran2001_existence(SequenceSpec::identity(), 100).status == AuditStatus::holds);
    CHECK(iran2001_existence(SequenceSpec::mersenne(2), 60).status == AuditStatus::holds);
    // Preconditions failing are skips, not violations.
    CHECK(iran2001_existence(bad_table(), 4).status == AuditStatus::skipped);
    SequenceSpec a1_not_1 = SequenceSpec::table({ExactInt(2), ExactInt(4)});
    CHECK(iran2001_existence(a1_not_1, 2).status == AuditStatus::skipped);
}

TEST_CASE("uniqueness and existence suite checks") {
    CHECK(check_uniqueness(SequenceSpec::fibonacci(), 60).status == AuditStatus::holds);
    CHECK(check_existence(SequenceSpec::mersenne(3), 60).status == AuditStatus::holds);
    CHECK(check_existence(bad_table(), 4).status == AuditStatus::skipped);
}

TEST_CASE("product form and binomial agreement suite checks") {
    CHECK(check_product_form(SequenceSpec::lucas(2, 1), 40).status == AuditStatus::holds);
    CHECK(check_binomial_agreement(SequenceSpec::lucas(1, 2), 40).status == AuditStatus::holds);
    CHECK(check_binomial_agreement(bad_table(), 4).status == AuditStatus::skipped);
}

TEST_CASE("window exponent range, small grid") {
    PropertyReport r = check_window_exponent_range(50, 50, 50);
    CHECK(r.status == AuditStatus::holds);
    CHECK(r.checked_count == 50 * 51 * 51);
}

TEST_CASE("remaining claim checks hold on reduced grids") {
    CHECK(check_prime_power_char(2000).status == AuditStatus::holds);
    PropertyReport cerad = check_rad_mobius_formula(2000);
    REQUIRE(cerad.status == AuditStatus::violated);
    CHECK(witness_value(cerad, "n") == "6");
    CHECK(witness_value(cerad, "product") == "1");
    CHECK(check_poly_gcd_range(20).status == AuditStatus::holds);
    CHECK(check_poly_window_range(8, 5).status == AuditStatus::holds);
    CHECK(check_factorial_identity(12).status == AuditStatus::holds);
    CHECK(check_fibonomial_integrality(15, 15).status == AuditStatus::holds);
}

TEST_CASE("claim_plan validates ids and stamps expectations") {
    CHECK_THROWS_AS(claim_plan("no-such-claim", {}, std::nullopt), std::invalid_argument);
    std::vector<AuditCell> plan = claim_plan("s3-rad", {}, Index{100});
    REQUIRE(plan.size() == 2);
    CHECK(plan[0].claim_id == "s3-rad");
    CHECK(plan[0].sub == "b");
    CHECK(plan[0].expected_status == AuditStatus::violated);
    CHECK(plan[1].sub == "c");
    CHECK(plan[1].expected_status == AuditStatus::holds);
    CHECK_THROWS_AS(claim_plan("pr-lucas-gcd", {SequenceSpec::identity()}, std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("default plan covers every documented claim, sorted") {
    std::vector<AuditCell> plan = default_audit_plan();
    for (const auto& id : known_claim_ids()) {
        bool found = false;
        for (const auto& cell : plan) found = found || cell.claim_id == id;
        CHECK_MESSAGE(found, id);
    }
    for (std::size_t k = 1; k < plan.size(); ++k) {
        auto key = [](const AuditCell& c) { return std::tie(c.claim_id, c.sub, c.subject); };
        CHECK(key(plan[k - 1]) <= key(plan[k]));
    }
}

TEST_CASE("suite runs are deterministic across worker counts") {
    std::vector<AuditCell> plan = claim_plan("thm2-gcd", {SequenceSpec::fibonacci()}, Index{60});
    for (auto& cell : claim_plan("s3-cerad", {}, Index{500})) plan.push_back(cell);
    for (auto& cell : claim_plan("thm7-mobius", {SequenceSpec::mersenne(2)}, Index{80}))
        plan.push_back(cell);

    SuiteResult serial = run_audit_suite(plan, 1);
    SuiteResult parallel = run_audit_suite(plan, 3);
    CHECK(serial.all_expected);
    CHECK(parallel.all_expected);
    CHECK(reports_to_json_lines(serial.reports) == reports_to_json_lines(parallel.reports));
}

TEST_CASE("empty plan yields no reports") {
    SuiteResult r = run_audit_suite({}, 2);
    CHECK(r.reports.empty());
    CHECK(r.all_expected);
}

TEST_CASE("unexpected violations flip the suite verdict") {
    std::vector<AuditCell> plan =
        claim_plan("thm2-gcd", {bad_table()}, Index{4});
    SuiteResult r = run_audit_suite(plan, 1);
    CHECK_FALSE(r.all_expected);
    // The run aggregates rather than aborting: every cell reported.
    CHECK(r.reports.size() == plan.size());
}

TEST_CASE("identity audits hold up to 300") {
    CHECK(check_strong_gcd(SequenceSpec::identity(), 300).status == AuditStatus::holds);
    CHECK(check_humble(SequenceSpec::identity(), 300, 300).status == AuditStatus::holds);
    CHECK(check_coprime_char(SequenceSpec::identity(), 300).status == AuditStatus::holds);
    CHECK(iran2001_existence(SequenceSpec::identity(), 300).status == AuditStatus::holds);
}

TEST_CASE("implication: strong gcd up to M forces divisibility up to M") {
    for (const auto& spec : bundled_specs()) {
        Index m = 80;
        if (check_strong_gcd(spec, m).status == AuditStatus::holds)
            CHECK(check_divisible(spec, m).status == AuditStatus::holds);
    }
}

TEST_CASE("report serialization shapes") {
    PropertyReport r = check_rad_mobius_formula(10);
    auto j = report_to_json(r);
    CHECK(j["claim_id"].is_string());
    CHECK(j["status"] == "violated");
    CHECK(j["witness"]["n"] == "6");
    CHECK(j["checked_count"] == 5);
    std::string csv = report_to_csv_row(r);
    CHECK(csv.find("\"violated\"") != std::string::npos);
    CHECK(csv.find("n=6;product=1;rad_n=6") != std::string::npos);
    std::string plain = report_to_plain(r);
    CHECK(plain.find("violated") != std::string::npos);
}
