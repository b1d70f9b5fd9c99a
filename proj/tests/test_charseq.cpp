#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "divseq/charseq.hpp"
#include "divseq/numtheory.hpp"

using namespace divseq;

TEST_CASE("identity extraction frozen prefix") {
    CharacteristicTable t = extract(SequenceSpec::identity(), 8);
    std::vector<long> expected = {1, 2, 3, 2, 5, 1, 7, 2};
    for (Index n = 1; n <= 8; ++n)
        CHECK(t.entry(n) == ExactRational(ExactInt(expected[static_cast<std::size_t>(n - 1)])));
    CHECK(t.fully_integral());
}

TEST_CASE("fibonacci extraction frozen values") {
    CharacteristicTable t = extract(SequenceSpec::fibonacci(), 12);
    // 144 / (c_1 c_2 c_3 c_4 c_6) with c_6 = 8/2 = 4.
    CHECK(t.entry(6) == ExactRational(ExactInt(4)));
    CHECK(t.entry(12) == ExactRational(ExactInt(6)));
}

TEST_CASE("c_1 equals a_1 even when a_1 is not 1") {
    SequenceSpec t = SequenceSpec::table({ExactInt(3), ExactInt(6)});
    CharacteristicTable table = extract(t, 2);
    CHECK(table.entry(1) == ExactRational(ExactInt(3)));
    CHECK(table.entry(2) == ExactRational(ExactInt(2)));
}

TEST_CASE("char_term_mobius frozen examples") {
    CHECK(char_term_mobius(SequenceSpec::identity(), 6) == ExactRational(ExactInt(1)));
    CHECK(char_term_mobius(SequenceSpec::fibonacci(), 4) == ExactRational(ExactInt(3)));
    CHECK(char_term_mobius(SequenceSpec::identity(), 1) == ExactRational(ExactInt(1)));
}

TEST_CASE("non-integral entries are data, not failures") {
    SequenceSpec bad = SequenceSpec::table({ExactInt(1), ExactInt(2), ExactInt(3), ExactInt(5)});
    CharacteristicTable t = extract(bad, 4);
    CHECK_FALSE(t.fully_integral());
    CHECK(t.first_nonintegral() == Index{4});
    CHECK(t.entry(4) == ExactRational(ExactInt(5), ExactInt(2)));
    // Moebius route exhibits the same witness.
    CHECK(char_term_mobius(bad, 4) == ExactRational(ExactInt(5), ExactInt(2)));
}

TEST_CASE("verify_reconstruction accepts extracted tables") {
    CHECK(verify_reconstruction(extract(SequenceSpec::identity(), 100)).ok);
    CHECK(verify_reconstruction(extract(SequenceSpec::fibonacci(), 100)).ok);
}

TEST_CASE("verify_reconstruction pinpoints an injected fault") {
    CharacteristicTable good = extract(SequenceSpec::identity(), 8);
    std::vector<ExactRational> entries;
    for (Index n = 1; n <= 8; ++n) entries.push_back(good.entry(n));
    entries[3] = ExactRational(ExactInt(5));  // corrupt c_4
    CharacteristicTable corrupted(SequenceSpec::identity(), std::move(entries));
    CheckResult r = verify_reconstruction(corrupted);
    CHECK_FALSE(r.ok);
    CHECK(r.first_failure == 4);
}

TEST_CASE("verify_reconstruction rejects non-integral tables") {
    SequenceSpec bad = SequenceSpec::table({ExactInt(1), ExactInt(2), ExactInt(3), ExactInt(5)});
    CHECK_THROWS_AS(verify_reconstruction(extract(bad, 4)), std::invalid_argument);
}

TEST_CASE("iterative and Moebius routes agree across families") {
    CHECK(agreement_check(SequenceSpec::identity(), 200).ok);
    CHECK(agreement_check(SequenceSpec::fibonacci(), 200).ok);
    CHECK(agreement_check(SequenceSpec::mersenne(2), 200).ok);
    CHECK(agreement_check(SequenceSpec::lucas(2, 1), 120).ok);
    // Agreement includes the non-integral case.
    SequenceSpec bad = SequenceSpec::table({ExactInt(1), ExactInt(2), ExactInt(3), ExactInt(5)});
    CHECK(agreement_check(bad, 4).ok);
}

TEST_CASE("uniqueness: re-extraction from reconstructed values is the identity") {
    for (const auto& spec : {SequenceSpec::fibonacci(), SequenceSpec::mersenne(2)}) {
        CharacteristicTable t = extract(spec, 60);
        REQUIRE(t.fully_integral());
        std::vector<ExactInt> rebuilt;
        for (Index n = 1; n <= 60; ++n) {
            ExactInt product(1);
            for (Index d : divisors(n)) product *= t.entry(d).as_integer();
            rebuilt.push_back(product);
        }
        CharacteristicTable again = extract(SequenceSpec::table(rebuilt), 60);
        CHECK(t == again);
    }
}

TEST_CASE("prime-power law on the identity sequence") {
    CharacteristicTable t = extract(SequenceSpec::identity(), 2048);
    for (Index n = 2; n <= 2048; ++n) {
        auto p = prime_power_root(n);
        if (p) CHECK(t.entry(n) == ExactRational(ExactInt(static_cast<long>(*p))));
    }
}

TEST_CASE("identity closed form matches the prime-power oracle") {
    CharacteristicTable t = extract(SequenceSpec::identity(), 2000);
    for (Index n = 2; n <= 2000; ++n) {
        auto p = prime_power_root(n);
        ExactRational expected(ExactInt(static_cast<long>(p ? *p : 1)));
        CHECK(t.entry(n) == expected);
    }
}

TEST_CASE("bundled specs extract fully integral prefixes") {
    for (const auto& spec : {SequenceSpec::identity(), SequenceSpec::fibonacci(),
                             SequenceSpec::lucas(1, 2), SequenceSpec::lucas(2, 1),
                             SequenceSpec::mersenne(2), SequenceSpec::mersenne(3)}) {
        CharacteristicTable t = extract(spec, 60);
        CHECK(t.fully_integral());
        CHECK(verify_reconstruction(t).ok);
    }
}
