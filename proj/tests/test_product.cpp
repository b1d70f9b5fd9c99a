#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "divseq/product.hpp"

using namespace divseq;

TEST_CASE("partial products") {
    CHECK(partial_product(SequenceSpec::identity(), 5) == ExactInt(120));
    CHECK(partial_product(SequenceSpec::fibonacci(), 4) == ExactInt(6));
    CHECK(partial_product(SequenceSpec::fibonacci(), 0) == ExactInt(1));
}

TEST_CASE("window products") {
    CHECK(window_product(SequenceSpec::identity(), 3, 4) == ExactInt(840));
    CHECK(window_product(SequenceSpec::fibonacci(), 2, 2) == ExactInt(6));
    CHECK(window_product(SequenceSpec::mersenne(2), 5, 0) == ExactInt(1));
}

TEST_CASE("window times head rebuilds the full prefix, no division") {
    for (const auto& spec : {SequenceSpec::identity(), SequenceSpec::fibonacci(),
                             SequenceSpec::lucas(1, 2), SequenceSpec::mersenne(2)}) {
        ProductEngine engine(spec);
        for (Index m = 0; m <= 40; m += 3) {
            for (Index n = 0; n <= 40; n += 3) {
                CHECK(engine.window_product(m, n) * engine.partial_product(m) ==
                      engine.partial_product(m + n));
            }
        }
    }
}

TEST_CASE("factored partial products carry floor exponents") {
    FactoredProduct fp = partial_product_factored(SequenceSpec::identity(), 4);
    std::map<Index, std::uint64_t> expected = {{1, 4}, {2, 2}, {3, 1}, {4, 1}};
    CHECK(fp.exponents() == expected);
    CHECK(fp.expand() == ExactInt(24));

    FactoredProduct fib = partial_product_factored(SequenceSpec::fibonacci(), 4);
    CHECK(fib.exponents() == expected);
    CHECK(fib.expand() == ExactInt(6));

    FactoredProduct one = partial_product_factored(SequenceSpec::mersenne(3), 1);
    CHECK(one.exponents() == std::map<Index, std::uint64_t>{{1, 1}});
    CHECK(one.expand() == ExactInt(2));  // a_1 = 3 - 1
}

TEST_CASE("factored form refuses non-integral tables, carrying the witness") {
    SequenceSpec bad = SequenceSpec::table({ExactInt(1), ExactInt(2), ExactInt(3), ExactInt(5)});
    try {
        partial_product_factored(bad, 4);
        FAIL("expected nonintegral_error");
    } catch (const nonintegral_error& e) {
        CHECK(e.index() == 4);
        CHECK(e.witness() == ExactRational(ExactInt(5), ExactInt(2)));
    }
}

TEST_CASE("window_exponent frozen examples and small exhaustive grid") {
    CHECK(window_exponent(3, 4, 5) == 1);
    CHECK(window_exponent(2, 4, 6) == 0);
    for (Index i = 1; i <= 64; ++i)
        for (Index n = 0; n <= 64; ++n) CHECK(window_exponent(i, 0, n) == 0);
    for (Index i = 1; i <= 100; ++i)
        for (Index m = 0; m <= 100; ++m)
            for (Index n = 0; n <= 100; ++n) {
                std::int64_t e = window_exponent(i, m, n);
                CHECK(e >= 0);
                CHECK(e <= 1);
            }
    CHECK_THROWS_AS(window_exponent(0, 1, 1), std::domain_error);
}

TEST_CASE("generalized binomials, quotient route") {
    CHECK(generalized_binomial(SequenceSpec::identity(), 2, 2, BinomialMethod::quotient) ==
          ExactRational(ExactInt(6)));
    CHECK(generalized_binomial(SequenceSpec::fibonacci(), 2, 2, BinomialMethod::quotient) ==
          ExactRational(ExactInt(6)));
    CHECK(generalized_binomial(SequenceSpec::fibonacci(), 3, 3, BinomialMethod::quotient) ==
          ExactRational(ExactInt(60)));
    CHECK(generalized_binomial(SequenceSpec::fibonacci(), 0, 9, BinomialMethod::quotient) ==
          ExactRational(ExactInt(1)));
}

TEST_CASE("quotient and factored routes agree on a medium grid") {
    for (const auto& spec : {SequenceSpec::identity(), SequenceSpec::fibonacci(),
                             SequenceSpec::mersenne(2)}) {
        ProductEngine engine(spec);
        for (Index m = 0; m <= 40; ++m)
            for (Index n = 0; m + n <= 40; ++n)
                CHECK(engine.generalized_binomial(m, n, BinomialMethod::quotient) ==
                      engine.generalized_binomial(m, n, BinomialMethod::factored));
    }
}

TEST_CASE("non-divisible tables yield the fraction as witness") {
    SequenceSpec bad = SequenceSpec::table({ExactInt(1), ExactInt(2), ExactInt(3), ExactInt(5)});
    ExactRational v = generalized_binomial(bad, 2, 2, BinomialMethod::quotient);
    CHECK_FALSE(v.is_integer());
    CHECK(v == ExactRational(ExactInt(15), ExactInt(2)));  // 30/4 reduced
    CHECK_THROWS_AS(generalized_binomial(bad, 2, 2, BinomialMethod::factored),
                    nonintegral_error);
}

TEST_CASE("generalized binomials are integers on every bundled family") {
    for (const auto& spec : {SequenceSpec::identity(), SequenceSpec::fibonacci(),
                             SequenceSpec::lucas(1, 2), SequenceSpec::lucas(2, 1),
                             SequenceSpec::mersenne(2), SequenceSpec::mersenne(3)}) {
        ProductEngine engine(spec);
        for (Index m = 0; m <= 60; ++m)
            for (Index n = 0; n <= 60; ++n)
                CHECK(engine.generalized_binomial(m, n, BinomialMethod::quotient).is_integer());
    }
}

TEST_CASE("operand stats count multiplications on both routes") {
    ProductEngine engine(SequenceSpec::fibonacci());
    OperandStats quotient, factored;
    ExactRational a = engine.generalized_binomial(6, 6, BinomialMethod::quotient, &quotient);
    ExactRational b = engine.generalized_binomial(6, 6, BinomialMethod::factored, &factored);
    CHECK(a == b);
    CHECK(quotient.multiplications > 0);
    CHECK(factored.multiplications > 0);
    CHECK(quotient.peak_bits >= 1);
    CHECK(quotient.total_bits >= quotient.peak_bits);
}
