#include "divseq/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace divseq {

namespace {

void require_positive(Index n, const char* what) {
    if (n == 0) throw std::domain_error(std::string(what) + ": argument must be positive");
}

}  // namespace

Index Factorization::value() const {
    Index v = 1;
    for (const auto& pp : prime_powers)
        for (unsigned e = 0; e < pp.exponent; ++e) v *= pp.prime;
    return v;
}

Factorization factorize(Index n) {
    require_positive(n, "factorize");
    Factorization f;
    Index rest = n;
    for (Index p = 2; p <= rest / p; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        f.prime_powers.push_back({p, e});
    }
    if (rest > 1) f.prime_powers.push_back({rest, 1});
    return f;
}

std::vector<Index> divisors(Index n) {
    require_positive(n, "divisors");
    Factorization f = factorize(n);
    std::vector<Index> divs{1};
    for (const auto& pp : f.prime_powers) {
        std::size_t existing = divs.size();
        Index power = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            power *= pp.prime;
            for (std::size_t i = 0; i < existing; ++i) divs.push_back(divs[i] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

int mobius(Index n) {
    require_positive(n, "mobius");
    Factorization f = factorize(n);
    for (const auto& pp : f.prime_powers)
        if (pp.exponent > 1) return 0;
    return f.prime_powers.size() % 2 == 0 ? 1 : -1;
}

std::vector<int> mobius_sieve(Index upto) {
    require_positive(upto, "mobius_sieve");
    std::vector<int> mu(upto + 1, 1);
    std::vector<bool> composite(upto + 1, false);
    mu[0] = 0;
    for (Index i = 2; i <= upto; ++i) {
        if (composite[i]) continue;
        for (Index j = i; j <= upto; j += i) {
            if (j > i) composite[j] = true;
            mu[j] = -mu[j];
        }
        if (i <= upto / i) {
            Index sq = i * i;
            for (Index j = sq; j <= upto; j += sq) mu[j] = 0;
        }
    }
    return mu;
}

Index radical(Index n) {
    require_positive(n, "radical");
    Index r = 1;
    for (const auto& pp : factorize(n).prime_powers) r *= pp.prime;
    return r;
}

bool is_prime(Index n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (Index p = 3; p <= n / p; p += 2)
        if (n % p == 0) return false;
    return true;
}

unsigned valuation(Index p, Index n) {
    require_positive(n, "valuation");
    if (!is_prime(p)) throw std::domain_error("valuation: base must be prime");
    unsigned alpha = 0;
    while (n % p == 0) {
        n /= p;
        ++alpha;
    }
    return alpha;
}

std::optional<Index> prime_power_root(Index n) {
    if (n <= 1) throw std::domain_error("prime_power_root: argument must be at least 2");
    Factorization f = factorize(n);
    if (f.prime_powers.size() == 1) return f.prime_powers.front().prime;
    return std::nullopt;
}

Index totient(Index n) {
    require_positive(n, "totient");
    Index t = 1;
    for (const auto& pp : factorize(n).prime_powers) {
        t *= pp.prime - 1;
        for (unsigned e = 1; e < pp.exponent; ++e) t *= pp.prime;
    }
    return t;
}

}  // namespace divseq
