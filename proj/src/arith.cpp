#include "baermult/arith.hpp"

#include "baermult/errors.hpp"

#include <stdexcept>

namespace baermult {

int mobius(long long n) {
    if (n < 1) throw std::domain_error("mobius: argument must be >= 1");
    int sign = 1;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            sign = -sign;
        }
    }
    if (m > 1) sign = -sign;
    return sign;
}

std::vector<long long> divisors(long long n) {
    if (n < 1) throw std::domain_error("divisors: argument must be >= 1");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

BigInt ipow(const BigInt& base, long long exp) {
    BigInt result = 1;
    BigInt b = base;
    long long e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

}  // namespace

BigInt witt_chi(long long weight, const BigInt& alphabet_size) {
    if (weight < 1) throw std::domain_error("witt_chi: weight must be >= 1");
    if (alphabet_size < 0) throw std::domain_error("witt_chi: alphabet size must be >= 0");
    BigInt sum = 0;
    for (long long m : divisors(weight)) {
        int mu = mobius(m);
        if (mu != 0) sum += mu * ipow(alphabet_size, weight / m);
    }
    // Necklace-counting guarantees exact divisibility by the weight.
    BigInt q = sum / weight;
    if (q * weight != sum) throw BaermultError("witt_chi: inexact division");
    return q;
}

BigInt witt_sum(const BigInt& alphabet_size, long long lo, long long hi) {
    BigInt total = 0;
    for (long long i = std::max(lo, 1LL); i <= hi; ++i) total += witt_chi(i, alphabet_size);
    return total;
}

BigInt binomial(const BigInt& n, unsigned long long k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (BigInt(k) > n) return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (unsigned long long i = 0; i < k; ++i) {
        num *= n - BigInt(i);
        den *= BigInt(i + 1);
    }
    return num / den;
}

WittCount witt_count(long long weight, const BigInt& alphabet_size) {
    return WittCount{weight, alphabet_size, witt_chi(weight, alphabet_size)};
}

}  // namespace baermult
