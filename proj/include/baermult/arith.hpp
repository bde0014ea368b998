#ifndef BAERMULT_ARITH_HPP
#define BAERMULT_ARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace baermult {

using BigInt = boost::multiprecision::cpp_int;

// Moebius function: +1/-1 for squarefree n by parity of prime factors, 0 otherwise.
// Rejects n < 1.
int mobius(long long n);

// Positive divisors of n in increasing order, by trial division.
std::vector<long long> divisors(long long n);

// Number of basic commutators of weight w on an alphabet of size d:
//   chi_w(d) = (1/w) * sum_{m | w} mobius(m) * d^(w/m).
// The sum is exactly divisible by w. d may be any nonnegative big integer
// (the closed-form rank formulas apply chi_2 to counts, not just to small
// alphabet sizes).
BigInt witt_chi(long long weight, const BigInt& alphabet_size);

// sum_{i=lo}^{hi} chi_i(alphabet_size); empty ranges give 0.
BigInt witt_sum(const BigInt& alphabet_size, long long lo, long long hi);

// Exact binomial coefficient C(n, k) for big n, small k.
BigInt binomial(const BigInt& n, unsigned long long k);

// A single Witt count, with its defining parameters attached.
struct WittCount {
    long long weight = 1;
    BigInt alphabet_size;
    BigInt value;
};

WittCount witt_count(long long weight, const BigInt& alphabet_size);

}  // namespace baermult

#endif
