#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fracture {

using Int = mpz_class;
using Rat = mpq_class;

// Finite sorted set of primes.
using Support = std::vector<long>;

bool is_prime(long n);
long next_prime(long n); // smallest prime > n

// Multiplicity of p in a nonzero integer / rational.
long valuation(const Int& a, long p);
long valuation(const Rat& a, long p);

// Distinct prime divisors of |a|, sorted. a must be nonzero.
std::vector<long> prime_divisors(const Int& a);

Int p_part(const Int& a, long p);
// a with every prime of S removed.
Int strip_primes(const Int& a, const Support& S);
bool is_smooth(const Int& a, const Support& S);

Support normalize_support(Support S);
Support support_union(const Support& a, const Support& b);
bool contains(const Support& S, long p);

Rat make_rat(const Int& num, const Int& den);
Rat parse_rat(const std::string& s);
std::string rat_string(const Rat& r);

} // namespace fracture
