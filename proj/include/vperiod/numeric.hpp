#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vperiod {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical decimal form "p/q" with "/q" dropped when q == 1.
std::string rat_to_string(const Rat& x);

// Accepts "p" or "p/q" with optional leading '-'; result is canonicalized.
// Throws std::invalid_argument on malformed input or q == 0.
Rat rat_from_string(const std::string& s);

std::string int_to_string(const Int& x);

bool is_prime_u64(std::uint64_t n);

// Trial-division factorization, smallest prime first.
std::vector<std::pair<Int, unsigned>> factorize(Int n);
std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n);

// Exponent of p in n (n != 0).
unsigned int_ord_p(Int n, const Int& p);

Int int_pow(const Int& base, unsigned long e);
std::uint64_t pow_u64(std::uint64_t base, std::uint64_t e);  // unchecked overflow

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t mod);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t mod);  // gcd(a, mod) must be 1

// Multiplicative order of t modulo the prime ell (1 <= t < ell).
std::uint64_t mult_order_mod(std::uint64_t t, std::uint64_t ell);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// phi(m) for m >= 1.
std::uint64_t euler_phi(std::uint64_t m);

// Residues coprime to m in canonical order. For m == 1 and m == 2 this is {1};
// 1 represents the trivial class when the range [1, m-1] would be empty.
std::vector<std::uint64_t> units_mod(std::uint64_t m);

// Smallest primitive root modulo the prime ell.
std::uint64_t smallest_primitive_root(std::uint64_t ell);

// Deterministic element of multiplicative order exactly m in F_ell^*:
// g^((ell-1)/m) for the smallest primitive root g. Requires m | ell-1.
std::uint64_t element_of_order(std::uint64_t ell, std::uint64_t m);

}  // namespace vperiod
