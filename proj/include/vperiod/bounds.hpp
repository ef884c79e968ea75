#pragma once

#include <cstdint>
#include <map>

#include "vperiod/numeric.hpp"

namespace vperiod {

// R_{m,n} = prod_p p^{e_p} together with its factorization. The stored m is
// the effective (even) modulus after the odd-m promotion m -> 2m.
struct BoundReport {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    Int R = 1;
    std::map<std::uint64_t, unsigned> factors;
};

// The exponent e_p:
//   0                              if p !| m, p > n+1
//   1 + floor(log_p(n/(p-1)))      if p !| m, 2 < p <= n+1
//   2 + floor(log_2 n)             if p = 2, ord_2(m) = 1
//   ord_p(m) + floor(log_p n)      if 2p | m
// Requires 2 | m and n > 1; exactly one case applies for each prime p.
unsigned e_exponent(std::uint64_t m, std::uint64_t n, std::uint64_t p);

// R_{m,n}; odd m is promoted to 2m, and R_{m,1} = m by convention.
BoundReport bound_R(std::uint64_t m, std::uint64_t n);

// Maximal order of an element of GL_n(F_ell): the maximum over partitions
// sum k_i d_i = n (distinct parts d_i with multiplicities k_i) of
// ell^t * lcm(ell^{d_i} - 1), t minimal with ell^t >= max k_i.
Int max_order_gln(std::uint64_t n, std::uint64_t ell);

// max_{d <= n} ord_p(ell^d - 1); requires p != ell.
unsigned max_p_order(std::uint64_t p, std::uint64_t ell, std::uint64_t n);

}  // namespace vperiod
