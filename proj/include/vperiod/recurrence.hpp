#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vperiod/cyclotomic.hpp"
#include "vperiod/matrix.hpp"

namespace vperiod {

// Linear recurrence sequence over Q(mu_m):
//   a_k = sum_{i=1..n} c_i a_{k-i}  for k >= n,  c_n != 0.
class Lrs {
public:
    Lrs(std::uint64_t m, std::vector<CycNum> coeffs, std::vector<CycNum> initial);

    std::uint64_t modulus() const { return m_; }
    std::size_t dim() const { return coeffs_.size(); }
    const std::vector<CycNum>& coeffs() const { return coeffs_; }
    const std::vector<CycNum>& initial() const { return initial_; }

private:
    std::uint64_t m_;
    std::vector<CycNum> coeffs_;
    std::vector<CycNum> initial_;
};

// k-th term by iterating the recurrence (linear in k).
CycNum term(const Lrs& L, std::uint64_t k);

// Terms a_0..a_K inclusive.
std::vector<CycNum> terms(const Lrs& L, std::uint64_t K);

// k-th term via companion-matrix powering; must agree with term().
CycNum term_by_matrix(const Lrs& L, std::uint64_t k);

// Companion realization a_k = u M^{k+1-n} v:
//   M_{i,1} = c_i, M_{i,i+1} = 1, u = (a_{n-1},...,a_0), v = (1,0,...,0)^T.
struct CompanionData {
    CycMatrix M;
    std::vector<CycNum> u;
    std::vector<CycNum> v;
};

CompanionData companion(const Lrs& L);

// Clears denominators: returns (lambda, L') with lambda the lcm of all
// coefficient denominators, c_i' = c_i lambda^i, a_i' = a_i lambda^{i+1},
// so that term(L', k) = lambda^{k+1} term(L, k).
std::pair<Int, Lrs> normalize_integral(const Lrs& L);

// The sequence sigma_j(a_k) - a_k as an Lrs of dimension 2n, built from the
// product of the characteristic polynomials of L and sigma_j(L).
Lrs galois_difference(const Lrs& L, std::uint64_t j);

// Berlekamp-Massey over Q(mu_m).
struct MinimalRecurrence {
    std::size_t dim = 0;
    std::vector<CycNum> coeffs;   // c_1..c_dim
    bool window_certified = false;  // window length >= 2*dim + 2
    bool proper = false;            // c_dim != 0 (convertible to an Lrs)
};

// Shortest linear recurrence generating the window. Throws on an empty
// window. Minimality is certified only relative to the window; the
// window_certified flag records whether |window| >= 2*dim + 2.
MinimalRecurrence minimal_recurrence(std::span<const CycNum> window);

// Regenerate a window of the given length from a recovered recurrence,
// seeding with the window's first dim values.
std::vector<CycNum> regenerate(const MinimalRecurrence& rec, std::span<const CycNum> seed,
                               std::size_t length);

}  // namespace vperiod
