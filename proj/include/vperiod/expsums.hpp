#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "vperiod/bounds.hpp"
#include "vperiod/cyclotomic.hpp"
#include "vperiod/errors.hpp"
#include "vperiod/finite_field.hpp"
#include "vperiod/laurent.hpp"
#include "vperiod/periodicity.hpp"
#include "vperiod/recurrence.hpp"
#include "vperiod/subfields.hpp"

namespace vperiod {

inline constexpr std::uint64_t kDefaultPointCap = 100'000'000;  // (q^k - 1)^mvars

// A toric exponential sum instance over F_q with multiplicative character
// order c | q-1; the character convention is chi(g) = zeta_c applied to the
// norm of the product of the coordinates.
struct ExpSumSpec {
    std::shared_ptr<const GaloisField> base;
    LaurentPoly f;
    unsigned c = 1;
};

// Exact value of S_k as an element of Z[mu_{pc}]: brute force over the
// torus (F_{q^k}^x)^mvars with psi(y) = zeta_p^{lift Tr(y)} and
// chi(g^i) = zeta_c^i. The partial counts are exact integers, so the result
// is independent of enumeration order and thread partitioning.
CycNum exp_sum(const ExpSumSpec& spec, std::uint64_t k, unsigned threads = 1,
               std::uint64_t point_cap = kDefaultPointCap,
               std::uint64_t field_cap = GaloisField::kMaxQ);

// S_1..S_kmax.
std::vector<CycNum> exp_sum_range(const ExpSumSpec& spec, std::uint64_t kmax,
                                  unsigned threads = 1,
                                  std::uint64_t point_cap = kDefaultPointCap,
                                  std::uint64_t field_cap = GaloisField::kMaxQ);

// Largest k such that both the field cap and the point cap admit the sweep;
// 0 when even k = 1 is out of reach.
std::uint64_t largest_feasible_k(const GaloisField& base, unsigned mvars,
                                 std::uint64_t point_cap = kDefaultPointCap,
                                 std::uint64_t field_cap = GaloisField::kMaxQ);

// Gauss sum tau(eta) = sum_x eta(x) psi(Tr x) for eta of order e, 1 < e | q-1,
// as an element of Z[mu_{pe}].
CycNum gauss_sum(const GaloisField& F, unsigned e);

// Kloosterman sum: exp_sum of x_1 + ... + x_{n-1} + a/(x_1...x_{n-1}) with
// trivial character; n >= 2, a != 0. Values lie in Z[mu_p]; for odd p the
// result is lifted to the even modulus 2p.
CycNum kloosterman(const GaloisField& F, unsigned n, std::uint64_t a, std::uint64_t k,
                   unsigned threads = 1, std::uint64_t point_cap = kDefaultPointCap);

// The four-case period table for f = x^d + a (d | q-1, trivial character):
//     d   if d | p-1           and Tr(a) = 0
//     pd  if d | p-1           and Tr(a) != 0
//     1   if d | (q-1)/(p-1)   and Tr(a) = 0
//     p   if d | (q-1)/(p-1)   and Tr(a) != 0
// The (q-1)/(p-1) hypothesis is dispatched first: when both divisibility
// hypotheses hold they disagree, and the degree formula shows the lifted
// case is the correct one. Returns nullopt when neither hypothesis holds.
std::optional<std::uint64_t> gauss_period_prediction(const GaloisField& F, std::uint64_t d,
                                                     std::uint64_t a);

// deg S_k(x^d) = (p-1) / gcd(p-1, (q^k-1)/d); requires d | q^k-1 and one of
// the divisibility hypotheses above.
std::uint64_t gauss_degree_formula(std::uint64_t p, std::uint64_t q, std::uint64_t d,
                                   std::uint64_t k);

// Zero/pole count bound 4d + 5 for a one-variable exponential sum of degree d.
std::uint64_t bombieri_bound(std::uint64_t d);

// End-to-end study of f = x^d + a: brute-force prefix within the points
// budget, minimal recurrence, exact extension of S_k to kmax through the
// recurrence, generating fields, period detection, and the table prediction.
struct GaussStudy {
    std::uint64_t p = 0, q = 0, d = 0, a = 0;
    unsigned f = 1;
    std::vector<CycNum> S;                // S_1..S_kmax, modulus p
    std::vector<SubfieldDesc> fields;     // of S_1..S_kmax
    std::vector<std::uint64_t> degrees;
    MinimalRecurrence rec;                // from the brute-forced prefix
    std::uint64_t prefix_len = 0;         // number of brute-forced terms
    PeriodReport period;                  // index i corresponds to k = i+1
    std::optional<std::uint64_t> predicted;
    std::optional<bool> match;
};

GaussStudy gauss_study(std::uint64_t p, unsigned f, std::uint64_t d, std::uint64_t a,
                       std::uint64_t kmax, unsigned threads = 1,
                       std::uint64_t points_budget = 4'000'000);

struct KloostermanStudy {
    std::uint64_t p = 0, q = 0, a = 0;
    unsigned f = 1, n = 2;
    std::vector<CycNum> S;                // S_1..S_kmax, even modulus
    std::vector<SubfieldDesc> fields;
    std::vector<std::uint64_t> degrees;
    MinimalRecurrence rec;
    PeriodReport period;                  // index i corresponds to k = i+1
    BoundReport bound;                    // R_{p,n} with odd-m promotion
    bool divides_bound = false;
};

KloostermanStudy kloosterman_study(std::uint64_t p, unsigned f, unsigned n, std::uint64_t a,
                                   std::uint64_t kmax, unsigned threads = 1,
                                   std::uint64_t point_cap = kDefaultPointCap);

}  // namespace vperiod
