#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "vperiod/bounds.hpp"
#include "vperiod/matrix.hpp"
#include "vperiod/recurrence.hpp"
#include "vperiod/subfields.hpp"

namespace vperiod {

enum class Certification {
    Failed,             // no period valid on the window
    WindowOnly,         // detected on the window, no divisibility evidence
    DividesBound,       // detected r divides the supplied R_{m,n}
    CertifiedMultiple,  // detected r divides the split-prime multiple s_ell
};

const char* to_string(Certification c);

// Detected (pre-period N, period r) over a finite window of size K+1.
// A window can never prove eventual periodicity, so the certification
// records the strongest divisibility evidence gathered.
struct PeriodReport {
    bool found = false;
    std::uint64_t N = 0;
    std::uint64_t r = 0;
    std::uint64_t K = 0;  // window holds indices 0..K
    Certification certification = Certification::Failed;
    std::optional<Int> R;         // bound the period was checked against
    std::optional<Int> s_ell;     // certified multiple, when computed
    std::optional<std::uint64_t> ell;
    bool bound_violation = false;  // r did not divide a supplied bound
};

// Window description of {k : a_k = 0}: arithmetic progressions
// start + s*N (start is the first member) plus a finite exceptional set,
// disjointly covering the window's zeros exactly.
struct ZeroSetDecomposition {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> progressions;  // (start, s)
    std::vector<std::uint64_t> exceptional;
    std::uint64_t s = 1;
    std::uint64_t K = 0;
};

// Smallest prime ell > 2 with ell = 1 (mod m), ell not dividing avoid, and
// ell not in skip. avoid must be nonzero (pass the integer norm of c_n).
std::uint64_t find_split_prime(std::uint64_t m, const Int& avoid,
                               std::span<const std::uint64_t> skip = {});

// Multiplicative order of the reduction of M in GL_n(F_ell), where entries
// are reduced via zeta_m -> t. Computed by factoring |GL_n(F_ell)| and
// stripping primes. Throws std::domain_error if the reduction is singular.
Int matrix_order_mod(const CycMatrix& M, std::uint64_t ell, std::uint64_t t);

// Window-exact zero-set decomposition with progression modulus s: a residue
// class is accepted as a progression precisely when every sampled index in
// the window's second half vanishes; its start is then pushed down as far
// as the zeros continue. Requires K >= 4s.
ZeroSetDecomposition zero_set_decompose(const Lrs& L, std::uint64_t K, std::uint64_t s);

// (fixing_subgroup(a_k))_{k=0..K}.
std::vector<SubfieldDesc> field_sequence(const Lrs& L, std::uint64_t K);

namespace detail {

// Shared search on an equality-indicator callback: values at positions
// [0, size) with eq(i, j) telling whether x_i == x_j.
PeriodReport detect_virtual_period_impl(std::size_t size,
                                        const std::function<bool(std::size_t, std::size_t)>& eq);

}  // namespace detail

// Minimal r >= 1 admitting a pre-period N with x_k = x_{k+r} throughout
// [N, K-r]; for that r, N is minimal. To reject vacuous tail matches a
// candidate is only accepted when N <= floor(W/2) and N <= W - 2r (the
// agreement must span at least two full periods and reach the window's
// second half). Returns found = false when no candidate qualifies.
template <typename T, typename Eq = std::equal_to<T>>
PeriodReport detect_virtual_period(std::span<const T> xs, Eq eq = Eq{}) {
    return detail::detect_virtual_period_impl(
        xs.size(), [&](std::size_t i, std::size_t j) { return eq(xs[i], xs[j]); });
}

// Upgrades certification to DividesBound iff r | R; otherwise flags the
// violation and leaves the certification untouched.
PeriodReport verify_against_bound(PeriodReport report, const Int& R);

// Split-prime certificate: with ell avoiding the norm of c_n, s_ell is the
// lcm over all sigma in Gal(Q(mu_m)/Q) of lcm(ord(M), ord(sigma M)) mod a
// prime above ell. Any true virtual period of the generating-field sequence
// and any zero-set modulus divides s_ell.
struct SplitPrimeCertificate {
    std::uint64_t ell = 0;
    std::uint64_t t = 0;  // the chosen order-m element representing zeta_m
    Int s_ell = 1;
};

// forced_ell overrides the search; it must still be a valid split prime
// avoiding the norm of c_n.
SplitPrimeCertificate certified_multiple(const Lrs& L,
                                         std::span<const std::uint64_t> skip_primes = {},
                                         std::optional<std::uint64_t> forced_ell = {});

// One-stop analysis used by the CLI and the acceptance suite.
struct LrsAnalysis {
    std::vector<SubfieldDesc> fields;     // k = 0..K
    std::vector<std::uint64_t> degrees;
    PeriodReport period;                  // of the generating-field sequence
    BoundReport bound_n;                  // R_{m,n}
    BoundReport bound_2n;                 // R_{m,2n}
    bool divides_R_n = false;
    bool divides_R_2n = false;
    std::optional<SplitPrimeCertificate> certificate;
    ZeroSetDecomposition zeros;
    std::uint64_t zero_modulus = 1;       // s used for the decomposition
};

LrsAnalysis analyze_lrs(const Lrs& L, std::uint64_t K,
                        std::span<const std::uint64_t> skip_primes = {},
                        std::optional<std::uint64_t> forced_ell = {});

// Default analysis window: max(200, 8 * R_{m,min(n,3)}) capped at 10^4.
std::uint64_t default_window(std::uint64_t m, std::uint64_t n);

}  // namespace vperiod
