#include "vperiod/bounds.hpp"

#include <stdexcept>
#include <vector>

namespace vperiod {

namespace {

// largest e >= 0 with p^e <= x, for x >= 1
unsigned floor_log(std::uint64_t p, std::uint64_t x) {
    unsigned e = 0;
    std::uint64_t pw = 1;
    while (pw <= x / p) {
        pw *= p;
        ++e;
    }
    return e;
}

// largest e >= 0 with p^e * (p-1) <= n, i.e. floor(log_p(n/(p-1))) exactly
unsigned floor_log_ratio(std::uint64_t p, std::uint64_t n) {
    unsigned e = 0;
    std::uint64_t pw = p - 1;
    while (pw <= n / p) {
        pw *= p;
        ++e;
    }
    return e;
}

unsigned ord_p_u64(std::uint64_t m, std::uint64_t p) {
    unsigned e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

}  // namespace

unsigned e_exponent(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
    if (m % 2 != 0) throw std::invalid_argument("e_exponent: m must be even");
    if (n <= 1) throw std::invalid_argument("e_exponent: requires n > 1");
    if (!is_prime_u64(p)) throw std::invalid_argument("e_exponent: p must be prime");

    if (m % p != 0) {
        if (p > n + 1) return 0;
        // here 2 < p <= n+1 (p = 2 always divides m)
        return 1 + floor_log_ratio(p, n);
    }
    if (p == 2 && ord_p_u64(m, 2) == 1) return 2 + floor_log(2, n);
    // 2p | m: for odd p | m this always holds since 2 | m
    return ord_p_u64(m, p) + floor_log(p, n);
}

BoundReport bound_R(std::uint64_t m, std::uint64_t n) {
    if (m < 1 || n < 1) throw std::invalid_argument("bound_R: m, n must be positive");
    BoundReport rep;
    rep.m = (m % 2 == 0) ? m : 2 * m;
    rep.n = n;
    if (n == 1) {
        rep.R = Int(static_cast<unsigned long>(rep.m));
        for (const auto& [p, e] : factorize_u64(rep.m)) rep.factors[p] = e;
        return rep;
    }
    // e_p vanishes unless p | m or p <= n+1
    std::vector<std::uint64_t> primes;
    for (const auto& [p, e] : factorize_u64(rep.m)) {
        (void)e;
        primes.push_back(p);
    }
    for (std::uint64_t p = 2; p <= n + 1; ++p) {
        if (!is_prime_u64(p)) continue;
        if (rep.m % p != 0) primes.push_back(p);
    }
    for (std::uint64_t p : primes) {
        unsigned e = e_exponent(rep.m, n, p);
        if (e == 0) continue;
        rep.factors[p] = e;
        rep.R *= int_pow(Int(static_cast<unsigned long>(p)), e);
    }
    return rep;
}

namespace {

// Enumerate partitions of n as (part, multiplicity) groups with distinct
// decreasing parts, invoking fn on each complete grouping.
template <typename Fn>
void for_each_partition(std::uint64_t remaining, std::uint64_t max_part,
                        std::vector<std::pair<std::uint64_t, std::uint64_t>>& acc, Fn&& fn) {
    if (remaining == 0) {
        fn(acc);
        return;
    }
    for (std::uint64_t d = std::min(remaining, max_part); d >= 1; --d) {
        for (std::uint64_t k = 1; k * d <= remaining; ++k) {
            acc.emplace_back(d, k);
            for_each_partition(remaining - k * d, d - 1, acc, fn);
            acc.pop_back();
        }
    }
}

}  // namespace

Int max_order_gln(std::uint64_t n, std::uint64_t ell) {
    if (n < 1) throw std::invalid_argument("max_order_gln: n must be positive");
    if (!is_prime_u64(ell)) throw std::invalid_argument("max_order_gln: ell must be prime");
    Int best = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> acc;
    const Int ell_z(static_cast<unsigned long>(ell));
    for_each_partition(n, n, acc, [&](const auto& groups) {
        std::uint64_t kmax = 0;
        Int l = 1;
        for (const auto& [d, k] : groups) {
            kmax = std::max(kmax, k);
            Int q = int_pow(ell_z, static_cast<unsigned long>(d)) - 1;
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_mpz_t());
        }
        unsigned t = 0;
        Int pw = 1;
        while (pw < Int(static_cast<unsigned long>(kmax))) {
            pw *= ell_z;
            ++t;
        }
        Int cand = int_pow(ell_z, t) * l;
        if (cand > best) best = cand;
    });
    return best;
}

unsigned max_p_order(std::uint64_t p, std::uint64_t ell, std::uint64_t n) {
    if (p == ell)
        throw std::invalid_argument("max_p_order: p = ell is governed by the ell^t part");
    const Int p_z(static_cast<unsigned long>(p));
    unsigned best = 0;
    Int pw = 1;
    const Int ell_z(static_cast<unsigned long>(ell));
    for (std::uint64_t d = 1; d <= n; ++d) {
        pw *= ell_z;
        Int q = pw - 1;
        if (q == 0) continue;
        best = std::max(best, int_ord_p(q, p_z));
    }
    return best;
}

}  // namespace vperiod
