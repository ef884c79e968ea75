#pragma once

#include <random>

#include "vperiod/cyclotomic.hpp"
#include "vperiod/recurrence.hpp"

namespace vperiod::testing {

using Rng = std::mt19937_64;

// Random element with numerators in [-bound, bound] and denominators in
// [1, bound], mirroring the randomized-suite convention.
inline CycNum random_cycnum(Rng& rng, std::uint64_t m, long bound = 9) {
    const std::size_t deg = euler_phi(m);
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    std::vector<Rat> coeffs(deg);
    for (auto& c : coeffs) {
        c = Rat(num(rng), den(rng));
        c.canonicalize();
    }
    return CycNum::from_coeffs(m, std::move(coeffs));
}

inline CycNum random_nonzero_cycnum(Rng& rng, std::uint64_t m, long bound = 9) {
    while (true) {
        CycNum a = random_cycnum(rng, m, bound);
        if (!a.is_zero()) return a;
    }
}

inline Lrs random_lrs(Rng& rng, std::uint64_t m, std::size_t n, long bound = 9) {
    std::vector<CycNum> coeffs, initial;
    for (std::size_t i = 0; i + 1 < n; ++i) coeffs.push_back(random_cycnum(rng, m, bound));
    coeffs.push_back(random_nonzero_cycnum(rng, m, bound));
    for (std::size_t i = 0; i < n; ++i) initial.push_back(random_cycnum(rng, m, bound));
    return Lrs(m, std::move(coeffs), std::move(initial));
}

inline CycNum cyc_int(std::uint64_t m, long v) { return CycNum::from_int(m, v); }

inline Lrs fibonacci_lrs() {
    return Lrs(2, {cyc_int(2, 1), cyc_int(2, 1)}, {cyc_int(2, 0), cyc_int(2, 1)});
}

inline Lrs geometric_lrs(std::uint64_t m, std::int64_t root_exp) {
    return Lrs(m, {CycNum::root_power(m, root_exp)}, {CycNum::one(m)});
}

}  // namespace vperiod::testing
