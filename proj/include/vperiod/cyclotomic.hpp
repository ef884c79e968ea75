#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "vperiod/numeric.hpp"

namespace vperiod {

// m-th cyclotomic polynomial Phi_m; monic with integer coefficients,
// coeffs[i] is the coefficient of x^i, degree phi(m).
struct CycPoly {
    std::uint64_t m = 1;
    std::vector<Int> coeffs;

    std::size_t degree() const { return coeffs.size() - 1; }
    bool operator==(const CycPoly&) const = default;
};

// Computed by exact division of x^m - 1 by all Phi_d, d | m, d < m;
// memoized per process behind a mutex.
CycPoly cyclotomic_polynomial(std::uint64_t m);

namespace detail {

// Shared per-modulus data: Phi_m plus the power-basis expansion of
// zeta_m^e for every e in [0, m). Immutable once built.
struct CycBasis {
    std::uint64_t m;
    std::size_t degree;                        // phi(m)
    std::vector<Int> phi;                      // Phi_m, monic, length degree+1
    std::vector<std::vector<Int>> zeta_pow;    // m rows, each of length degree

    static std::shared_ptr<const CycBasis> get(std::uint64_t m);
};

}  // namespace detail

// Element of Q(mu_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1}
// modulo Phi_m. Coefficients are exact rationals in lowest terms, so
// equality is entrywise comparison. Immutable after construction.
class CycNum {
public:
    CycNum() : CycNum(zero(1)) {}

    static CycNum zero(std::uint64_t m);
    static CycNum one(std::uint64_t m);
    static CycNum from_rational(std::uint64_t m, const Rat& x);
    static CycNum from_int(std::uint64_t m, long x) { return from_rational(m, Rat(x)); }
    // zeta_m^{e mod m}, reduced to the power basis.
    static CycNum root_power(std::uint64_t m, std::int64_t e);
    // Coefficient vector of length phi(m), reduced/canonicalized entrywise.
    static CycNum from_coeffs(std::uint64_t m, std::vector<Rat> coeffs);

    std::uint64_t modulus() const { return basis_->m; }
    std::size_t degree() const { return basis_->degree; }  // phi(m)
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;   // all basis coefficients beyond the constant vanish
    bool is_integral() const;   // all denominators are 1
    Rat rational_value() const; // requires is_rational()

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }

    // Multiplicative inverse via extended gcd with Phi_m over Q.
    // Throws std::domain_error on zero.
    CycNum inverse() const;
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    CycNum& operator*=(const Rat& s);
    friend CycNum operator*(CycNum a, const Rat& s) { return a *= s; }
    friend CycNum operator*(const Rat& s, CycNum a) { return a *= s; }

    CycNum pow(std::uint64_t e) const;

    // Image under sigma_j : zeta -> zeta^j. Requires gcd(j, m) = 1.
    CycNum galois(std::uint64_t j) const;

    // Inclusion Q(mu_m) -> Q(mu_m2) via zeta_m -> zeta_m2^{m2/m}; m | m2.
    CycNum lift(std::uint64_t m2) const;

    bool operator==(const CycNum& o) const { return modulus() == o.modulus() && c_ == o.c_; }

    std::string to_string() const;  // human-readable, for diagnostics

private:
    CycNum(std::shared_ptr<const detail::CycBasis> basis, std::vector<Rat> c)
        : basis_(std::move(basis)), c_(std::move(c)) {}

    void check_same_modulus(const CycNum& o) const;

    std::shared_ptr<const detail::CycBasis> basis_;
    std::vector<Rat> c_;
};

// Reduction Z[mu_m] -> F_ell via zeta_m -> t, where ell = 1 (mod m) is an
// odd prime and t has multiplicative order exactly m. Requires integral
// coefficients. Ring-homomorphic by construction.
std::uint64_t embed_mod_ell(const CycNum& a, std::uint64_t ell, std::uint64_t t);

// Product of all Galois conjugates; always rational. For integral input the
// result is a rational integer.
Rat field_norm(const CycNum& a);

}  // namespace vperiod
