#pragma once

#include <cstdint>
#include <vector>

#include "vperiod/cyclotomic.hpp"

namespace vperiod {

// Dense square matrix over Q(mu_m). Only the handful of operations the
// companion-matrix machinery needs.
class CycMatrix {
public:
    CycMatrix(std::size_t n, std::uint64_t m)
        : n_(n), m_(m), a_(n * n, CycNum::zero(m)) {}

    static CycMatrix identity(std::size_t n, std::uint64_t m);

    std::size_t dim() const { return n_; }
    std::uint64_t modulus() const { return m_; }

    CycNum& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const CycNum& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    CycMatrix operator*(const CycMatrix& o) const;
    std::vector<CycNum> apply(const std::vector<CycNum>& v) const;  // M * v
    CycMatrix pow(std::uint64_t e) const;
    CycMatrix galois(std::uint64_t j) const;  // entrywise sigma_j

    // Exact determinant by fraction-full Gaussian elimination over the field.
    CycNum det() const;

    bool operator==(const CycMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    std::size_t n_;
    std::uint64_t m_;
    std::vector<CycNum> a_;
};

// Square matrix over F_ell, ell an odd prime below 2^32.
class ModMatrix {
public:
    ModMatrix(std::size_t n, std::uint64_t ell) : n_(n), ell_(ell), a_(n * n, 0) {}

    static ModMatrix identity(std::size_t n, std::uint64_t ell);

    std::size_t dim() const { return n_; }
    std::uint64_t modulus() const { return ell_; }

    std::uint64_t& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    ModMatrix operator*(const ModMatrix& o) const;
    ModMatrix pow(const Int& e) const;
    bool is_identity() const;
    std::uint64_t det() const;

    bool operator==(const ModMatrix& o) const = default;

private:
    std::size_t n_;
    std::uint64_t ell_;
    std::vector<std::uint64_t> a_;
};

}  // namespace vperiod
