#include "vperiod/matrix.hpp"

#include <stdexcept>

namespace vperiod {

CycMatrix CycMatrix::identity(std::size_t n, std::uint64_t m) {
    CycMatrix I(n, m);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = CycNum::one(m);
    return I;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (n_ != o.n_ || m_ != o.m_) throw std::invalid_argument("CycMatrix: shape/modulus mismatch");
    CycMatrix r(n_, m_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const CycNum& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    return r;
}

std::vector<CycNum> CycMatrix::apply(const std::vector<CycNum>& v) const {
    if (v.size() != n_) throw std::invalid_argument("CycMatrix::apply: size mismatch");
    std::vector<CycNum> r(n_, CycNum::zero(m_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

CycMatrix CycMatrix::pow(std::uint64_t e) const {
    CycMatrix r = identity(n_, m_);
    CycMatrix b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

CycMatrix CycMatrix::galois(std::uint64_t j) const {
    CycMatrix r(n_, m_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].galois(j);
    return r;
}

CycNum CycMatrix::det() const {
    CycMatrix w = *this;
    CycNum d = CycNum::one(m_);
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n_) return CycNum::zero(m_);
        if (pivot != col) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(w.at(pivot, j), w.at(col, j));
            d = -d;
        }
        const CycNum p = w.at(col, col);
        d *= p;
        const CycNum pinv = p.inverse();
        for (std::size_t i = col + 1; i < n_; ++i) {
            if (w.at(i, col).is_zero()) continue;
            const CycNum f = w.at(i, col) * pinv;
            for (std::size_t j = col; j < n_; ++j) w.at(i, j) -= f * w.at(col, j);
        }
    }
    return d;
}

ModMatrix ModMatrix::identity(std::size_t n, std::uint64_t ell) {
    ModMatrix I(n, ell);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1 % ell;
    return I;
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
    if (n_ != o.n_ || ell_ != o.ell_) throw std::invalid_argument("ModMatrix: shape/modulus mismatch");
    ModMatrix r(n_, ell_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            std::uint64_t aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n_; ++j)
                r.at(i, j) = (r.at(i, j) + aik * o.at(k, j)) % ell_;
        }
    return r;
}

ModMatrix ModMatrix::pow(const Int& e) const {
    if (e < 0) throw std::invalid_argument("ModMatrix::pow: negative exponent");
    ModMatrix r = identity(n_, ell_);
    ModMatrix b = *this;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

bool ModMatrix::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (at(i, j) != (i == j ? 1u % ell_ : 0u)) return false;
    return true;
}

std::uint64_t ModMatrix::det() const {
    ModMatrix w = *this;
    std::uint64_t d = 1 % ell_;
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && w.at(pivot, col) == 0) ++pivot;
        if (pivot == n_) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(w.at(pivot, j), w.at(col, j));
            d = ell_ - d;
            if (d == ell_) d = 0;
        }
        const std::uint64_t p = w.at(col, col);
        d = mulmod_u64(d, p, ell_);
        const std::uint64_t pinv = invmod_u64(p, ell_);
        for (std::size_t i = col + 1; i < n_; ++i) {
            if (w.at(i, col) == 0) continue;
            const std::uint64_t f = mulmod_u64(w.at(i, col), pinv, ell_);
            for (std::size_t j = col; j < n_; ++j) {
                std::uint64_t sub = mulmod_u64(f, w.at(col, j), ell_);
                w.at(i, j) = (w.at(i, j) + ell_ - sub) % ell_;
            }
        }
    }
    return d;
}

}  // namespace vperiod
