#include "vperiod/recurrence.hpp"

#include <stdexcept>

namespace vperiod {

Lrs::Lrs(std::uint64_t m, std::vector<CycNum> coeffs, std::vector<CycNum> initial)
    : m_(m), coeffs_(std::move(coeffs)), initial_(std::move(initial)) {
    if (coeffs_.empty()) throw std::invalid_argument("Lrs: empty coefficient list");
    if (initial_.size() != coeffs_.size())
        throw std::invalid_argument("Lrs: need exactly n initial terms");
    for (const CycNum& c : coeffs_)
        if (c.modulus() != m_) throw std::invalid_argument("Lrs: coefficient modulus mismatch");
    for (const CycNum& a : initial_)
        if (a.modulus() != m_) throw std::invalid_argument("Lrs: initial-term modulus mismatch");
    if (coeffs_.back().is_zero()) throw std::invalid_argument("Lrs: c_n must be nonzero");
}

CycNum term(const Lrs& L, std::uint64_t k) {
    const std::size_t n = L.dim();
    if (k < n) return L.initial()[k];
    std::vector<CycNum> window = L.initial();  // window[i] = a_{k0+i}
    for (std::uint64_t k0 = n; k0 <= k; ++k0) {
        CycNum next = CycNum::zero(L.modulus());
        for (std::size_t i = 1; i <= n; ++i)
            next += L.coeffs()[i - 1] * window[n - i];
        for (std::size_t i = 0; i + 1 < n; ++i) window[i] = std::move(window[i + 1]);
        window[n - 1] = std::move(next);
    }
    return window[n - 1];
}

std::vector<CycNum> terms(const Lrs& L, std::uint64_t K) {
    const std::size_t n = L.dim();
    std::vector<CycNum> out;
    out.reserve(K + 1);
    for (std::uint64_t k = 0; k <= K && k < n; ++k) out.push_back(L.initial()[k]);
    for (std::uint64_t k = out.size(); k <= K; ++k) {
        CycNum next = CycNum::zero(L.modulus());
        for (std::size_t i = 1; i <= n; ++i)
            next += L.coeffs()[i - 1] * out[k - i];
        out.push_back(std::move(next));
    }
    return out;
}

CompanionData companion(const Lrs& L) {
    const std::size_t n = L.dim();
    const std::uint64_t m = L.modulus();
    CycMatrix M(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        M.at(i, 0) = L.coeffs()[i];
        if (i + 1 < n) M.at(i, i + 1) = CycNum::one(m);
    }
    std::vector<CycNum> u(n, CycNum::zero(m));
    for (std::size_t i = 0; i < n; ++i) u[i] = L.initial()[n - 1 - i];
    std::vector<CycNum> v(n, CycNum::zero(m));
    v[0] = CycNum::one(m);
    return CompanionData{std::move(M), std::move(u), std::move(v)};
}

CycNum term_by_matrix(const Lrs& L, std::uint64_t k) {
    const std::size_t n = L.dim();
    if (k < n) return L.initial()[k];
    CompanionData cd = companion(L);
    CycMatrix P = cd.M.pow(k + 1 - n);
    std::vector<CycNum> Pv = P.apply(cd.v);
    CycNum r = CycNum::zero(L.modulus());
    for (std::size_t i = 0; i < n; ++i) r += cd.u[i] * Pv[i];
    return r;
}

std::pair<Int, Lrs> normalize_integral(const Lrs& L) {
    Int lambda = 1;
    auto absorb = [&lambda](const CycNum& x) {
        for (const Rat& r : x.coeffs()) {
            Int den = r.get_den();
            mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), den.get_mpz_t());
        }
    };
    for (const CycNum& c : L.coeffs()) absorb(c);
    for (const CycNum& a : L.initial()) absorb(a);

    if (lambda == 1) return {lambda, L};
    // 1-indexed: c_i scales by lambda^i and a_{i-1} by lambda^i, so both
    // stored vectors pick up lambda^{idx+1} at index idx.
    const Rat lam(lambda);
    std::vector<CycNum> coeffs, initial;
    Rat p = 1;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        p *= lam;
        coeffs.push_back(L.coeffs()[i] * p);
        initial.push_back(L.initial()[i] * p);
    }
    return {lambda, Lrs(L.modulus(), std::move(coeffs), std::move(initial))};
}

namespace {

// Coefficients of prod = a*b for characteristic polynomials stored dense,
// index = power of x.
std::vector<CycNum> poly_mul(const std::vector<CycNum>& a, const std::vector<CycNum>& b,
                             std::uint64_t m) {
    std::vector<CycNum> out(a.size() + b.size() - 1, CycNum::zero(m));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

Lrs galois_difference(const Lrs& L, std::uint64_t j) {
    const std::size_t n = L.dim();
    const std::uint64_t m = L.modulus();

    // characteristic polynomial x^n - c_1 x^{n-1} - ... - c_n of L and of sigma_j(L)
    std::vector<CycNum> f(n + 1, CycNum::zero(m)), g(n + 1, CycNum::zero(m));
    f[n] = CycNum::one(m);
    g[n] = CycNum::one(m);
    for (std::size_t i = 1; i <= n; ++i) {
        f[n - i] = -L.coeffs()[i - 1];
        g[n - i] = -L.coeffs()[i - 1].galois(j);
    }
    std::vector<CycNum> prod = poly_mul(f, g, m);  // monic of degree 2n

    std::vector<CycNum> coeffs(2 * n, CycNum::zero(m));
    for (std::size_t i = 1; i <= 2 * n; ++i) coeffs[i - 1] = -prod[2 * n - i];

    // first 2n terms directly
    std::vector<CycNum> base = terms(L, 2 * n - 1);
    std::vector<CycNum> initial;
    initial.reserve(2 * n);
    for (std::size_t k = 0; k < 2 * n; ++k) initial.push_back(base[k].galois(j) - base[k]);

    return Lrs(m, std::move(coeffs), std::move(initial));
}

MinimalRecurrence minimal_recurrence(std::span<const CycNum> window) {
    if (window.empty()) throw std::invalid_argument("minimal_recurrence: empty window");
    const std::uint64_t m = window[0].modulus();
    for (const CycNum& x : window)
        if (x.modulus() != m) throw std::invalid_argument("minimal_recurrence: modulus mismatch");

    // Berlekamp-Massey with connection polynomial C(x) = 1 + C_1 x + ...;
    // the window satisfies s_k = -sum C_i s_{k-i} once L stabilizes.
    std::vector<CycNum> C = {CycNum::one(m)};
    std::vector<CycNum> B = {CycNum::one(m)};
    std::size_t Lc = 0, gap = 1;
    CycNum b = CycNum::one(m);
    for (std::size_t k = 0; k < window.size(); ++k) {
        CycNum delta = window[k];
        for (std::size_t i = 1; i <= Lc && i < C.size(); ++i)
            if (!C[i].is_zero()) delta += C[i] * window[k - i];
        if (delta.is_zero()) {
            ++gap;
            continue;
        }
        const CycNum f = delta * b.inverse();
        if (2 * Lc <= k) {
            std::vector<CycNum> T = C;
            if (C.size() < B.size() + gap) C.resize(B.size() + gap, CycNum::zero(m));
            for (std::size_t i = 0; i < B.size(); ++i) C[i + gap] -= f * B[i];
            Lc = k + 1 - Lc;
            B = std::move(T);
            b = delta;
            gap = 1;
        } else {
            if (C.size() < B.size() + gap) C.resize(B.size() + gap, CycNum::zero(m));
            for (std::size_t i = 0; i < B.size(); ++i) C[i + gap] -= f * B[i];
            ++gap;
        }
    }

    MinimalRecurrence out;
    out.dim = Lc;
    out.coeffs.reserve(Lc);
    for (std::size_t i = 1; i <= Lc; ++i)
        out.coeffs.push_back(i < C.size() ? -C[i] : CycNum::zero(m));
    out.window_certified = window.size() >= 2 * Lc + 2;
    out.proper = Lc > 0 && !out.coeffs.back().is_zero();
    return out;
}

std::vector<CycNum> regenerate(const MinimalRecurrence& rec, std::span<const CycNum> seed,
                               std::size_t length) {
    if (seed.size() < rec.dim) throw std::invalid_argument("regenerate: seed shorter than dim");
    const std::uint64_t m = seed.empty() ? 1 : seed[0].modulus();
    std::vector<CycNum> out;
    out.reserve(length);
    for (std::size_t k = 0; k < rec.dim && k < length; ++k) out.push_back(seed[k]);
    for (std::size_t k = out.size(); k < length; ++k) {
        CycNum next = CycNum::zero(m);
        for (std::size_t i = 1; i <= rec.dim; ++i)
            next += rec.coeffs[i - 1] * out[k - i];
        out.push_back(std::move(next));
    }
    return out;
}

}  // namespace vperiod
