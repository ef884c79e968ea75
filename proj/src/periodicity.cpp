#include "vperiod/periodicity.hpp"

#include <algorithm>
#include <stdexcept>

namespace vperiod {

const char* to_string(Certification c) {
    switch (c) {
        case Certification::Failed: return "Failed";
        case Certification::WindowOnly: return "WindowOnly";
        case Certification::DividesBound: return "DividesBound";
        case Certification::CertifiedMultiple: return "CertifiedMultiple";
    }
    return "?";
}

std::uint64_t find_split_prime(std::uint64_t m, const Int& avoid,
                               std::span<const std::uint64_t> skip) {
    if (m < 1) throw std::invalid_argument("find_split_prime: m must be positive");
    if (avoid == 0) throw std::invalid_argument("find_split_prime: avoid must be nonzero");
    // complete splitting in Q(mu_m) <=> ell = 1 (mod m)
    for (std::uint64_t ell = m + 1;; ell += m) {
        if (ell <= 2) continue;
        if (!is_prime_u64(ell)) continue;
        if (std::find(skip.begin(), skip.end(), ell) != skip.end()) continue;
        if (mpz_divisible_ui_p(avoid.get_mpz_t(), ell)) continue;
        return ell;
    }
}

Int matrix_order_mod(const CycMatrix& M, std::uint64_t ell, std::uint64_t t) {
    const std::size_t n = M.dim();
    ModMatrix A(n, ell);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A.at(i, j) = embed_mod_ell(M.at(i, j), ell, t);
    if (A.det() == 0)
        throw std::domain_error("matrix_order_mod: singular reduction, pick another prime");

    // order divides |GL_n(F_ell)| = prod_i (ell^n - ell^i); factor the group
    // order and strip primes that keep A^e = I.
    const Int ell_z(static_cast<unsigned long>(ell));
    Int group_order = 1;
    const Int elln = int_pow(ell_z, static_cast<unsigned long>(n));
    Int elli = 1;
    for (std::size_t i = 0; i < n; ++i) {
        group_order *= elln - elli;
        elli *= ell_z;
    }
    Int order = group_order;
    for (const auto& [p, e] : factorize(group_order)) {
        (void)e;
        while (mpz_divisible_p(order.get_mpz_t(), p.get_mpz_t())) {
            Int cand = order / p;
            if (!A.pow(cand).is_identity()) break;
            order = cand;
        }
    }
    return order;
}

ZeroSetDecomposition zero_set_decompose(const Lrs& L, std::uint64_t K, std::uint64_t s) {
    if (s < 1) throw std::invalid_argument("zero_set_decompose: s must be positive");
    if (K < 4 * s)
        throw std::invalid_argument("zero_set_decompose: window too small, need K >= 4s");

    const std::vector<CycNum> xs = terms(L, K);
    std::vector<char> is_zero(K + 1);
    for (std::uint64_t k = 0; k <= K; ++k) is_zero[k] = xs[k].is_zero();

    ZeroSetDecomposition out;
    out.s = s;
    out.K = K;
    std::vector<char> covered(K + 1, 0);
    const std::uint64_t half = K / 2;
    for (std::uint64_t rho = 0; rho < s; ++rho) {
        // evidence: every sampled index of this class in [K/2, K] vanishes
        bool progression = false;
        for (std::uint64_t k = rho; k <= K; k += s) {
            if (k < half) continue;
            if (!is_zero[k]) { progression = false; break; }
            progression = true;
        }
        if (!progression) continue;
        // push the start down while the zeros continue
        std::uint64_t start = rho;
        for (std::uint64_t k = rho; k <= K; k += s)
            if (!is_zero[k]) start = k + s;
        out.progressions.emplace_back(start, s);
        for (std::uint64_t k = start; k <= K; k += s) covered[k] = 1;
    }
    for (std::uint64_t k = 0; k <= K; ++k)
        if (is_zero[k] && !covered[k]) out.exceptional.push_back(k);
    return out;
}

std::vector<SubfieldDesc> field_sequence(const Lrs& L, std::uint64_t K) {
    const std::vector<CycNum> xs = terms(L, K);
    std::vector<SubfieldDesc> out;
    out.reserve(xs.size());
    for (const CycNum& x : xs) out.push_back(fixing_subgroup(x));
    return out;
}

namespace detail {

PeriodReport detect_virtual_period_impl(std::size_t size,
                                        const std::function<bool(std::size_t, std::size_t)>& eq) {
    if (size < 2) throw std::invalid_argument("detect_virtual_period: need at least 2 values");
    const std::size_t W = size;
    PeriodReport rep;
    rep.K = W - 1;
    for (std::size_t r = 1; 2 * r <= W; ++r) {
        // minimal N for this r: one past the last disagreement
        std::size_t N = 0;
        for (std::size_t k = W - r; k-- > 0;) {
            if (!eq(k, k + r)) { N = k + 1; break; }
        }
        if (N <= W / 2 && N + 2 * r <= W) {
            rep.found = true;
            rep.N = N;
            rep.r = r;
            rep.certification = Certification::WindowOnly;
            return rep;
        }
    }
    rep.certification = Certification::Failed;
    return rep;
}

}  // namespace detail

PeriodReport verify_against_bound(PeriodReport report, const Int& R) {
    if (!report.found) throw std::invalid_argument("verify_against_bound: no detected period");
    report.R = R;
    if (mpz_divisible_ui_p(R.get_mpz_t(), report.r)) {
        if (report.certification < Certification::DividesBound)
            report.certification = Certification::DividesBound;
    } else {
        report.bound_violation = true;
    }
    return report;
}

SplitPrimeCertificate certified_multiple(const Lrs& L, std::span<const std::uint64_t> skip,
                                         std::optional<std::uint64_t> forced_ell) {
    auto [lambda, Lz] = normalize_integral(L);
    (void)lambda;  // scaling by lambda^{k+1} changes neither zeros nor fields
    const std::uint64_t m = Lz.modulus();
    const CompanionData cd = companion(Lz);

    Rat norm = field_norm(Lz.coeffs().back());
    Int avoid = norm.get_num();

    SplitPrimeCertificate cert;
    if (forced_ell) {
        const std::uint64_t ell = *forced_ell;
        if (ell <= 2 || !is_prime_u64(ell) || (ell - 1) % m != 0)
            throw std::invalid_argument("certified_multiple: ell must be an odd prime = 1 mod m");
        if (mpz_divisible_ui_p(avoid.get_mpz_t(), ell))
            throw std::invalid_argument("certified_multiple: ell divides the norm of c_n");
        cert.ell = ell;
    } else {
        cert.ell = find_split_prime(m, avoid, skip);
    }
    cert.t = element_of_order(cert.ell, m);
    for (std::uint64_t j : units_mod(m)) {
        Int s = matrix_order_mod(cd.M.galois(j), cert.ell, cert.t);
        mpz_lcm(cert.s_ell.get_mpz_t(), cert.s_ell.get_mpz_t(), s.get_mpz_t());
    }
    return cert;
}

std::uint64_t default_window(std::uint64_t m, std::uint64_t n) {
    BoundReport b = bound_R(m, std::min<std::uint64_t>(n, 3));
    Int w = 8 * b.R;
    std::uint64_t K = 200;
    if (w > 10000) {
        K = 10000;
    } else if (w > 200) {
        K = static_cast<std::uint64_t>(w.get_ui());
    }
    return K;
}

LrsAnalysis analyze_lrs(const Lrs& L, std::uint64_t K, std::span<const std::uint64_t> skip,
                        std::optional<std::uint64_t> forced_ell) {
    LrsAnalysis out;
    out.fields = field_sequence(L, K);
    out.degrees.reserve(out.fields.size());
    for (const auto& f : out.fields) out.degrees.push_back(f.degree);

    out.period = detect_virtual_period<SubfieldDesc>(
        std::span<const SubfieldDesc>(out.fields),
        [](const SubfieldDesc& a, const SubfieldDesc& b) { return field_equal(a, b); });

    out.bound_n = bound_R(L.modulus(), L.dim());
    out.bound_2n = bound_R(L.modulus(), 2 * L.dim());
    if (out.period.found) {
        out.divides_R_n = mpz_divisible_ui_p(out.bound_n.R.get_mpz_t(), out.period.r);
        out.divides_R_2n = mpz_divisible_ui_p(out.bound_2n.R.get_mpz_t(), out.period.r);
        out.period = verify_against_bound(out.period, out.bound_n.R);
    }

    try {
        SplitPrimeCertificate cert = certified_multiple(L, skip, forced_ell);
        if (out.period.found &&
            mpz_divisible_ui_p(cert.s_ell.get_mpz_t(), out.period.r)) {
            out.period.certification = Certification::CertifiedMultiple;
        }
        out.period.s_ell = cert.s_ell;
        out.period.ell = cert.ell;
        out.certificate = cert;
    } catch (const std::domain_error&) {
        // singular reduction for every tried prime is not expected; leave
        // the certificate unset and keep the window-level report
    }

    // zero-set modulus: the detected period of the zero-indicator sequence
    const std::vector<CycNum> xs = terms(L, K);
    std::vector<char> zero_pattern(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) zero_pattern[i] = xs[i].is_zero();
    PeriodReport zp = detect_virtual_period<char>(std::span<const char>(zero_pattern));
    std::uint64_t s = (zp.found && 4 * zp.r <= K) ? zp.r : 1;
    out.zero_modulus = s;
    out.zeros = zero_set_decompose(L, K, s);
    return out;
}

}  // namespace vperiod
