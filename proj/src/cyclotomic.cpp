#include "vperiod/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace vperiod {

namespace {

// Exact division of integer polynomials; the divisor must be monic and the
// remainder must vanish.
std::vector<Int> exact_div(std::vector<Int> num, const std::vector<Int>& den) {
    const std::size_t dn = num.size() - 1, dd = den.size() - 1;
    if (dn < dd) throw std::logic_error("exact_div: degree underflow");
    std::vector<Int> q(dn - dd + 1);
    for (std::size_t i = dn + 1; i-- > dd;) {
        Int c = num[i];
        q[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t m) {
    std::vector<std::uint64_t> ds;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d) continue;
        ds.push_back(d);
        if (d != m / d) ds.push_back(m / d);
    }
    return ds;
}

std::mutex g_cache_mutex;
std::map<std::uint64_t, std::vector<Int>> g_phi_cache;
std::map<std::uint64_t, std::shared_ptr<const detail::CycBasis>> g_basis_cache;

// Caller holds g_cache_mutex.
const std::vector<Int>& phi_locked(std::uint64_t m) {
    auto it = g_phi_cache.find(m);
    if (it != g_phi_cache.end()) return it->second;

    // x^m - 1 divided by Phi_d for every proper divisor d of m.
    std::vector<Int> num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (std::uint64_t d : divisors_of(m))
        if (d != m) num = exact_div(std::move(num), phi_locked(d));
    return g_phi_cache.emplace(m, std::move(num)).first->second;
}

}  // namespace

CycPoly cyclotomic_polynomial(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return CycPoly{m, phi_locked(m)};
}

namespace detail {

std::shared_ptr<const CycBasis> CycBasis::get(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("CycBasis: m must be positive");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_basis_cache.find(m);
    if (it != g_basis_cache.end()) return it->second;

    auto basis = std::make_shared<CycBasis>();
    basis->m = m;
    basis->phi = phi_locked(m);
    basis->degree = basis->phi.size() - 1;
    const std::size_t D = basis->degree;

    // zeta^e in the power basis: repeated shift-by-x with the monic reduction
    // x^D = -sum_{i<D} phi_i x^i.
    basis->zeta_pow.assign(m, std::vector<Int>(D));
    basis->zeta_pow[0][0] = 1;
    for (std::uint64_t e = 1; e < m; ++e) {
        const auto& prev = basis->zeta_pow[e - 1];
        auto& cur = basis->zeta_pow[e];
        Int top = prev[D - 1];
        for (std::size_t i = D; i-- > 1;) cur[i] = prev[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (std::size_t i = 0; i < D; ++i) cur[i] -= top * basis->phi[i];
    }
    g_basis_cache.emplace(m, basis);
    return basis;
}

}  // namespace detail

CycNum CycNum::zero(std::uint64_t m) {
    auto basis = detail::CycBasis::get(m);
    std::vector<Rat> c(basis->degree);
    return CycNum(std::move(basis), std::move(c));
}

CycNum CycNum::one(std::uint64_t m) { return from_rational(m, Rat(1)); }

CycNum CycNum::from_rational(std::uint64_t m, const Rat& x) {
    auto basis = detail::CycBasis::get(m);
    std::vector<Rat> c(basis->degree);
    c[0] = x;
    c[0].canonicalize();
    return CycNum(std::move(basis), std::move(c));
}

CycNum CycNum::root_power(std::uint64_t m, std::int64_t e) {
    auto basis = detail::CycBasis::get(m);
    std::int64_t mm = static_cast<std::int64_t>(m);
    std::int64_t r = ((e % mm) + mm) % mm;
    const auto& row = basis->zeta_pow[static_cast<std::size_t>(r)];
    std::vector<Rat> c(basis->degree);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rat(row[i]);
    return CycNum(std::move(basis), std::move(c));
}

CycNum CycNum::from_coeffs(std::uint64_t m, std::vector<Rat> coeffs) {
    auto basis = detail::CycBasis::get(m);
    if (coeffs.size() != basis->degree)
        throw std::invalid_argument("CycNum::from_coeffs: expected phi(m) coefficients");
    for (auto& x : coeffs) x.canonicalize();
    return CycNum(std::move(basis), std::move(coeffs));
}

bool CycNum::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CycNum::is_integral() const {
    for (const Rat& x : c_)
        if (x.get_den() != 1) return false;
    return true;
}

Rat CycNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("CycNum: not a rational value");
    return c_[0];
}

void CycNum::check_same_modulus(const CycNum& o) const {
    if (modulus() != o.modulus())
        throw std::invalid_argument("CycNum: modulus mismatch (" + std::to_string(modulus()) +
                                    " vs " + std::to_string(o.modulus()) + ")");
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    check_same_modulus(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    check_same_modulus(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    check_same_modulus(o);
    const std::size_t D = basis_->degree;
    std::vector<Rat> prod(2 * D - 1);
    for (std::size_t i = 0; i < D; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < D; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rat> out(D);
    for (std::size_t i = 0; i < D && i < prod.size(); ++i) out[i] = std::move(prod[i]);
    // exponents >= phi(m) fold through zeta^e = zeta^{e mod m}
    for (std::size_t e = D; e < prod.size(); ++e) {
        if (prod[e] == 0) continue;
        const auto& row = basis_->zeta_pow[e % basis_->m];
        for (std::size_t i = 0; i < D; ++i)
            if (row[i] != 0) out[i] += prod[e] * Rat(row[i]);
    }
    c_ = std::move(out);
    return *this;
}

CycNum& CycNum::operator*=(const Rat& s) {
    for (Rat& x : c_) x *= s;
    return *this;
}

CycNum CycNum::pow(std::uint64_t e) const {
    CycNum r = one(modulus());
    CycNum b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycNum: division by zero");
    const std::size_t D = basis_->degree;
    if (is_rational()) {
        Rat inv = 1 / c_[0];
        return from_rational(modulus(), inv);
    }
    // Extended Euclid in Q[x] for (a, Phi_m); Phi_m is irreducible over Q so
    // the gcd is a nonzero constant g and u*a = g (mod Phi_m).
    using Poly = std::vector<Rat>;
    auto deg = [](const Poly& p) -> std::ptrdiff_t {
        for (std::size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<std::ptrdiff_t>(i);
        return -1;
    };
    Poly r0(basis_->phi.size());
    for (std::size_t i = 0; i < basis_->phi.size(); ++i) r0[i] = Rat(basis_->phi[i]);
    Poly r1 = c_;
    Poly u0(1), u1(1);
    u0[0] = 0;
    u1[0] = 1;
    while (true) {
        std::ptrdiff_t d1 = deg(r1);
        if (d1 < 0) throw std::logic_error("CycNum::inverse: gcd chain collapsed");
        if (d1 == 0) {
            Rat g = r1[0];
            std::vector<Rat> out(D);
            for (std::size_t i = 0; i < u1.size() && i < D; ++i) out[i] = u1[i] / g;
            return CycNum(basis_, std::move(out));
        }
        // r0 = q*r1 + r; u0 -> u0 - q*u1
        Poly rem = r0;
        Poly q(static_cast<std::size_t>(deg(r0) - d1) + 1);
        for (std::ptrdiff_t i = deg(rem); i >= d1; --i) {
            if (rem[static_cast<std::size_t>(i)] == 0) continue;
            Rat f = rem[static_cast<std::size_t>(i)] / r1[static_cast<std::size_t>(d1)];
            q[static_cast<std::size_t>(i - d1)] = f;
            for (std::ptrdiff_t k = 0; k <= d1; ++k)
                rem[static_cast<std::size_t>(i - d1 + k)] -= f * r1[static_cast<std::size_t>(k)];
        }
        Poly unew(std::max(u0.size(), q.size() + u1.size()));
        for (std::size_t i = 0; i < u0.size(); ++i) unew[i] = u0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t k = 0; k < u1.size(); ++k) unew[i + k] -= q[i] * u1[k];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(unew);
    }
}

CycNum CycNum::galois(std::uint64_t j) const {
    const std::uint64_t m = modulus();
    if (gcd_u64(j % m == 0 ? m : j % m, m) != 1)
        throw std::invalid_argument("CycNum::galois: j not coprime to m");
    const std::size_t D = basis_->degree;
    std::vector<Rat> out(D);
    for (std::size_t i = 0; i < D; ++i) {
        if (c_[i] == 0) continue;
        const auto& row = basis_->zeta_pow[(i * (j % m)) % m];
        for (std::size_t k = 0; k < D; ++k)
            if (row[k] != 0) out[k] += c_[i] * Rat(row[k]);
    }
    return CycNum(basis_, std::move(out));
}

CycNum CycNum::lift(std::uint64_t m2) const {
    const std::uint64_t m = modulus();
    if (m2 % m != 0) throw std::invalid_argument("CycNum::lift: m must divide target modulus");
    if (m2 == m) return *this;
    auto basis2 = detail::CycBasis::get(m2);
    const std::uint64_t f = m2 / m;
    std::vector<Rat> out(basis2->degree);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const auto& row = basis2->zeta_pow[(i * f) % m2];
        for (std::size_t k = 0; k < out.size(); ++k)
            if (row[k] != 0) out[k] += c_[i] * Rat(row[k]);
    }
    return CycNum(std::move(basis2), std::move(out));
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << rat_to_string(c_[i]);
        if (i >= 1) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::uint64_t embed_mod_ell(const CycNum& a, std::uint64_t ell, std::uint64_t t) {
    const std::uint64_t m = a.modulus();
    if ((ell - 1) % m != 0)
        throw std::invalid_argument("embed_mod_ell: ell is not 1 mod m");
    if (mult_order_mod(t % ell, ell) != m)
        throw std::invalid_argument("embed_mod_ell: t does not have order m");
    if (!a.is_integral())
        throw std::invalid_argument("embed_mod_ell: non-integral coefficients");
    std::uint64_t acc = 0, tp = 1;
    for (const Rat& x : a.coeffs()) {
        Int num = x.get_num();
        std::uint64_t r = mpz_fdiv_ui(num.get_mpz_t(), ell);  // nonnegative residue
        acc = (acc + mulmod_u64(r, tp, ell)) % ell;
        tp = mulmod_u64(tp, t, ell);
    }
    return acc;
}

Rat field_norm(const CycNum& a) {
    CycNum prod = CycNum::one(a.modulus());
    for (std::uint64_t j : units_mod(a.modulus())) prod *= a.galois(j);
    if (!prod.is_rational()) throw std::logic_error("field_norm: product of conjugates not rational");
    return prod.rational_value();
}

}  // namespace vperiod
