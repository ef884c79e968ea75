#include "vperiod/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace vperiod {

namespace {

using Poly = std::vector<std::uint32_t>;  // coeff of x^i at index i, over F_p

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    // reduce modulo the monic polynomial `mod`
    const std::size_t dm = mod.size() - 1;
    for (std::size_t i = prod.size(); i-- > dm;) {
        std::uint32_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::size_t k = 0; k < dm; ++k) {
            std::uint64_t sub = static_cast<std::uint64_t>(c) * mod[k] % p;
            prod[i - dm + k] = static_cast<std::uint32_t>((prod[i - dm + k] + p - sub) % p);
        }
    }
    prod.resize(std::min(prod.size(), dm));
    trim(prod);
    return prod;
}

Poly poly_pow_mod(Poly base, Int e, const Poly& mod, std::uint64_t p) {
    Poly r = {1};
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mul_mod(r, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        const std::size_t db = b.size() - 1;
        std::uint64_t lead_inv = invmod_u64(b[db], p);
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t c = mulmod_u64(a.back(), lead_inv, p);
            std::size_t shift = a.size() - b.size();
            for (std::size_t k = 0; k < b.size(); ++k) {
                std::uint64_t sub = mulmod_u64(c, b[k], p);
                a[shift + k] = static_cast<std::uint32_t>((a[shift + k] + p - sub) % p);
            }
            trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

// Rabin irreducibility test over F_p.
bool is_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t d = f.size() - 1;
    if (d == 0) return false;
    const Poly x = {0, 1};
    // x^(p^d) = x (mod f)
    Int pd = int_pow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
    Poly xp = poly_pow_mod(x, pd, f, p);
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
    trim(diff);
    if (!diff.empty()) return false;
    // gcd(x^(p^(d/r)) - x, f) = 1 for each prime r | d
    for (const auto& [r, e] : factorize_u64(d)) {
        (void)e;
        Int pe = int_pow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d / r));
        Poly xr = poly_pow_mod(x, pe, f, p);
        Poly g = xr;
        if (g.size() < 2) g.resize(2, 0);
        g[1] = static_cast<std::uint32_t>((g[1] + p - 1) % p);
        trim(g);
        Poly gc = poly_gcd(f, g, p);
        if (gc.size() != 1) return false;
    }
    return true;
}

std::mutex g_field_mutex;
std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const GaloisField>> g_field_cache;

}  // namespace

std::shared_ptr<const GaloisField> GaloisField::make(std::uint64_t p, unsigned d,
                                                     std::uint64_t max_q) {
    if (!is_prime_u64(p)) throw std::invalid_argument("GaloisField: p must be prime");
    if (d < 1) throw std::invalid_argument("GaloisField: degree must be >= 1");
    Int q = int_pow(Int(static_cast<unsigned long>(p)), d);
    if (q > Int(static_cast<unsigned long>(std::min(max_q, kMaxQInternal))))
        throw std::invalid_argument("GaloisField: p^d exceeds the element cap");

    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto key = std::make_pair(p, d);
    auto it = g_field_cache.find(key);
    if (it != g_field_cache.end()) return it->second;
    auto F = std::shared_ptr<GaloisField>(new GaloisField());
    F->build(p, d);
    g_field_cache.emplace(key, F);
    return F;
}

void GaloisField::build(std::uint64_t p, unsigned d) {
    p_ = p;
    d_ = d;
    q_ = 1;
    for (unsigned i = 0; i < d; ++i) q_ *= p;

    // smallest irreducible: scan non-leading coefficient encodings upward
    poly_.assign(d + 1, 0);
    poly_[d] = 1;
    if (d == 1) {
        // x itself; arithmetic is plain mod p
        poly_[0] = 0;
    } else {
        bool found = false;
        for (std::uint64_t enc = 0; enc < q_ && !found; ++enc) {
            std::uint64_t v = enc;
            for (unsigned i = 0; i < d; ++i) {
                poly_[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (poly_[0] == 0) continue;  // divisible by x
            Poly f(poly_.begin(), poly_.end());
            if (is_irreducible(f, p)) found = true;
        }
        if (!found) throw std::logic_error("GaloisField: no irreducible found");
    }

    // trace of basis monomials: Tr(x^i) = sum_j (x^i)^(p^j)
    trace_basis_.assign(d, 0);
    {
        Poly mod(poly_.begin(), poly_.end());
        for (unsigned i = 0; i < d; ++i) {
            Poly xi(i + 1, 0);
            xi[i] = 1;
            std::uint64_t tr = 0;
            Poly fr = xi;
            for (unsigned j = 0; j < d; ++j) {
                tr = (tr + (fr.empty() ? 0 : fr[0])) % p;
                // additive contributions beyond the constant term cancel in
                // the sum; accumulate the full polynomial instead
                if (j + 1 < d) fr = poly_pow_mod(fr, Int(static_cast<unsigned long>(p)), mod, p);
            }
            trace_basis_[i] = static_cast<std::uint32_t>(tr);
        }
    }

    // smallest primitive element
    auto fac = factorize_u64(q_ - 1);
    auto order_is_full = [&](std::uint64_t a) {
        for (const auto& [r, e] : fac) {
            (void)e;
            if (pow(a, static_cast<std::int64_t>((q_ - 1) / r)) == 1) return false;
        }
        return true;
    };
    g_ = 0;
    for (std::uint64_t a = q_ == 2 ? 1 : 2; a < q_; ++a) {
        if (order_is_full(a)) {
            g_ = a;
            break;
        }
    }
    if (g_ == 0) throw std::logic_error("GaloisField: no primitive element found");

    if (q_ <= (1u << 20)) {
        exp_.resize(q_ - 1);
        log_.assign(q_, 0);
        std::uint64_t cur = 1;
        for (std::uint64_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = static_cast<std::uint32_t>(cur);
            log_[cur] = static_cast<std::uint32_t>(i);
            cur = d_ == 1 ? mulmod_u64(cur, g_, p_) : mul_poly(cur, g_);
        }
        if (cur != 1) throw std::logic_error("GaloisField: generator order mismatch");
        tables_ready_ = true;
    }
}

std::uint64_t GaloisField::add(std::uint64_t a, std::uint64_t b) const {
    if (d_ == 1) return (a + b) % p_;
    std::uint64_t r = 0, mult = 1;
    for (unsigned i = 0; i < d_; ++i) {
        r += ((a % p_) + (b % p_)) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

std::uint64_t GaloisField::sub(std::uint64_t a, std::uint64_t b) const {
    return add(a, neg(b));
}

std::uint64_t GaloisField::neg(std::uint64_t a) const {
    if (d_ == 1) return (p_ - a) % p_;
    std::uint64_t r = 0, mult = 1;
    for (unsigned i = 0; i < d_; ++i) {
        r += ((p_ - (a % p_)) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

std::uint64_t GaloisField::mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (d_ == 1) return mulmod_u64(a, b, p_);
    if (tables_ready_)
        return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
    return mul_poly(a, b);
}

std::uint64_t GaloisField::mul_poly(std::uint64_t a, std::uint64_t b) const {
    std::uint32_t da[32], db[32];
    std::uint64_t ta = a, tb = b;
    for (unsigned i = 0; i < d_; ++i) {
        da[i] = static_cast<std::uint32_t>(ta % p_);
        ta /= p_;
        db[i] = static_cast<std::uint32_t>(tb % p_);
        tb /= p_;
    }
    std::uint64_t prod[64] = {0};
    for (unsigned i = 0; i < d_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < d_; ++j)
            if (db[j] != 0) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
    }
    for (unsigned i = 2 * d_ - 2 + 1; i-- > d_;) {
        std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (unsigned k = 0; k < d_; ++k) {
            std::uint64_t s = c * poly_[k] % p_;
            prod[i - d_ + k] = (prod[i - d_ + k] + p_ - s) % p_;
        }
    }
    std::uint64_t r = 0, mult = 1;
    for (unsigned i = 0; i < d_; ++i) {
        r += prod[i] * mult;
        mult *= p_;
    }
    return r;
}

std::uint64_t GaloisField::pow(std::uint64_t a, std::int64_t e) const {
    if (a == 0) {
        if (e <= 0) throw std::domain_error("GaloisField::pow: 0 to a nonpositive power");
        return 0;
    }
    std::uint64_t ord = q_ - 1;
    std::uint64_t ee = static_cast<std::uint64_t>(((e % static_cast<std::int64_t>(ord)) +
                                                   static_cast<std::int64_t>(ord)) %
                                                  static_cast<std::int64_t>(ord));
    std::uint64_t r = 1, b = a;
    while (ee) {
        if (ee & 1) r = mul(r, b);
        b = mul(b, b);
        ee >>= 1;
    }
    return r;
}

std::uint64_t GaloisField::inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("GaloisField::inv: zero");
    return pow(a, static_cast<std::int64_t>(q_ - 2));
}

std::uint64_t GaloisField::exp_g(std::uint64_t i) const {
    i %= (q_ - 1);
    if (!exp_.empty()) return exp_[i];
    return pow(g_, static_cast<std::int64_t>(i));
}

std::uint64_t GaloisField::dlog(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("GaloisField::dlog: zero");
    if (!log_.empty()) return log_[a];
    // baby-step/giant-step with a cached baby table
    static std::mutex bsgs_mutex;
    std::lock_guard<std::mutex> lock(bsgs_mutex);
    if (bsgs_baby_.empty()) {
        std::uint64_t mstep = 1;
        while (mstep * mstep < q_ - 1) ++mstep;
        bsgs_step_ = mstep;
        std::uint64_t cur = 1;
        for (std::uint64_t jj = 0; jj < mstep; ++jj) {
            bsgs_baby_.emplace(cur, jj);
            cur = mul(cur, g_);
        }
        bsgs_giant_ = inv(cur);  // g^{-m}
    }
    std::uint64_t x = a;
    for (std::uint64_t i = 0; i < bsgs_step_ + 1; ++i) {
        auto it = bsgs_baby_.find(x);
        if (it != bsgs_baby_.end()) return (i * bsgs_step_ + it->second) % (q_ - 1);
        x = mul(x, bsgs_giant_);
    }
    throw std::logic_error("GaloisField::dlog: not found");
}

std::uint64_t GaloisField::trace_to_prime(std::uint64_t a) const {
    std::uint64_t tr = 0, ta = a;
    for (unsigned i = 0; i < d_; ++i) {
        tr = (tr + static_cast<std::uint64_t>(ta % p_) * trace_basis_[i]) % p_;
        ta /= p_;
    }
    return tr;
}

std::uint64_t GaloisField::element_from_int(Int v) const {
    Int r = v % static_cast<unsigned long>(p_);
    if (r < 0) r += static_cast<unsigned long>(p_);
    return r.get_ui();
}

FieldEmbedding::FieldEmbedding(std::shared_ptr<const GaloisField> base,
                               std::shared_ptr<const GaloisField> ext)
    : base_(std::move(base)), ext_(std::move(ext)) {
    if (base_->p() != ext_->p() || ext_->degree() % base_->degree() != 0)
        throw std::invalid_argument("FieldEmbedding: base must sit inside the extension");
    norm_index_ = (ext_->q() - 1) / (base_->q() - 1);

    if (base_->degree() == ext_->degree()) {
        root_ = 0;  // unused; apply() is the identity
        w_unit_inv_ = 1;
        return;
    }

    if (base_->degree() == 1) {
        // prime field: constants carry over encoding-for-encoding
        root_ = 0;
    } else {
        // image of x: root of the base defining polynomial with smallest dlog
        const auto& f = base_->defining_poly();
        bool found = false;
        std::uint64_t r = 1;  // g^0
        for (std::uint64_t i = 0; i < ext_->q() - 1; ++i) {
            std::uint64_t acc = f.back() % ext_->p();  // Horner
            for (std::size_t k = f.size() - 1; k-- > 0;)
                acc = ext_->add(ext_->mul(acc, r), f[k] % ext_->p());
            if (acc == 0) {
                found = true;
                break;
            }
            r = ext_->mul(r, ext_->generator());
        }
        if (!found) throw std::logic_error("FieldEmbedding: no root of base polynomial found");
        root_ = r;
    }

    // dlog of the image of the base generator factors as w' * norm_index_
    std::uint64_t img_g = apply(base_->generator());
    std::uint64_t w = ext_->dlog(img_g);
    if (w % norm_index_ != 0) throw std::logic_error("FieldEmbedding: generator image order broken");
    std::uint64_t w_unit = (w / norm_index_) % (base_->q() - 1);
    w_unit_inv_ = invmod_u64(w_unit, base_->q() - 1);

    // spot-check the ring homomorphism
    std::uint64_t probes[4] = {1 % base_->q(), base_->generator(), (base_->q() - 1) % base_->q(),
                               base_->generator() * 2 % base_->q()};
    for (std::uint64_t a : probes)
        for (std::uint64_t b : probes) {
            if (apply(base_->mul(a, b)) != ext_->mul(apply(a), apply(b)))
                throw std::logic_error("FieldEmbedding: multiplicativity check failed");
            if (apply(base_->add(a, b)) != ext_->add(apply(a), apply(b)))
                throw std::logic_error("FieldEmbedding: additivity check failed");
        }
}

std::uint64_t FieldEmbedding::apply(std::uint64_t base_elem) const {
    if (base_->degree() == ext_->degree()) return base_elem;
    // evaluate the representing polynomial at root_
    std::uint64_t acc = 0;
    std::uint64_t digits[32];
    std::uint64_t v = base_elem;
    for (unsigned i = 0; i < base_->degree(); ++i) {
        digits[i] = v % base_->p();
        v /= base_->p();
    }
    for (unsigned i = base_->degree(); i-- > 0;)
        acc = ext_->add(ext_->mul(acc, root_), digits[i]);
    return acc;
}

std::uint64_t FieldEmbedding::norm_dlog_from_ext_dlog(std::uint64_t ext_dlog) const {
    // N(g^e) = g^(e * norm_index_); as a base element this is
    // g_base^(e * w_unit_inv_ mod (q-1)).
    const std::uint64_t qb = base_->q() - 1;
    return mulmod_u64(ext_dlog % qb, w_unit_inv_ % qb, qb);
}

std::uint64_t FieldEmbedding::norm_to_base(std::uint64_t ext_elem) const {
    if (ext_elem == 0) throw std::domain_error("norm_to_base: zero");
    if (base_->degree() == ext_->degree()) return ext_elem;
    std::uint64_t e = ext_->dlog(ext_elem);
    std::uint64_t i_b = norm_dlog_from_ext_dlog(e);
    return base_->pow(base_->generator(), static_cast<std::int64_t>(i_b));
}

}  // namespace vperiod
