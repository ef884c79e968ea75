#include "vperiod/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace vperiod {

std::string rat_to_string(const Rat& x) {
    return x.get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t i = 0;
    if (s[i] == '-' || s[i] == '+') ++i;
    bool digits = false, slash = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits = true;
        } else if (s[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            throw std::invalid_argument("malformed rational literal: " + s);
        }
    }
    if (!digits) throw std::invalid_argument("malformed rational literal: " + s);
    Rat x;
    if (x.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
    if (x.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    x.canonicalize();
    return x;
}

std::string int_to_string(const Int& x) {
    return x.get_str();
}

bool is_prime_u64(std::uint64_t n) {
    Int z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    return mpz_probab_prime_p(z.get_mpz_t(), 32) > 0;
}

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    if (n < 0) n = -n;
    if (n <= 1) return {};
    std::vector<std::pair<Int, unsigned>> out;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    Int p = 3;
    bool fresh_cofactor = true;  // n changed since the last primality probe
    while (p * p <= n) {
        // once the cofactor is prime we are done; keeps big prime factors cheap
        if (fresh_cofactor) {
            if (mpz_probab_prime_p(n.get_mpz_t(), 32) > 0) break;
            fresh_cofactor = false;
        }
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            strip(p);
            fresh_cofactor = true;
        }
        p += 2;
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

unsigned int_ord_p(Int n, const Int& p) {
    if (n == 0) throw std::invalid_argument("ord_p of zero");
    if (n < 0) n = -n;
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % mod);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    base %= mod;
    while (e) {
        if (e & 1) r = mulmod_u64(r, base, mod);
        base = mulmod_u64(base, base, mod);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t mod) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(mod), nr = static_cast<std::int64_t>(a % mod);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::invalid_argument("invmod: arguments not coprime");
    if (t < 0) t += static_cast<std::int64_t>(mod);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t mult_order_mod(std::uint64_t t, std::uint64_t ell) {
    if (t % ell == 0) throw std::invalid_argument("mult_order_mod: t divisible by ell");
    std::uint64_t order = ell - 1;
    for (const auto& [p, e] : factorize_u64(ell - 1)) {
        (void)e;
        while (order % p == 0 && powmod_u64(t, order / p, ell) == 1) order /= p;
    }
    return order;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) { a %= b; std::swap(a, b); }
    return a;
}

std::uint64_t euler_phi(std::uint64_t m) {
    std::uint64_t r = m;
    for (const auto& [p, e] : factorize_u64(m)) {
        (void)e;
        r -= r / p;
    }
    return m == 0 ? 0 : (m == 1 ? 1 : r);
}

std::vector<std::uint64_t> units_mod(std::uint64_t m) {
    if (m <= 2) return {1};
    std::vector<std::uint64_t> out;
    for (std::uint64_t j = 1; j < m; ++j)
        if (gcd_u64(j, m) == 1) out.push_back(j);
    return out;
}

std::uint64_t smallest_primitive_root(std::uint64_t ell) {
    if (ell == 2) return 1;
    auto fac = factorize_u64(ell - 1);
    for (std::uint64_t g = 2; g < ell; ++g) {
        bool primitive = true;
        for (const auto& [p, e] : fac) {
            (void)e;
            if (powmod_u64(g, (ell - 1) / p, ell) == 1) { primitive = false; break; }
        }
        if (primitive) return g;
    }
    throw std::logic_error("no primitive root found; ell not prime?");
}

std::uint64_t element_of_order(std::uint64_t ell, std::uint64_t m) {
    if (m == 0 || (ell - 1) % m != 0)
        throw std::invalid_argument("element_of_order: m does not divide ell-1");
    if (m == 1) return 1;
    std::uint64_t g = smallest_primitive_root(ell);
    return powmod_u64(g, (ell - 1) / m, ell);
}

}  // namespace vperiod
