#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "vperiod/cyclotomic.hpp"

using namespace vperiod;
using vperiod::testing::Rng;
using vperiod::testing::random_cycnum;
using vperiod::testing::random_nonzero_cycnum;

namespace {

// Independent recomputation for the oracle: divide x^m - 1 by the already
// verified lower Phi_d, written without the library's division helper.
std::vector<long> naive_phi(std::uint64_t m,
                            const std::map<std::uint64_t, std::vector<long>>& lower) {
    std::vector<long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (std::uint64_t d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const auto& den = lower.at(d);
        const std::size_t dd = den.size() - 1;
        std::vector<long> q(num.size() - dd, 0);
        for (std::size_t sh = q.size(); sh-- > 0;) {
            long c = num[sh + dd];
            if (c == 0) continue;
            q[sh] = c;
            for (std::size_t k = 0; k <= dd; ++k) num[sh + k] -= c * den[k];
        }
        for (long rem : num) REQUIRE(rem == 0);
        num = q;
    }
    return num;
}

}  // namespace

TEST_CASE("cyclotomic polynomial base cases and m=12") {
    CycPoly p1 = cyclotomic_polynomial(1);
    CHECK(p1.coeffs == std::vector<Int>{-1, 1});  // x - 1
    CycPoly p2 = cyclotomic_polynomial(2);
    CHECK(p2.coeffs == std::vector<Int>{1, 1});  // x + 1
    CycPoly p12 = cyclotomic_polynomial(12);
    CHECK(p12.coeffs == std::vector<Int>{1, 0, -1, 0, 1});  // x^4 - x^2 + 1

    // oracle: rebuild Phi_m for m <= 16 by independent exact division
    std::map<std::uint64_t, std::vector<long>> lower;
    for (std::uint64_t m = 1; m <= 16; ++m) {
        lower[m] = naive_phi(m, lower);
        CycPoly lib = cyclotomic_polynomial(m);
        REQUIRE(lib.coeffs.size() == lower[m].size());
        for (std::size_t i = 0; i < lower[m].size(); ++i)
            CHECK(lib.coeffs[i] == Int(lower[m][i]));
    }
}

TEST_CASE("root powers") {
    CHECK(CycNum::root_power(4, 0) == CycNum::one(4));
    CHECK(CycNum::root_power(4, 2) == CycNum::from_int(4, -1));
    // zeta_3 inside Q(mu_12): cube must be 1
    CycNum z3 = CycNum::root_power(12, 4);
    CHECK(z3.pow(3) == CycNum::one(12));
    CHECK_FALSE(z3 == CycNum::one(12));
    // negative exponents wrap
    CHECK(CycNum::root_power(4, -1) == CycNum::root_power(4, 3));
}

TEST_CASE("field arithmetic examples") {
    CycNum i4 = CycNum::root_power(4, 1);
    CHECK(i4 * i4 == CycNum::from_int(4, -1));

    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        CycNum a = random_cycnum(rng, 12);
        CHECK(a + CycNum::zero(12) == a);
    }

    // zeta_3 + zeta_3^2 = -1, at both the odd modulus and inside Q(mu_12)
    CHECK(CycNum::root_power(3, 1) + CycNum::root_power(3, 2) == CycNum::from_int(3, -1));
    CHECK(CycNum::root_power(12, 4) + CycNum::root_power(12, 8) == CycNum::from_int(12, -1));

    CHECK_THROWS_AS(CycNum::one(4) + CycNum::one(8), std::invalid_argument);
}

TEST_CASE("inverse") {
    CHECK(CycNum::one(4).inverse() == CycNum::one(4));
    CycNum i4 = CycNum::root_power(4, 1);
    CHECK(i4.inverse() == -i4);
    CHECK(CycNum::from_int(8, 2).inverse() == CycNum::from_rational(8, Rat(1, 2)));
    CHECK_THROWS_AS(CycNum::zero(4).inverse(), std::domain_error);

    Rng rng(11);
    for (std::uint64_t m : {1, 2, 3, 4, 8, 12}) {
        for (int t = 0; t < 10; ++t) {
            CycNum a = random_nonzero_cycnum(rng, m);
            CHECK(a * a.inverse() == CycNum::one(m));
        }
    }
}

TEST_CASE("galois action") {
    Rng rng(13);
    CycNum a = random_cycnum(rng, 12);
    CHECK(a.galois(1) == a);

    CycNum i4 = CycNum::root_power(4, 1);
    CHECK(i4.galois(3) == -i4);

    // sigma_5 composed with itself is the identity on Q(mu_12)
    CycNum b = CycNum::root_power(12, 1);
    CHECK(b.galois(5) == CycNum::root_power(12, 5));
    CHECK(b.galois(5).galois(5) == b);

    CHECK_THROWS_AS(b.galois(2), std::invalid_argument);

    SUBCASE("homomorphism and group law") {
        for (std::uint64_t m : {4, 8, 12}) {
            auto units = units_mod(m);
            std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
            for (int t = 0; t < 15; ++t) {
                CycNum x = random_cycnum(rng, m);
                CycNum y = random_cycnum(rng, m);
                std::uint64_t j = units[pick(rng)], j2 = units[pick(rng)];
                CHECK((x * y).galois(j) == x.galois(j) * y.galois(j));
                CHECK((x + y).galois(j) == x.galois(j) + y.galois(j));
                CHECK(x.galois(j).galois(j2) == x.galois(j * j2 % m));
            }
        }
    }
}

TEST_CASE("embed_mod_ell") {
    CHECK(embed_mod_ell(CycNum::one(4), 5, 2) == 1);
    CHECK(embed_mod_ell(CycNum::root_power(4, 1), 5, 2) == 2);
    // zeta_4 + zeta_4^3 = 0 exactly, so its image must vanish
    CycNum s = CycNum::root_power(4, 1) + CycNum::root_power(4, 3);
    CHECK(s.is_zero());
    CHECK(embed_mod_ell(s, 5, 2) == 0);

    CHECK_THROWS_AS(embed_mod_ell(CycNum::one(4), 7, 2), std::invalid_argument);   // 7 != 1 mod 4
    CHECK_THROWS_AS(embed_mod_ell(CycNum::one(4), 5, 4), std::invalid_argument);   // 4 has order 2
    CHECK_THROWS_AS(embed_mod_ell(CycNum::from_rational(4, Rat(1, 2)), 5, 2),
                    std::invalid_argument);  // non-integral

    SUBCASE("ring homomorphism on random integral values") {
        Rng rng(17);
        std::uniform_int_distribution<long> coeff(-20, 20);
        const std::uint64_t m = 12, ell = 13;
        const std::uint64_t t = element_of_order(ell, m);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Rat> ca(euler_phi(m)), cb(euler_phi(m));
            for (auto& x : ca) x = Rat(coeff(rng));
            for (auto& x : cb) x = Rat(coeff(rng));
            CycNum a = CycNum::from_coeffs(m, ca), b = CycNum::from_coeffs(m, cb);
            CHECK(embed_mod_ell(a * b, ell, t) ==
                  mulmod_u64(embed_mod_ell(a, ell, t), embed_mod_ell(b, ell, t), ell));
            CHECK(embed_mod_ell(a + b, ell, t) ==
                  (embed_mod_ell(a, ell, t) + embed_mod_ell(b, ell, t)) % ell);
        }
    }
}

TEST_CASE("root of unity has exact order m") {
    for (std::uint64_t m = 1; m <= 16; ++m) {
        CycNum z = CycNum::root_power(m, 1);
        CHECK(z.pow(m) == CycNum::one(m));
        for (std::uint64_t j = 1; j < m; ++j) CHECK_FALSE(z.pow(j) == CycNum::one(m));
    }
}

TEST_CASE("lift is a homomorphism into the larger field") {
    CHECK(CycNum::root_power(3, 1).lift(12) == CycNum::root_power(12, 4));
    Rng rng(19);
    for (int t = 0; t < 10; ++t) {
        CycNum a = random_cycnum(rng, 4);
        CycNum b = random_cycnum(rng, 4);
        CHECK((a * b).lift(12) == a.lift(12) * b.lift(12));
        CHECK((a + b).lift(12) == a.lift(12) + b.lift(12));
    }
    CHECK_THROWS_AS(CycNum::one(8).lift(12), std::invalid_argument);
}

TEST_CASE("field norm") {
    CHECK(field_norm(CycNum::from_int(12, 5)) == Rat(625));  // 5^phi(12)
    CycNum i4 = CycNum::root_power(4, 1);
    CHECK(field_norm(i4) == Rat(1));  // i * (-i)
}
