#include <doctest.h>

#include <random>

#include "vperiod/finite_field.hpp"

using namespace vperiod;

TEST_CASE("deterministic construction") {
    auto F3 = GaloisField::make(3, 1);
    CHECK(F3->q() == 3);
    CHECK(F3->generator() == 2);

    auto F5 = GaloisField::make(5, 1);
    CHECK(F5->generator() == 2);

    auto F8 = GaloisField::make(2, 3);
    CHECK(F8->defining_poly() == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3 + x + 1

    auto F9 = GaloisField::make(3, 2);
    CHECK(F9->defining_poly() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1

    CHECK_THROWS_AS(GaloisField::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField::make(2, 30), std::invalid_argument);
}

TEST_CASE("field axioms on samples") {
    for (auto [p, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 2}}) {
        auto F = GaloisField::make(p, d);
        const std::uint64_t q = F->q();
        for (std::uint64_t a = 0; a < q; ++a) {
            CHECK(F->add(a, 0) == a);
            CHECK(F->mul(a, 1) == a);
            CHECK(F->add(a, F->neg(a)) == 0);
            if (a != 0) {
                CHECK(F->mul(a, F->inv(a)) == 1);
                CHECK(F->pow(a, static_cast<std::int64_t>(q - 1)) == 1);
                CHECK(F->exp_g(F->dlog(a)) == a);
            }
            for (std::uint64_t b = 0; b < q; ++b) {
                CHECK(F->mul(a, b) == F->mul(b, a));
                CHECK(F->add(a, b) == F->add(b, a));
            }
        }
    }
}

TEST_CASE("trace examples") {
    auto F4 = GaloisField::make(2, 2);
    // g satisfies g^2 + g + 1 = 0; Tr(g) = g + g^2 = 1
    CHECK(F4->trace_to_prime(F4->generator()) == 1);
    CHECK(F4->trace_to_prime(0) == 0);

    auto F9 = GaloisField::make(3, 2);
    // elements of the prime field: Tr(x) = d * x
    for (std::uint64_t x = 0; x < 3; ++x) CHECK(F9->trace_to_prime(x) == (2 * x) % 3);

    // trace is additive
    for (std::uint64_t a = 0; a < 9; ++a)
        for (std::uint64_t b = 0; b < 9; ++b)
            CHECK(F9->trace_to_prime(F9->add(a, b)) ==
                  (F9->trace_to_prime(a) + F9->trace_to_prime(b)) % 3);
}

TEST_CASE("embeddings") {
    auto F3 = GaloisField::make(3, 1);
    auto F9 = GaloisField::make(3, 2);
    FieldEmbedding id(F9, F9);
    CHECK(id.apply(5) == 5);

    FieldEmbedding e39(F3, F9);
    CHECK(e39.apply(1) == 1);
    // 2 is the unique element of order 2 in F_9
    std::uint64_t img = e39.apply(2);
    CHECK(img == F9->pow(F9->generator(), 4));
    CHECK(F9->mul(img, img) == 1);

    auto F2 = GaloisField::make(2, 1);
    auto F4 = GaloisField::make(2, 2);
    FieldEmbedding e24(F2, F4);
    CHECK(e24.apply(1) == 1);

    // tower consistency F2 -> F4 -> F16
    auto F16 = GaloisField::make(2, 4);
    FieldEmbedding e4_16(F4, F16);
    FieldEmbedding e2_16(F2, F16);
    CHECK(e4_16.apply(e24.apply(1)) == e2_16.apply(1));
}

TEST_CASE("norms") {
    auto F3 = GaloisField::make(3, 1);
    auto F9 = GaloisField::make(3, 2);
    FieldEmbedding e(F3, F9);

    // norm of the extension generator generates the base group
    std::uint64_t ng = e.norm_to_base(F9->generator());
    std::uint64_t acc = ng;
    int order = 1;
    while (acc != 1) {
        acc = F3->mul(acc, ng);
        ++order;
    }
    CHECK(order == 2);

    // norm of an embedded base element is its k-th power (k = 2 here)
    for (std::uint64_t x = 1; x < 3; ++x)
        CHECK(e.norm_to_base(e.apply(x)) == F3->mul(x, x));

    // norm is multiplicative
    for (std::uint64_t a = 1; a < 9; ++a)
        for (std::uint64_t b = 1; b < 9; ++b)
            CHECK(e.norm_to_base(F9->mul(a, b)) ==
                  F3->mul(e.norm_to_base(a), e.norm_to_base(b)));

    CHECK_THROWS_AS(e.norm_to_base(0), std::domain_error);
}

TEST_CASE("trace and norm transitivity in towers") {
    for (std::uint64_t p : {2, 3, 5}) {
        for (unsigned f = 1; f <= 2; ++f) {
            for (unsigned k = 2; k <= 4; ++k) {
                Int qk = int_pow(Int(static_cast<unsigned long>(p)), f * k);
                if (qk > 4096) continue;
                auto base = GaloisField::make(p, f);
                auto ext = GaloisField::make(p, f * k);
                FieldEmbedding emb(base, ext);

                // invert the embedding by scanning the (small) base field
                auto unembed = [&](std::uint64_t s) {
                    for (std::uint64_t y = 0; y < base->q(); ++y)
                        if (emb.apply(y) == s) return y;
                    REQUIRE(false);
                    return base->q();
                };

                for (std::uint64_t x = 0; x < ext->q(); ++x) {
                    // Tr_{ext/base}(x) = sum of x^(q_b^i) lands in the embedded base
                    std::uint64_t s = 0, frob = x;
                    for (unsigned i = 0; i < k; ++i) {
                        s = ext->add(s, frob);
                        frob = frob == 0 ? 0 : ext->pow(frob, static_cast<std::int64_t>(base->q()));
                    }
                    CHECK(ext->trace_to_prime(x) == base->trace_to_prime(unembed(s)));
                }
                // N_{ext/p} = N_{base/p} o N_{ext/base}
                FieldEmbedding ep(GaloisField::make(p, 1), ext);
                FieldEmbedding bp(GaloisField::make(p, 1), base);
                for (std::uint64_t x = 1; x < ext->q(); ++x)
                    CHECK(ep.norm_to_base(x) == bp.norm_to_base(emb.norm_to_base(x)));
            }
        }
    }
}
