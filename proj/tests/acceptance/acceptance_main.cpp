// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line each. Exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vperiod/bounds.hpp"
#include "vperiod/expsums.hpp"
#include "vperiod/matrix.hpp"
#include "vperiod/periodicity.hpp"
#include "vperiod/report_io.hpp"

using namespace vperiod;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

CycNum cyc_int(std::uint64_t m, long v) { return CycNum::from_int(m, v); }

// ---- criterion 1: bound formula ------------------------------------------

Outcome criterion1() {
    struct Case {
        std::uint64_t m, n;
        long expect;
    } cases[] = {{12, 1, 12}, {2, 2, 24}, {3, 2, 24}};
    bound_R(2, 2);  // warm nothing in particular; the call is pure
    for (const auto& c : cases) {
        auto t0 = Clock::now();
        BoundReport b = bound_R(c.m, c.n);
        double ms = ms_since(t0);
        if (b.R != c.expect)
            return {false, "bound_R(" + std::to_string(c.m) + "," + std::to_string(c.n) +
                               ") = " + int_to_string(b.R) + ", expected " +
                               std::to_string(c.expect)};
        if (ms >= 1.0)
            return {false, "bound_R took " + std::to_string(ms) + " ms (budget 1 ms)"};
    }
    return {true, "R(12,1)=12, R(2,2)=24, R(3,2)=24"};
}

// ---- criterion 2: GL order oracle -----------------------------------------

std::uint64_t brute_force_max_order(std::size_t n, std::uint64_t ell) {
    const std::size_t cells = n * n;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= ell;
    std::uint64_t best = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        ModMatrix M(n, ell);
        std::uint64_t v = code;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                M.at(i, j) = v % ell;
                v /= ell;
            }
        if (M.det() == 0) continue;
        ModMatrix P = M;
        std::uint64_t order = 1;
        while (!P.is_identity()) {
            P = P * M;
            ++order;
        }
        if (order > best) best = order;
    }
    return best;
}

Outcome criterion2() {
    auto t0 = Clock::now();
    struct Case {
        std::size_t n;
        std::uint64_t ell;
        std::uint64_t expect;
    } cases[] = {{2, 3, 8}, {2, 5, 24}, {3, 2, 7}};
    std::ostringstream detail;
    for (const auto& c : cases) {
        std::uint64_t brute = brute_force_max_order(c.n, c.ell);
        Int formula = max_order_gln(c.n, c.ell);
        if (brute != c.expect)
            return {false, "exhaustive search over GL_" + std::to_string(c.n) + "(F_" +
                               std::to_string(c.ell) + ") gives " + std::to_string(brute) +
                               ", expected " + std::to_string(c.expect)};
        if (formula != Int(static_cast<unsigned long>(brute)))
            return {false, "max_order_gln(" + std::to_string(c.n) + "," + std::to_string(c.ell) +
                               ") = " + int_to_string(formula) + " but brute force gives " +
                               std::to_string(brute)};
        detail << "GL_" << c.n << "(F_" << c.ell << ")=" << brute << " ";
    }
    double ms = ms_since(t0);
    if (ms >= 10'000.0) return {false, "took " + std::to_string(ms) + " ms (budget 10 s)"};
    return {true, detail.str() + "(" + std::to_string(static_cast<long>(ms)) + " ms)"};
}

// ---- criterion 3: Pisano check --------------------------------------------

Outcome criterion3() {
    Lrs fib(2, {cyc_int(2, 1), cyc_int(2, 1)}, {cyc_int(2, 0), cyc_int(2, 1)});
    CompanionData cd = companion(fib);
    matrix_order_mod(cd.M, 11, 10);  // warm the per-modulus caches
    auto t0 = Clock::now();
    Int order = matrix_order_mod(cd.M, 11, 10);
    double ms = ms_since(t0);

    ModMatrix M(2, 11);
    M.at(0, 0) = 1;
    M.at(0, 1) = 1;
    M.at(1, 0) = 1;
    ModMatrix P = M;
    std::uint64_t brute = 1;
    while (!P.is_identity()) {
        P = P * M;
        ++brute;
    }
    if (order != 10 || brute != 10)
        return {false, "matrix order " + int_to_string(order) + ", brute force " +
                           std::to_string(brute) + ", expected 10"};
    if (ms >= 1.0) return {false, "took " + std::to_string(ms) + " ms (budget 1 ms)"};
    return {true, "order(Fibonacci mod 11) = 10"};
}

// ---- criterion 4: Example 1 period table ----------------------------------

struct GaussCase {
    std::uint64_t p;
    unsigned f;
    std::uint64_t d, a, kmax, expect;
};

const GaussCase kGaussCases[] = {
    {5, 1, 2, 1, 40, 10},  // d | p-1, Tr != 0 -> pd
    {5, 1, 2, 0, 40, 2},   // d | p-1, Tr = 0 -> d
    {3, 2, 4, 0, 24, 1},   // d | (q-1)/(p-1), Tr = 0 -> 1
    {3, 2, 4, 1, 24, 3},   // d | (q-1)/(p-1), Tr != 0 -> p
};

Outcome criterion4() {
    auto t0 = Clock::now();
    std::ostringstream detail;
    for (const auto& c : kGaussCases) {
        GaussStudy st = gauss_study(c.p, c.f, c.d, c.a, c.kmax);
        if (!st.period.found)
            return {false, "no period detected for (p,q,d,a)=(" + std::to_string(c.p) + "," +
                               std::to_string(st.q) + "," + std::to_string(c.d) + "," +
                               std::to_string(c.a) + ")"};
        if (st.period.r != c.expect || !st.predicted || *st.predicted != c.expect)
            return {false, "(p,q,d,a)=(" + std::to_string(c.p) + "," + std::to_string(st.q) +
                               "," + std::to_string(c.d) + "," + std::to_string(c.a) +
                               "): detected " + std::to_string(st.period.r) + ", predicted " +
                               (st.predicted ? std::to_string(*st.predicted) : "none") +
                               ", expected " + std::to_string(c.expect)};
        detail << c.expect << " ";
    }
    double ms = ms_since(t0);
    if (ms >= 60'000.0) return {false, "took " + std::to_string(ms) + " ms (budget 60 s)"};
    return {true, "periods " + detail.str() + "(" + std::to_string(static_cast<long>(ms)) + " ms)"};
}

// ---- criterion 5: degree formula ------------------------------------------

Outcome criterion5() {
    struct Case {
        std::uint64_t p;
        unsigned f;
        std::uint64_t d;
    } cases[] = {{5, 1, 2}, {3, 2, 4}, {5, 1, 4}};
    for (const auto& c : cases) {
        auto base = GaloisField::make(c.p, c.f);
        LaurentPoly poly;
        poly.mvars = 1;
        poly.terms.emplace_back(std::vector<std::int64_t>{static_cast<std::int64_t>(c.d)}, 1);
        ExpSumSpec spec{base, poly, 1};
        for (std::uint64_t k = 1; k <= 6; ++k) {
            CycNum sk = exp_sum(spec, k);
            std::uint64_t got = fixing_subgroup(sk).degree;
            std::uint64_t want = gauss_degree_formula(c.p, base->q(), c.d, k);
            if (got != want)
                return {false, "deg S_" + std::to_string(k) + "(x^" + std::to_string(c.d) +
                                   ") over F_" + std::to_string(base->q()) + " = " +
                                   std::to_string(got) + ", formula gives " + std::to_string(want)};
        }
    }
    return {true, "fixing-subgroup degrees match the formula for all k <= 6"};
}

// ---- criterion 6: Hasse-Davenport dimension --------------------------------

Outcome criterion6() {
    struct Case {
        std::uint64_t p;
        unsigned f;
        std::uint64_t d;
    } cases[] = {{3, 1, 2}, {5, 1, 2}, {5, 1, 4}};
    for (const auto& c : cases) {
        auto base = GaloisField::make(c.p, c.f);
        LaurentPoly poly;
        poly.mvars = 1;
        poly.terms.emplace_back(std::vector<std::int64_t>{static_cast<std::int64_t>(c.d)}, 1);
        poly.terms.emplace_back(std::vector<std::int64_t>{0}, 1);  // + a with a = 1
        ExpSumSpec spec{base, poly, 1};
        std::vector<CycNum> window = exp_sum_range(spec, 2 * c.d);
        MinimalRecurrence rec = minimal_recurrence(window);
        if (rec.dim > c.d - 1)
            return {false, "S_k(x^" + std::to_string(c.d) + "+1) over F_" +
                               std::to_string(base->q()) + " needs dimension " +
                               std::to_string(rec.dim) + " > d-1 = " + std::to_string(c.d - 1)};
    }
    return {true, "recurrence dimensions stay within d-1"};
}

// ---- criterion 7: Kloosterman ----------------------------------------------

Outcome criterion7() {
    auto t0 = Clock::now();
    KloostermanStudy st = kloosterman_study(3, 1, 2, 1, 10);
    if (!(st.S[0] == cyc_int(6, -1)))
        return {false, "S_1 = " + st.S[0].to_string() + ", expected -1"};
    if (st.rec.dim > 2)
        return {false, "recurrence dimension " + std::to_string(st.rec.dim) + " > 2"};
    if (!st.period.found) return {false, "no field-sequence period detected"};
    if (!st.divides_bound || st.bound.R != 24)
        return {false, "period " + std::to_string(st.period.r) + " does not divide R_{3,2} = " +
                           int_to_string(st.bound.R)};
    double ms = ms_since(t0);
    if (ms >= 10'000.0) return {false, "took " + std::to_string(ms) + " ms (budget 10 s)"};
    return {true, "S_1 = -1, dim <= 2, r = " + std::to_string(st.period.r) + " | 24"};
}

// ---- criterion 8: Theorem 2 property suite ---------------------------------

Outcome criterion8() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(20250809);
    const std::uint64_t K = 200;
    const std::uint64_t ms_choices[4] = {2, 4, 8, 12};
    std::uniform_int_distribution<int> mpick(0, 3);
    std::uniform_int_distribution<std::size_t> npick(1, 3);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);

    auto random_cyc = [&](std::uint64_t m) {
        std::vector<Rat> coeffs(euler_phi(m));
        for (auto& c : coeffs) {
            c = Rat(num(rng), den(rng));
            c.canonicalize();
        }
        return CycNum::from_coeffs(m, std::move(coeffs));
    };

    int divisor_ok = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint64_t m = ms_choices[mpick(rng)];
        const std::size_t n = npick(rng);
        std::vector<CycNum> coeffs, initial;
        for (std::size_t i = 0; i + 1 < n; ++i) coeffs.push_back(random_cyc(m));
        CycNum last = random_cyc(m);
        while (last.is_zero()) last = random_cyc(m);
        coeffs.push_back(last);
        for (std::size_t i = 0; i < n; ++i) initial.push_back(random_cyc(m));
        Lrs L(m, std::move(coeffs), std::move(initial));

        LrsAnalysis an = analyze_lrs(L, K);
        if (!an.period.found)
            return {false, "trial " + std::to_string(trial) + ": no period on K=200 window"};
        if (!an.certificate)
            return {false, "trial " + std::to_string(trial) + ": no split-prime certificate"};
        // (a) detected r divides s_ell
        if (!mpz_divisible_ui_p(an.certificate->s_ell.get_mpz_t(), an.period.r))
            return {false, "trial " + std::to_string(trial) + ": r = " +
                               std::to_string(an.period.r) + " does not divide s_ell = " +
                               int_to_string(an.certificate->s_ell)};
        ++divisor_ok;
        // (b) monotone containment for k < N
        for (std::uint64_t k = 0; k < an.period.N; ++k) {
            std::uint64_t kp = k;
            while (kp < an.period.N) kp += an.period.r;
            if (kp > K || !field_leq(an.fields[k], an.fields[kp]))
                return {false, "trial " + std::to_string(trial) + ": containment fails at k = " +
                                   std::to_string(k)};
        }
        // (c) zero progressions re-verify by exact term evaluation
        std::vector<CycNum> xs = terms(L, K);
        for (const auto& [start, step] : an.zeros.progressions)
            for (std::uint64_t k = start; k <= K; k += step)
                if (!xs[k].is_zero())
                    return {false, "trial " + std::to_string(trial) +
                                       ": progression member a_" + std::to_string(k) +
                                       " is nonzero"};
        for (std::uint64_t k : an.zeros.exceptional)
            if (!xs[k].is_zero())
                return {false, "trial " + std::to_string(trial) + ": exceptional index " +
                                   std::to_string(k) + " is nonzero"};
    }
    double ms = ms_since(t0);
    if (ms >= 300'000.0) return {false, "took " + std::to_string(ms) + " ms (budget 5 min)"};
    return {true, std::to_string(divisor_ok) + "/50 windows certified (" +
                      std::to_string(static_cast<long>(ms)) + " ms)"};
}

// ---- criterion 9: R-monotonicity -------------------------------------------

Outcome criterion9() {
    auto t0 = Clock::now();
    for (std::uint64_t m = 1; m <= 30; ++m) {
        for (std::uint64_t n = 2; n <= 8; ++n) {
            Int a = bound_R(m, n).R;
            Int b = bound_R(m, n + 1).R;
            if (!mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()))
                return {false, "R(" + std::to_string(m) + "," + std::to_string(n) +
                                   ") does not divide R(" + std::to_string(m) + "," +
                                   std::to_string(n + 1) + ")"};
        }
    }
    double ms = ms_since(t0);
    if (ms >= 1000.0) return {false, "took " + std::to_string(ms) + " ms (budget 1 s)"};
    return {true, "R_{m,n} | R_{m,n+1} for m <= 30, n in [2,8]"};
}

// ---- criterion 10: determinism ---------------------------------------------

std::string serialize_gauss_S(const GaussCase& c) {
    GaussStudy st = gauss_study(c.p, c.f, c.d, c.a, c.kmax);
    Json arr = Json::array();
    for (const CycNum& s : st.S) arr.push_back(cycnum_to_json(s));
    return arr.dump();
}

Outcome criterion10() {
    for (const auto& c : kGaussCases) {
        if (serialize_gauss_S(c) != serialize_gauss_S(c))
            return {false, "gauss S_k serialization differs between runs"};
    }
    auto kl = [] {
        KloostermanStudy st = kloosterman_study(3, 1, 2, 1, 10);
        Json arr = Json::array();
        for (const CycNum& s : st.S) arr.push_back(cycnum_to_json(s));
        return arr.dump();
    };
    if (kl() != kl()) return {false, "kloosterman S_k serialization differs between runs"};
    return {true, "byte-identical S_k payloads across repeated runs"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    } criteria[] = {
        {"1 bound formula", criterion1},
        {"2 GL order oracle", criterion2},
        {"3 Pisano check", criterion3},
        {"4 Example 1 period table", criterion4},
        {"5 degree formula", criterion5},
        {"6 Hasse-Davenport dimension", criterion6},
        {"7 Kloosterman", criterion7},
        {"8 Theorem 2 property suite", criterion8},
        {"9 R-monotonicity", criterion9},
        {"10 determinism", criterion10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("criterion %-30s %s  %s\n", c.name, o.pass ? "PASS" : "FAIL",
                    o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
