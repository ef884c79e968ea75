#include "vperiod/expsums.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace vperiod {

namespace {

// (Q-1)^mvars with saturation just past the cap.
std::uint64_t torus_size_capped(std::uint64_t Q, unsigned mvars, std::uint64_t cap) {
    std::uint64_t t = 1;
    for (unsigned i = 0; i < mvars; ++i) {
        if (t > cap / (Q - 1) + 1) return cap + 1;
        t *= Q - 1;
        if (t > cap) return cap + 1;
    }
    return t;
}

struct PreppedTerm {
    std::uint64_t coef_dlog;
    std::vector<std::uint64_t> exps;  // exponents normalized mod Q-1
};

struct SweepResult {
    std::vector<std::uint64_t> counts;  // per residue of zeta_{pc}
};

// One torus chunk [lo, hi) of flat indices; exponent tuples run through
// mixed-radix digits base Q-1, last coordinate fastest. Term values are
// maintained incrementally: one multiplication per term per step, with a
// full recomputation only on odometer carries (one in Q-1 steps).
void sweep_chunk(const GaloisField& ext, const std::vector<PreppedTerm>& terms, unsigned mvars,
                 unsigned c, const FieldEmbedding* emb, std::uint64_t pc,
                 std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& counts) {
    const std::uint64_t R = ext.q() - 1;
    const std::uint64_t p = ext.p();
    std::vector<std::uint64_t> e(mvars);
    std::uint64_t idx = lo;
    for (unsigned i = mvars; i-- > 0;) {
        e[i] = idx % R;
        idx /= R;
    }

    std::vector<std::uint64_t> cur(terms.size());
    auto recompute = [&] {
        for (std::size_t t = 0; t < terms.size(); ++t) {
            std::uint64_t expo = terms[t].coef_dlog;
            for (unsigned i = 0; i < mvars; ++i)
                if (terms[t].exps[i]) expo += terms[t].exps[i] * e[i] % R;
            cur[t] = ext.exp_g(expo % R);
        }
    };
    recompute();
    std::vector<std::uint64_t> last_step(terms.size());
    for (std::size_t t = 0; t < terms.size(); ++t)
        last_step[t] = ext.exp_g(terms[t].exps[mvars - 1] % R);
    std::uint64_t esum = 0;
    for (unsigned i = 0; i < mvars; ++i) esum = (esum + e[i]) % R;

    for (std::uint64_t flat = lo; flat < hi; ++flat) {
        std::uint64_t value = 0;
        for (std::uint64_t cv : cur) value = ext.add(value, cv);
        const std::uint64_t tr = ext.trace_to_prime(value);
        std::uint64_t chi_idx = (c > 1) ? emb->norm_dlog_from_ext_dlog(esum) % c : 0;
        ++counts[(tr * c + chi_idx * p) % pc];

        if (flat + 1 == hi) break;
        if (e[mvars - 1] + 1 < R) {
            ++e[mvars - 1];
            esum = (esum + 1) % R;
            for (std::size_t t = 0; t < terms.size(); ++t)
                cur[t] = ext.mul(cur[t], last_step[t]);
        } else {
            e[mvars - 1] = 0;
            for (unsigned i = mvars - 1; i-- > 0;) {
                if (++e[i] < R) break;
                e[i] = 0;
            }
            esum = 0;
            for (unsigned i = 0; i < mvars; ++i) esum = (esum + e[i]) % R;
            recompute();
        }
    }
}

CycNum counts_to_cycnum(const std::vector<std::uint64_t>& counts, std::uint64_t pc) {
    CycNum r = CycNum::zero(pc);
    for (std::uint64_t res = 0; res < pc; ++res) {
        if (counts[res] == 0) continue;
        r += CycNum::root_power(pc, static_cast<std::int64_t>(res)) *
             Rat(Int(static_cast<unsigned long>(counts[res])));
    }
    return r;
}

}  // namespace

std::uint64_t largest_feasible_k(const GaloisField& base, unsigned mvars,
                                 std::uint64_t point_cap, std::uint64_t field_cap) {
    std::uint64_t best = 0;
    for (std::uint64_t k = 1;; ++k) {
        Int q_ext = int_pow(Int(static_cast<unsigned long>(base.p())),
                            static_cast<unsigned long>(base.degree()) * k);
        if (q_ext > Int(static_cast<unsigned long>(field_cap))) break;
        std::uint64_t Q = q_ext.get_ui();
        if (torus_size_capped(Q, mvars, point_cap) > point_cap) break;
        best = k;
    }
    return best;
}

CycNum exp_sum(const ExpSumSpec& spec, std::uint64_t k, unsigned threads,
               std::uint64_t point_cap, std::uint64_t field_cap) {
    if (!spec.base) throw std::invalid_argument("exp_sum: missing base field");
    const GaloisField& B = *spec.base;
    if (k < 1) throw std::invalid_argument("exp_sum: k must be positive");
    if (spec.c < 1 || (B.q() - 1) % spec.c != 0)
        throw std::invalid_argument("exp_sum: character order must divide q-1");
    if (spec.f.mvars < 1) throw std::invalid_argument("exp_sum: need at least one variable");

    const unsigned mvars = spec.f.mvars;
    Int q_ext_z = int_pow(Int(static_cast<unsigned long>(B.p())),
                          static_cast<unsigned long>(B.degree()) * k);
    if (q_ext_z > Int(static_cast<unsigned long>(field_cap)))
        throw FeasibilityError("exp_sum: extension field exceeds the element cap",
                               largest_feasible_k(B, mvars, point_cap, field_cap));
    auto ext = GaloisField::make(B.p(), B.degree() * static_cast<unsigned>(k), field_cap);
    const std::uint64_t Q = ext->q();
    const std::uint64_t T = torus_size_capped(Q, mvars, point_cap);
    if (T > point_cap)
        throw FeasibilityError("exp_sum: torus size (q^k-1)^mvars exceeds the point cap",
                               largest_feasible_k(B, mvars, point_cap, field_cap));

    FieldEmbedding emb(spec.base, ext);
    std::vector<PreppedTerm> terms;
    terms.reserve(spec.f.terms.size());
    for (const auto& [exps, coef] : spec.f.terms) {
        PreppedTerm t;
        t.coef_dlog = ext->dlog(emb.apply(coef));
        t.exps.reserve(mvars);
        const std::int64_t R = static_cast<std::int64_t>(Q - 1);
        for (std::int64_t e : exps) t.exps.push_back(static_cast<std::uint64_t>(((e % R) + R) % R));
        terms.push_back(std::move(t));
    }

    const std::uint64_t pc = B.p() * spec.c;
    if (threads < 1) threads = 1;
    std::uint64_t nchunks = std::min<std::uint64_t>(threads, T);
    std::vector<std::vector<std::uint64_t>> partial(nchunks, std::vector<std::uint64_t>(pc, 0));
    if (nchunks <= 1) {
        sweep_chunk(*ext, terms, mvars, spec.c, &emb, pc, 0, T, partial[0]);
    } else {
        std::vector<std::thread> pool;
        for (std::uint64_t i = 0; i < nchunks; ++i) {
            std::uint64_t lo = T / nchunks * i + std::min(T % nchunks, i);
            std::uint64_t hi = lo + T / nchunks + (i < T % nchunks ? 1 : 0);
            pool.emplace_back(sweep_chunk, std::cref(*ext), std::cref(terms), mvars, spec.c, &emb,
                              pc, lo, hi, std::ref(partial[i]));
        }
        for (auto& th : pool) th.join();
    }
    std::vector<std::uint64_t> counts(pc, 0);
    for (const auto& part : partial)
        for (std::uint64_t i = 0; i < pc; ++i) counts[i] += part[i];
    return counts_to_cycnum(counts, pc);
}

std::vector<CycNum> exp_sum_range(const ExpSumSpec& spec, std::uint64_t kmax, unsigned threads,
                                  std::uint64_t point_cap) {
    std::vector<CycNum> out;
    out.reserve(kmax);
    for (std::uint64_t k = 1; k <= kmax; ++k) out.push_back(exp_sum(spec, k, threads, point_cap));
    return out;
}

CycNum gauss_sum(const GaloisField& F, unsigned e) {
    if (e <= 1) throw std::invalid_argument("gauss_sum: character must be nontrivial");
    if ((F.q() - 1) % e != 0) throw std::invalid_argument("gauss_sum: order must divide q-1");
    const std::uint64_t p = F.p();
    const std::uint64_t pe = p * e;
    std::vector<std::uint64_t> counts(pe, 0);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < F.q() - 1; ++i) {
        const std::uint64_t tr = F.trace_to_prime(x);
        ++counts[(tr * e + (i % e) * p) % pe];
        x = F.mul(x, F.generator());
    }
    return counts_to_cycnum(counts, pe);
}

CycNum kloosterman(const GaloisField& F, unsigned n, std::uint64_t a, std::uint64_t k,
                   unsigned threads, std::uint64_t point_cap) {
    if (n < 2) throw std::invalid_argument("kloosterman: dimension must be at least 2");
    if (a == 0 || a >= F.q()) throw std::invalid_argument("kloosterman: a must be in F_q^x");
    LaurentPoly f;
    f.mvars = n - 1;
    for (unsigned i = 0; i < n - 1; ++i) {
        std::vector<std::int64_t> exps(n - 1, 0);
        exps[i] = 1;
        f.terms.emplace_back(std::move(exps), 1);
    }
    f.terms.emplace_back(std::vector<std::int64_t>(n - 1, -1), a);

    // shared_ptr alias of the cached instance
    auto base = GaloisField::make(F.p(), F.degree());
    CycNum s = exp_sum(ExpSumSpec{base, std::move(f), 1}, k, threads, point_cap);
    return F.p() % 2 == 1 ? s.lift(2 * F.p()) : s;
}

std::optional<std::uint64_t> gauss_period_prediction(const GaloisField& F, std::uint64_t d,
                                                     std::uint64_t a) {
    const std::uint64_t p = F.p(), q = F.q();
    if (d < 1 || (q - 1) % d != 0)
        throw std::invalid_argument("gauss_period_prediction: d must divide q-1");
    if (a >= q) throw std::invalid_argument("gauss_period_prediction: a not in F_q");
    const bool trace_zero = F.trace_to_prime(a) == 0;
    if (((q - 1) / (p - 1)) % d == 0) return trace_zero ? 1 : p;
    if ((p - 1) % d == 0) return trace_zero ? d : p * d;
    return std::nullopt;
}

std::uint64_t gauss_degree_formula(std::uint64_t p, std::uint64_t q, std::uint64_t d,
                                   std::uint64_t k) {
    if (d < 1) throw std::invalid_argument("gauss_degree_formula: d must be positive");
    Int qk = int_pow(Int(static_cast<unsigned long>(q)), static_cast<unsigned long>(k));
    Int qk1 = qk - 1;
    if (!mpz_divisible_ui_p(qk1.get_mpz_t(), d))
        throw std::invalid_argument("gauss_degree_formula: d must divide q^k-1");
    if ((p - 1) % d != 0 && ((q - 1) / (p - 1)) % d != 0)
        throw std::invalid_argument("gauss_degree_formula: divisibility hypothesis violated");
    Int ratio = qk1 / static_cast<unsigned long>(d);
    Int g;
    Int pm1(static_cast<unsigned long>(p - 1));
    mpz_gcd(g.get_mpz_t(), pm1.get_mpz_t(), ratio.get_mpz_t());
    return (p - 1) / g.get_ui();
}

std::uint64_t bombieri_bound(std::uint64_t d) {
    if (d < 1) throw std::invalid_argument("bombieri_bound: degree must be positive");
    return 4 * d + 5;
}

GaussStudy gauss_study(std::uint64_t p, unsigned f, std::uint64_t d, std::uint64_t a,
                       std::uint64_t kmax, unsigned threads, std::uint64_t points_budget) {
    GaussStudy st;
    st.p = p;
    st.f = f;
    st.d = d;
    st.a = a;
    auto base = GaloisField::make(p, f);
    st.q = base->q();
    if (d < 1 || (st.q - 1) % d != 0)
        throw std::invalid_argument("gauss_study: d must divide q-1");
    if (a >= st.q) throw std::invalid_argument("gauss_study: a not in F_q");
    if (kmax < 2) throw std::invalid_argument("gauss_study: kmax must be at least 2");

    LaurentPoly poly;
    poly.mvars = 1;
    poly.terms.emplace_back(std::vector<std::int64_t>{static_cast<std::int64_t>(d)}, 1);
    if (a != 0) poly.terms.emplace_back(std::vector<std::int64_t>{0}, a);
    ExpSumSpec spec{base, std::move(poly), 1};

    // L(T, x^d + a) is a polynomial of degree d-1, so the S_k satisfy a
    // recurrence of dimension <= d-1 (dimension 1 when d = 1); a prefix of
    // 2*dim_bound exact values pins the minimal recurrence, which then
    // extends the sequence exactly.
    const std::uint64_t dim_bound = std::max<std::uint64_t>(1, d - 1);
    const std::uint64_t want = std::min(kmax, 2 * dim_bound + 2);
    const std::uint64_t need = std::min(kmax, 2 * dim_bound);
    const std::uint64_t feasible = largest_feasible_k(*base, 1, points_budget);
    const std::uint64_t W = std::min(want, feasible);
    if (W < need)
        throw FeasibilityError(
            "gauss_study: cannot certify the recurrence extension within the points budget",
            feasible);

    std::vector<CycNum> prefix = exp_sum_range(spec, W, threads, points_budget);
    st.prefix_len = W;
    st.rec = minimal_recurrence(prefix);
    if (st.rec.dim > dim_bound)
        throw std::logic_error("gauss_study: recovered dimension exceeds d-1; this contradicts "
                               "the L-polynomial degree");
    if (W == kmax) {
        st.S = std::move(prefix);
    } else {
        st.S = regenerate(st.rec, prefix, kmax);
    }

    st.fields.reserve(st.S.size());
    for (const CycNum& s : st.S) st.fields.push_back(fixing_subgroup(s));
    st.degrees.reserve(st.fields.size());
    for (const auto& fd : st.fields) st.degrees.push_back(fd.degree);
    st.period = detect_virtual_period<SubfieldDesc>(
        std::span<const SubfieldDesc>(st.fields),
        [](const SubfieldDesc& x, const SubfieldDesc& y) { return field_equal(x, y); });

    st.predicted = gauss_period_prediction(*base, d, a);
    if (st.predicted && st.period.found) st.match = (st.period.r == *st.predicted);
    return st;
}

KloostermanStudy kloosterman_study(std::uint64_t p, unsigned f, unsigned n, std::uint64_t a,
                                   std::uint64_t kmax, unsigned threads,
                                   std::uint64_t point_cap) {
    KloostermanStudy st;
    st.p = p;
    st.f = f;
    st.n = n;
    st.a = a;
    auto base = GaloisField::make(p, f);
    st.q = base->q();
    if (kmax < 2) throw std::invalid_argument("kloosterman_study: kmax must be at least 2");

    st.S.reserve(kmax);
    for (std::uint64_t k = 1; k <= kmax; ++k)
        st.S.push_back(kloosterman(*base, n, a, k, threads, point_cap));
    st.rec = minimal_recurrence(st.S);
    st.fields.reserve(st.S.size());
    for (const CycNum& s : st.S) st.fields.push_back(fixing_subgroup(s));
    st.degrees.reserve(st.fields.size());
    for (const auto& fd : st.fields) st.degrees.push_back(fd.degree);
    st.period = detect_virtual_period<SubfieldDesc>(
        std::span<const SubfieldDesc>(st.fields),
        [](const SubfieldDesc& x, const SubfieldDesc& y) { return field_equal(x, y); });
    st.bound = bound_R(p, n);
    st.divides_bound =
        st.period.found && mpz_divisible_ui_p(st.bound.R.get_mpz_t(), st.period.r);
    if (st.period.found) st.period = verify_against_bound(st.period, st.bound.R);
    return st;
}

}  // namespace vperiod
