#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "vperiod/numeric.hpp"

namespace vperiod {

// F_{p^d} with a deterministic presentation: the defining polynomial is the
// lexicographically smallest monic irreducible of degree d over F_p (ordered
// by the base-p encoding of its non-leading coefficients), and the primitive
// element is the smallest encoding of full order. Elements are encodings
// sum c_i p^i in [0, q) of polynomials sum c_i x^i. Immutable once built.
//
// Full log/exp tables are built when q <= 2^20; larger fields fall back to
// baby-step/giant-step logs with a cached baby table.
class GaloisField {
public:
    static constexpr std::uint64_t kMaxQ = 1u << 24;
    static constexpr std::uint64_t kMaxQInternal = 1u << 26;  // study-internal prefix fields

    // Memoized per (p, d); thread-safe. max_q guards against runaway
    // requests; callers with a certified points budget may pass
    // kMaxQInternal.
    static std::shared_ptr<const GaloisField> make(std::uint64_t p, unsigned d,
                                                   std::uint64_t max_q = kMaxQ);

    std::uint64_t p() const { return p_; }
    unsigned degree() const { return d_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t generator() const { return g_; }
    const std::vector<std::uint32_t>& defining_poly() const { return poly_; }
    bool has_tables() const { return tables_ready_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;  // a != 0
    std::uint64_t pow(std::uint64_t a, std::int64_t e) const;

    // g^i, reduced exponent; with tables this is a lookup.
    std::uint64_t exp_g(std::uint64_t i) const;
    // index of a != 0 with respect to the chosen generator
    std::uint64_t dlog(std::uint64_t a) const;

    // Tr_{F_q/F_p}; the result is the canonical lift in [0, p).
    std::uint64_t trace_to_prime(std::uint64_t a) const;

    std::uint64_t element_from_int(Int v) const;  // Z -> F_p -> F_q

private:
    GaloisField() = default;
    void build(std::uint64_t p, unsigned d);
    std::uint64_t mul_poly(std::uint64_t a, std::uint64_t b) const;

    std::uint64_t p_ = 0, q_ = 0, g_ = 0;
    unsigned d_ = 0;
    bool tables_ready_ = false;
    std::vector<std::uint32_t> poly_;       // monic, length d+1
    std::vector<std::uint32_t> trace_basis_; // Tr(x^i), i < d
    std::vector<std::uint32_t> exp_;        // g^i for i < q-1 (when tabled)
    std::vector<std::uint32_t> log_;        // inverse of exp_ (when tabled)
    mutable std::unordered_map<std::uint64_t, std::uint64_t> bsgs_baby_;
    mutable std::uint64_t bsgs_step_ = 0;
    mutable std::uint64_t bsgs_giant_ = 0;
};

// Embedding F_{p^db} -> F_{p^de} with db | de, determined by sending the
// base field's x to the root of the base defining polynomial with smallest
// discrete log in the extension. Verified homomorphic at construction.
class FieldEmbedding {
public:
    FieldEmbedding(std::shared_ptr<const GaloisField> base,
                   std::shared_ptr<const GaloisField> ext);

    const GaloisField& base() const { return *base_; }
    const GaloisField& ext() const { return *ext_; }

    std::uint64_t apply(std::uint64_t base_elem) const;

    // Norm from the extension down to the base: x^((Q-1)/(q-1)) identified
    // as a base-field element. x must be nonzero.
    std::uint64_t norm_to_base(std::uint64_t ext_elem) const;

    // dlog (w.r.t. the base generator) of the norm of an extension element
    // given by its extension dlog; O(1) per call.
    std::uint64_t norm_dlog_from_ext_dlog(std::uint64_t ext_dlog) const;

private:
    std::shared_ptr<const GaloisField> base_;
    std::shared_ptr<const GaloisField> ext_;
    std::uint64_t root_;        // image of base's x
    std::uint64_t norm_index_;  // (Q-1)/(q-1)
    std::uint64_t w_unit_inv_;  // inverse mod q-1 of dlog(embed(g_base)) / norm_index_
};

}  // namespace vperiod
