#pragma once

#include <cstdint>
#include <vector>

#include "vperiod/cyclotomic.hpp"

namespace vperiod {

// A subfield of Q(mu_m) given by the subgroup H of (Z/m)^* fixing it.
// H is stored as a sorted list of canonical residues; by the Galois
// correspondence the field degree over Q is phi(m) / |H|.
struct SubfieldDesc {
    std::uint64_t m = 1;
    std::vector<std::uint64_t> H = {1};
    std::uint64_t degree = 1;

    bool operator==(const SubfieldDesc&) const = default;
};

// H = { j in (Z/m)^* : sigma_j(a) = a }.
SubfieldDesc fixing_subgroup(const CycNum& a);

// Q(A) <= Q(B), i.e. H_B is contained in H_A. Moduli must match.
bool field_leq(const SubfieldDesc& A, const SubfieldDesc& B);

bool field_equal(const SubfieldDesc& A, const SubfieldDesc& B);

}  // namespace vperiod
