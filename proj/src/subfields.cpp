#include "vperiod/subfields.hpp"

#include <algorithm>
#include <stdexcept>

namespace vperiod {

SubfieldDesc fixing_subgroup(const CycNum& a) {
    SubfieldDesc d;
    d.m = a.modulus();
    d.H.clear();
    for (std::uint64_t j : units_mod(d.m))
        if (a.galois(j) == a) d.H.push_back(j);
    const std::uint64_t phi = euler_phi(d.m);
    d.degree = phi / d.H.size();
    return d;
}

static void check_same_modulus(const SubfieldDesc& A, const SubfieldDesc& B) {
    if (A.m != B.m) throw std::invalid_argument("SubfieldDesc: modulus mismatch");
}

bool field_leq(const SubfieldDesc& A, const SubfieldDesc& B) {
    check_same_modulus(A, B);
    return std::includes(A.H.begin(), A.H.end(), B.H.begin(), B.H.end());
}

bool field_equal(const SubfieldDesc& A, const SubfieldDesc& B) {
    check_same_modulus(A, B);
    return A.H == B.H;
}

}  // namespace vperiod
