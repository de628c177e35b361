#pragma once

#include "ainfty/module.hpp"

namespace ainfty {

struct FiltrationProfile {
    std::vector<Rat> levels;  // sorted strictly increasing
    bool bounded_above = true;
    bool zero_included = false;
};
FiltrationProfile filtration_profile(const Basis& basis);

// Certificate that u is a cyclic element of the module D over C:
//  - x -> n^1(x; u) is a filtration-preserving Z-module isomorphism with
//    filtration-preserving inverse (level-block triangular, unimodular
//    diagonal blocks);
//  - u lies in F^0 with a nonzero level-0 part; n^0(u) sits in strictly
//    positive filtration.
struct CyclicElementCertificate {
    Element u;
    IntMat iso_matrix;                 // columns: C basis, rows: D basis
    Element strict_increase_witness;   // n^0(u)
};

CyclicElementCertificate verify_cyclic(const CurvedAInfAlgebra& C,
                                       const AInfModule& D, const Element& u);

// d^b(y) = sum_k n^k(b,...,b; y) as an arity-1 operation on the module.
MultilinearOp deformed_module_differential(const AInfModule& D,
                                           const Element& b);

// The unique nilpotent bounding cochain supported on strictly positive
// filtration with d^b(u) = 0, solved level by level along the filtration;
// the Maurer-Cartan residual of the result is verified to vanish.
Element solve_bounding_cochain(const CurvedAInfAlgebra& C, const AInfModule& D,
                               const CyclicElementCertificate& cert);

}  // namespace ainfty
