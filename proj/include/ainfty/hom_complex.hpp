#pragma once

#include "ainfty/module.hpp"

namespace ainfty {

// The length-truncated complex of pre-module homomorphisms between left
// modules over one flat, strictly unital algebra, in the normalized model:
// component tables never carry the unit in an algebra slot.  A degree-s hom
// has components t^d of intrinsic degree s+1-d, d = 1..L, and the
// differential is
//
//   (dT)^d(a_{d-1},..,a_1,y) =
//       sum_j n_M(a_{d-1},..,a_{j+1}; T^{j+1}(a_j,..,a_1,y))
//     - (-1)^s [ sum_blocks (-1)^{koszul of the right suffix}
//                    T(a_{d-1},.., m(block), .., a_1, y)
//              + sum_j T(a_{d-1},..,a_{j+1}, n_N^j(a_j,..,a_1,y)) ].
struct HomComplex {
    const AInfModule* source = nullptr;  // N
    const AInfModule* target = nullptr;  // M
    size_t truncation = 4;

    struct BasisElem {
        size_t d;                   // component index
        std::vector<GenId> tuple;   // d-1 algebra gens + 1 source module gen
        GenId out;                  // target module gen
        long long hom_degree;       // s
    };
    // basis elements grouped by hom degree s
    std::map<long long, std::vector<BasisElem>> basis;

    FiniteComplex as_complex() const;  // pieces + delta matrices
    PreModuleHom from_coords(long long s, const std::vector<Int>& coords) const;
    std::vector<Int> to_coords(const PreModuleHom& T) const;
};

HomComplex build_hom_complex(const AInfModule& N, const AInfModule& M,
                             size_t truncation);

// The differential applied structurally; T must be over a flat algebra.
PreModuleHom hom_differential(const PreModuleHom& T, size_t truncation);

// lambda(c)^d(a_{d-1},..,a_1,b) = (-1)^{|c|} n_M^d(a_{d-1},..,a_1,b,c),
// a degree-|c| hom from the Yoneda module of Y into M; the twist makes it
// commute with the differentials on the nose.
PreModuleHom lambda_map(const AInfModule& M, const AInfModule& yoneda,
                        const Element& c, size_t truncation);

// The mapping cone of lambda: cone^k = M(Y)^{k+1} (+) hom^{k-1} with
// differential (x, T) -> (-n^0 x, lambda(x) + dT).
FiniteComplex lambda_cone(const AInfModule& M, const AInfModule& yoneda,
                          size_t truncation);

// Windowed quasi-isomorphism certificate for lambda at finite truncation:
// the truncated cone agrees with the untruncated one in all cohomological
// degrees >= W (columns above the truncation cannot reach them); the
// certificate demands that W covers every degree where M(Y) has content and
// that the cone cohomology vanishes there.  Requires every non-unit algebra
// generator to have degree >= 3, else the window is empty
// (TruncationUnsound).
bool is_quasi_iso_lambda(const AInfModule& M, const AInfModule& yoneda,
                         size_t truncation);

}  // namespace ainfty
