#pragma once

#include "ainfty/homology.hpp"

namespace ainfty {

// A directed system of finite complexes with comparison maps into a second
// tower and correcting auto-equivalences: squares
//
//   A_d --i_d--> A_{d+1}
//    |F_d          |F_{d+1}
//   B_d --j_d o H_d--> B_{d+1}
//
// must commute strictly after correction: j_d . H_d . F_d = F_{d+1} . i_d.
struct DirectedSystem {
    std::vector<FiniteComplex> stages;       // A_1 .. A_N
    std::vector<FiniteComplex> targets;      // B_1 .. B_N
    std::vector<ChainMap> inclusions;        // i_d: A_d -> A_{d+1}, split
    std::vector<ChainMap> target_inclusions; // j_d: B_d -> B_{d+1}, split
    std::vector<ChainMap> comparisons;       // F_d: A_d -> B_d
    std::vector<ChainMap> corrections;       // H_d: B_d -> B_d, invertible

    void validate_shapes() const;
};

struct SystemReport {
    struct SquareResidual {
        size_t stage;             // d
        long long degree;
        IntMat residual;          // j H F - F' i at this degree
    };
    std::vector<SquareResidual> findings;
    bool empty() const { return findings.empty(); }
};

// Checks split injectivity of the inclusions, invertibility of the
// corrections, and strict commutation of every corrected square.
SystemReport verify_system(const DirectedSystem& s);

struct DirectLimit {
    FiniteComplex complex;   // the union complex (the last stage)
    ChainMap limit_map;      // induced comparison into the last target
    size_t stabilized_at;    // first stage with all later inclusions iso
};

// The colimit of a finite directed system along split injections, with the
// induced limit map; requires verify_system to come back empty.
DirectLimit direct_limit(const DirectedSystem& s);

}  // namespace ainfty
