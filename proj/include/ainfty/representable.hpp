#pragma once

#include <memory>

#include "ainfty/hom_complex.hpp"

namespace ainfty {

struct RepresentabilityResult {
    bool representable = false;
    std::shared_ptr<AInfModule> yoneda;  // keeps the witness source alive
    PreModuleHom witness;                // valid when representable
    std::string reason;                  // set when not representable
};

// Detects whether F_X is quasi-isomorphic to the Yoneda module of Y at the
// given hom-complex truncation: searches the lattice of degree-0 cocycles
// T in hom(Y^l, F_X) for one whose first component induces an integral
// homology isomorphism (certified through Smith normal form).  The search
// tries single lattice basis vectors first and then bounded integer
// combinations, up to `budget` candidates.
RepresentabilityResult is_representable_on_object(const AInfModule& F_X,
                                                  const std::string& Y = "*",
                                                  size_t truncation = 4,
                                                  size_t budget = 4096);

}  // namespace ainfty
