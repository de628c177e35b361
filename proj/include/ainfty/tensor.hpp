#pragma once

#include "ainfty/algebra.hpp"

namespace ainfty {

// Tensor product of two dgas (m^0 = 0, m^k = 0 for k >= 3): generators are
// pairs a(x)b, m^1 = m^1 (x) id + id (x) m^1 with the Koszul sign, m^2 the
// Koszul-signed product, all higher operations zero.
CurvedAInfAlgebra tensor_dg(const CurvedAInfAlgebra& A,
                            const CurvedAInfAlgebra& B);

// Checks that a(x)b -> (-1)^{|a||b|} b(x)a is a strict dga isomorphism
// tensor_dg(A,B) -> tensor_dg(B,A).
bool tensor_swap_is_iso(const CurvedAInfAlgebra& A,
                        const CurvedAInfAlgebra& B);

}  // namespace ainfty
