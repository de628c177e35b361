#pragma once

#include "ainfty/algebra.hpp"
#include "ainfty/homology.hpp"

namespace ainfty {

// A left A-infinity module: operations n^k with k algebra inputs and one
// module input, the module input standing rightmost in the written tuple
// (a_k, ..., a_1, y).  intrinsic degree 1-k; n^0 is the degree +1
// differential.  Right modules are stored with the same layout and their
// relations checked through the bimodule checker with a trivial left side.
struct AInfModule {
    enum class Side { Left, Right };
    std::string name = "M";
    Side side = Side::Left;
    const CurvedAInfAlgebra* algebra = nullptr;
    Basis basis;
    std::map<size_t, MultilinearOp> ops;  // k -> n^k, arity k+1
    size_t k_max = 2;

    const MultilinearOp* op(size_t k) const;
    MultilinearOp& ensure_op(size_t k);
    void validate() const;
    // The complex (basis, n^0).
    FiniteComplex underlying_complex() const;
};

// A bimodule over (left_algebra, right_algebra): operations n^{k,l} on
// written tuples (c_k, ..., c_1, p, a_1, ..., a_l) with the c's from the
// left algebra and the a's from the right algebra; intrinsic degree 1-k-l.
struct AInfBimodule {
    std::string name = "P";
    const CurvedAInfAlgebra* left_algebra = nullptr;
    const CurvedAInfAlgebra* right_algebra = nullptr;
    Basis basis;
    std::map<std::pair<size_t, size_t>, MultilinearOp> ops;
    size_t k_max = 2;

    const MultilinearOp* op(size_t k, size_t l) const;
    MultilinearOp& ensure_op(size_t k, size_t l);
    void validate() const;
};

// A pre-module homomorphism: components t^d with d-1 algebra inputs and one
// module input (total arity d), d >= 1.  A homomorphism of degree s has
// components of intrinsic degree s + 1 - d; the identity has degree 0.
struct PreModuleHom {
    const AInfModule* source = nullptr;
    const AInfModule* target = nullptr;
    long long degree = 0;
    std::map<size_t, MultilinearOp> components;  // d -> t^d

    const MultilinearOp* component(size_t d) const;
    MultilinearOp& ensure_component(size_t d);
    void validate() const;
};

// The left Yoneda module of the object Y: underlying space the morphisms
// out of Y (src tag == Y), structure maps n^k(a_k,...,a_1,b) =
// m^{k+1}(a_k,...,a_1,b).
AInfModule yoneda_left(const CurvedAInfAlgebra& A, const std::string& Y = "*");

// Residuals of the curved module relations up to max_arity algebra inputs.
RelationReport check_module_relations(const AInfModule& M, size_t max_arity);

// Residuals of the curved bimodule relations for k + l <= max_arity.
RelationReport check_bimodule_relations(const AInfBimodule& P,
                                        size_t max_arity);

// b-insertions on the algebra side of every structure map; b degree 1.
AInfModule deform_module(const AInfModule& M, const Element& b);
AInfBimodule deform_bimodule(const AInfBimodule& P, const Element& b0,
                             const Element& b1);

// The module-valued functor of a bimodule.  On the object X of the right
// algebra the module F_P(X) has n^k = n^{k,0}; on a morphism tuple
// (a_l, ..., a_1) the pre-module homomorphism has components
// (F^l(a_l,...,a_1))^{k+1}(b_k,...,b_1,p) = n^{k,l}(b_k,...,b_1,p,a_l,...,a_1).
AInfModule bimodule_functor_object(const AInfBimodule& P,
                                   const std::string& X = "*");
PreModuleHom bimodule_functor_morphism(const AInfBimodule& P,
                                       const AInfModule& source_module,
                                       const AInfModule& target_module,
                                       const std::vector<GenId>& right_tuple);

}  // namespace ainfty
