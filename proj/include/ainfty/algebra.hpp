#pragma once

#include <optional>

#include "ainfty/op.hpp"

namespace ainfty {

// A curved A-infinity algebra over Z: a basis plus operations m^k of
// intrinsic degree 2-k for k = 0..k_max.  m^0 evaluated on the empty tuple
// is the curvature.  The sign convention throughout is the reduced-degree
// one: with inputs written (a_d, ..., a_1), the relation reads
//
//   sum (-1)^{|a_1|+...+|a_n|-n} m(a_d, ..., m(a_{n+m}, ..., a_{n+1}), ..., a_1) = 0
//
// including m^0 insertions.  Strict unitality in this convention is
// m^2(a, e) = a and m^2(e, a) = (-1)^{|a|} a.
struct CurvedAInfAlgebra {
    std::string name = "A";
    Basis basis;
    std::map<size_t, MultilinearOp> ops;  // arity k -> m^k
    std::optional<GenId> unit;
    size_t k_max = 2;

    const MultilinearOp* op(size_t k) const;
    MultilinearOp& ensure_op(size_t k);
    Element curvature() const;  // m^0 on the empty tuple
    void validate() const;
};

struct RelationFinding {
    size_t arity;
    std::vector<GenId> inputs;
    Element residual;
};

struct RelationReport {
    std::vector<RelationFinding> findings;
    bool empty() const { return findings.empty(); }
};

// Residual of every curved A-infinity relation of total arity <= max_arity,
// computed as the signed sum of all compose_insert terms and scanned over
// the table support.
RelationReport check_relations(const CurvedAInfAlgebra& A, size_t max_arity);
inline size_t default_max_arity(const CurvedAInfAlgebra& A) {
    return A.k_max + 2;
}

// Strict unitality: m^1(e) = 0, m^2(a, e) = a, m^2(e, a) = (-1)^{|a|} a,
// and m^k vanishes on any tuple containing e for k >= 3.
bool check_unit(const CurvedAInfAlgebra& A);

// sum_k m^k(b, ..., b), b nilpotent of degree 1.
Element mc_residual(const CurvedAInfAlgebra& A, const Element& b);

// Smallest I such that every evaluation with >= I insertions of b vanishes;
// nullopt if the sweep fails to stabilize (not nilpotent).
std::optional<size_t> insertion_vanish_bound(const CurvedAInfAlgebra& A,
                                             const Element& b);

// The algebra with operations m^{k;b} (all ways of inserting b).  Requires b
// homogeneous of degree 1 and nilpotent.  When b solves the Maurer-Cartan
// equation the result is asserted flat with square-zero differential.
CurvedAInfAlgebra deform(const CurvedAInfAlgebra& A, const Element& b);

}  // namespace ainfty
