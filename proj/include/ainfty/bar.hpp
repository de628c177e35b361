#pragma once

#include "ainfty/module.hpp"

namespace ainfty {

// Cohomology of a finite free complex (a graded basis with an arity-1
// differential), with chosen integral representatives and an exact
// projection of cycles onto the cohomology basis.  The bar page needs the
// cohomology free; torsion is rejected.
class CohomologyData {
public:
    CohomologyData() = default;
    CohomologyData(const Basis& basis, const MultilinearOp* d);

    const Basis* basis() const { return basis_; }
    size_t rank(long long deg) const;
    const Element& rep(long long deg, size_t i) const;
    // coordinates of a cycle in the cohomology basis of its degree
    std::vector<Int> project(long long deg, const Element& cycle) const;
    std::vector<long long> degrees() const;

private:
    struct Piece {
        std::vector<GenId> gens;  // basis ids in this degree
        IntMat cycles;            // columns: cycle basis in gen coords
        IntMat u_r;               // SNF row transform of the image lattice
        size_t image_rank = 0;
        std::vector<Element> reps;
    };
    const Basis* basis_ = nullptr;
    std::map<long long, Piece> pieces_;
};

// The E_1 page of the length filtration on the mapping cone of
// lambda: M(Y) -> hom(Y^l, M), built at the cohomology level.  For r >= 1,
// E1^{r,s} consists of intrinsic-degree-s multilinear maps
// H(A)^{x(r-1)} x H(Y^l) -> H(M); E1^{0,s} = H^s(M(Y)).  The differential
// (with sigma = s + r - 1 the hom degree) is
//
//   d(t)(a_r,..,a_1,y) = n^1(a_r; t(a_{r-1},..,a_1,y))
//     - (-1)^sigma [ sum_n (-1)^{koszul suffix right of the pair}
//                       t(a_r,.., m^2(a_{n+1},a_n), ..,a_1,y)
//                  + t(a_r,..,a_2, m^2(a_1,y)) ],
//
// and kappa(t)(a_{r-1},..,a_1,y) = (-1)^{s+r} t(a_{r-1},..,a_1,y,e) is the
// contracting homotopy, with kappa d + d kappa = id on columns r >= 1.
class BarPage {
public:
    BarPage(const CurvedAInfAlgebra& A, const AInfModule& yoneda,
            const AInfModule& M);

    struct HRef {
        long long deg;
        size_t idx;
        auto operator<=>(const HRef&) const = default;
    };

    struct Column {
        size_t r;
        long long s;
        struct Elem {
            std::vector<HRef> tuple;  // r-1 algebra classes + 1 Yoneda class
            HRef out;                 // target class
        };
        std::vector<Elem> basis;
        std::vector<std::string> labels;
        IntMat d_out;  // differential into column r+1
    };

    Column column(size_t r, long long s) const;
    // kappa: E1^{r+1,s} -> E1^{r,s}
    IntMat kappa(size_t r, long long s) const;

    const CohomologyData& algebra_cohomology() const { return ha_; }
    const CohomologyData& module_cohomology() const { return hm_; }

private:
    std::vector<Column::Elem> enumerate(size_t r, long long s) const;
    std::vector<Int> hm2_coords(const HRef& a, const HRef& b) const;
    std::vector<Int> habs_coords(const HRef& a, const HRef& y) const;
    std::vector<Int> hact_coords(const HRef& a, const HRef& m) const;
    std::vector<Int> yoneda_to_algebra(const HRef& y) const;
    std::vector<Int> unit_class() const;  // in H(Y^l) coords at degree 0

    const CurvedAInfAlgebra* a_;
    const AInfModule* n_;
    const AInfModule* m_;
    CohomologyData ha_, hn_, hm_;
};

}  // namespace ainfty
