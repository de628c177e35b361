#include "ainfty/representable.hpp"

#include <functional>

namespace ainfty {

namespace {

bool same_summary(const HomologySummary& a, const HomologySummary& b) {
    return a.by_degree.size() == b.by_degree.size() &&
           std::equal(a.by_degree.begin(), a.by_degree.end(),
                      b.by_degree.begin(), [](const auto& x, const auto& y) {
                          return x.first == y.first &&
                                 x.second.betti == y.second.betti &&
                                 x.second.torsion == y.second.torsion;
                      });
}

// T^1 as a degree-0 chain map between the underlying complexes.
bool first_component_quasi_iso(const PreModuleHom& T,
                               const FiniteComplex& src,
                               const FiniteComplex& dst) {
    const MultilinearOp* t1 = T.component(1);
    ChainMap f;
    f.src = &src;
    f.dst = &dst;
    std::map<long long, std::vector<GenId>> sdeg, ddeg;
    for (GenId g : T.source->basis.ids())
        sdeg[T.source->basis.degree(g)].push_back(g);
    for (GenId g : T.target->basis.ids())
        ddeg[T.target->basis.degree(g)].push_back(g);
    for (const auto& [k, sg] : sdeg) {
        auto dit = ddeg.find(k);
        IntMat m(dit == ddeg.end() ? 0 : dit->second.size(), sg.size());
        if (t1 && dit != ddeg.end())
            for (size_t j = 0; j < sg.size(); ++j) {
                Element v = t1->entry({sg[j]});
                for (size_t i = 0; i < dit->second.size(); ++i)
                    m.at(i, j) = v.coeff(dit->second[i]);
            }
        f.mats[k] = m;
    }
    try {
        return is_quasi_iso(f);
    } catch (const NotChainMap&) {
        return false;
    }
}

}  // namespace

RepresentabilityResult is_representable_on_object(const AInfModule& F_X,
                                                  const std::string& Y,
                                                  size_t truncation,
                                                  size_t budget) {
    RepresentabilityResult res;
    const CurvedAInfAlgebra& A = *F_X.algebra;
    res.yoneda = std::make_shared<AInfModule>(yoneda_left(A, Y));
    AInfModule& yon = *res.yoneda;

    FiniteComplex cy = yon.underlying_complex();
    FiniteComplex cf = F_X.underlying_complex();
    if (!same_summary(cohomology(cy), cohomology(cf))) {
        res.reason = "homology mismatch with the Yoneda module";
        return res;
    }

    HomComplex H = build_hom_complex(yon, F_X, truncation);
    FiniteComplex hom = H.as_complex();
    auto zero_deg = H.basis.find(0);
    if (zero_deg == H.basis.end()) {
        res.reason = "no degree-0 homs at this truncation";
        return res;
    }
    IntMat d0 = hom.differential(0);
    IntMat kernel = kernel_basis(d0);

    // Candidate coefficient vectors over the cocycle lattice: basis vectors
    // first, then combinations with coefficients in {-1, 0, 1}, then {-2..2}.
    const size_t rank = kernel.cols();
    std::vector<std::vector<Int>> candidates;
    for (size_t j = 0; j < rank && candidates.size() < budget; ++j) {
        std::vector<Int> c(rank, 0);
        c[j] = 1;
        candidates.push_back(c);
    }
    for (int radius : {1, 2}) {
        std::vector<Int> c(rank, 0);
        std::function<void(size_t)> rec = [&](size_t i) {
            if (candidates.size() >= budget) return;
            if (i == rank) {
                bool nonzero = false, basisvec = false;
                int nz = 0;
                for (const Int& x : c)
                    if (x != 0) { nonzero = true; ++nz; }
                basisvec = nz == 1 && radius == 1;
                if (nonzero && !basisvec) candidates.push_back(c);
                return;
            }
            for (int v = -radius; v <= radius; ++v) {
                c[i] = v;
                rec(i + 1);
            }
            c[i] = 0;
        };
        if (rank <= 8) rec(0);
    }

    for (const auto& coeffs : candidates) {
        std::vector<Int> coords(zero_deg->second.size(), 0);
        for (size_t j = 0; j < rank; ++j) {
            if (coeffs[j] == 0) continue;
            for (size_t i = 0; i < coords.size(); ++i)
                coords[i] += coeffs[j] * kernel.at(i, j);
        }
        bool nonzero = false;
        for (const Int& x : coords)
            if (x != 0) { nonzero = true; break; }
        if (!nonzero) continue;
        PreModuleHom T = H.from_coords(0, coords);
        if (first_component_quasi_iso(T, cy, cf)) {
            res.representable = true;
            res.witness = T;
            return res;
        }
    }
    res.reason = "no witness found within the search budget";
    return res;
}

}  // namespace ainfty
