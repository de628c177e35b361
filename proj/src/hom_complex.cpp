#include "ainfty/hom_complex.hpp"

#include <functional>

namespace ainfty {

namespace {

void require_flat_unital(const CurvedAInfAlgebra& A) {
    if (!A.curvature().is_zero())
        throw SemanticError("hom complexes require a flat algebra");
    if (!A.unit) throw NotUnital("hom complexes require a strict unit");
}

int suffix_sign(const std::vector<long long>& degrees, size_t from) {
    long long e = 0;
    for (size_t q = from; q < degrees.size(); ++q) e += degrees[q] - 1;
    return parity_sign(e);
}

}  // namespace

PreModuleHom hom_differential(const PreModuleHom& T, size_t truncation) {
    const AInfModule& N = *T.source;
    const AInfModule& M = *T.target;
    const CurvedAInfAlgebra& A = *N.algebra;
    require_flat_unital(A);
    const long long s = T.degree;

    PreModuleHom out;
    out.source = T.source;
    out.target = T.target;
    out.degree = s + 1;

    for (size_t d = 1; d <= truncation; ++d) {
        MultilinearOp& comp = out.ensure_component(d);
        std::vector<GenId> tuple(d);
        std::vector<long long> degrees(d);
        std::function<void(size_t)> walk = [&](size_t slot) {
            if (slot + 1 < d) {
                for (GenId g : A.basis.ids()) {
                    tuple[slot] = g;
                    degrees[slot] = A.basis.degree(g);
                    walk(slot + 1);
                }
                return;
            }
            for (GenId y : N.basis.ids()) {
                tuple[d - 1] = y;
                degrees[d - 1] = N.basis.degree(y);
                Element acc;
                // n_M(a_{d-1},..,a_{j+1}; T^{j+1}(a_j,..,a_1,y))
                for (size_t j = 0; j + 1 <= d; ++j) {
                    const MultilinearOp* tj = T.component(j + 1);
                    const MultilinearOp* outer = M.op(d - 1 - j);
                    if (!tj || !outer) continue;
                    std::vector<GenId> in(tuple.begin() + (d - 1 - j),
                                          tuple.end());
                    Element mid = tj->entry(in);
                    if (mid.is_zero()) continue;
                    std::vector<Element> args;
                    for (size_t q = 0; q + 1 + j < d; ++q)
                        args.push_back(Element::generator(tuple[q]));
                    args.push_back(mid);
                    acc += outer->evaluate(args);
                }
                // - (-1)^s (-1)^{suffix} T(.., m^m(block), .., y)
                for (size_t m = 1; m + 1 <= d; ++m) {
                    const MultilinearOp* inner = A.op(m);
                    const MultilinearOp* tcomp = T.component(d - m + 1);
                    if (!inner || !tcomp) continue;
                    for (size_t i = 0; i + m <= d - 1; ++i) {
                        std::vector<GenId> in(tuple.begin() + i,
                                              tuple.begin() + i + m);
                        Element mid = inner->entry(in);
                        if (mid.is_zero()) continue;
                        int sign = -parity_sign(s) * suffix_sign(degrees, i + m);
                        std::vector<Element> args;
                        for (size_t q = 0; q < i; ++q)
                            args.push_back(Element::generator(tuple[q]));
                        args.push_back(mid);
                        for (size_t q = i + m; q < d; ++q)
                            args.push_back(Element::generator(tuple[q]));
                        acc += Int(sign) * tcomp->evaluate(args);
                    }
                }
                // - (-1)^s T(a_{d-1},..,a_{j+1}, n_N^j(a_j,..,a_1,y))
                for (size_t j = 0; j + 1 <= d; ++j) {
                    const MultilinearOp* inner = N.op(j);
                    const MultilinearOp* tcomp = T.component(d - j);
                    if (!inner || !tcomp) continue;
                    std::vector<GenId> in(tuple.begin() + (d - 1 - j),
                                          tuple.end());
                    Element mid = inner->entry(in);
                    if (mid.is_zero()) continue;
                    std::vector<Element> args;
                    for (size_t q = 0; q + 1 + j < d; ++q)
                        args.push_back(Element::generator(tuple[q]));
                    args.push_back(mid);
                    acc += Int(-parity_sign(s)) * tcomp->evaluate(args);
                }
                if (!acc.is_zero()) comp.add_entry(tuple, acc);
            }
        };
        if (d >= 1) walk(0);
    }
    return out;
}

HomComplex build_hom_complex(const AInfModule& N, const AInfModule& M,
                             size_t truncation) {
    if (N.algebra != M.algebra)
        throw SemanticError("hom complex endpoints over different algebras");
    const CurvedAInfAlgebra& A = *N.algebra;
    require_flat_unital(A);
    HomComplex H;
    H.source = &N;
    H.target = &M;
    H.truncation = truncation;

    const GenId e = *A.unit;
    std::vector<GenId> reduced;
    for (GenId g : A.basis.ids())
        if (g != e) reduced.push_back(g);

    for (size_t d = 1; d <= truncation; ++d) {
        std::vector<GenId> tuple(d);
        std::function<void(size_t)> walk = [&](size_t slot) {
            if (slot + 1 < d) {
                for (GenId g : reduced) {
                    tuple[slot] = g;
                    walk(slot + 1);
                }
                return;
            }
            for (GenId y : N.basis.ids()) {
                tuple[d - 1] = y;
                long long in_deg = 0;
                for (size_t q = 0; q + 1 < d; ++q)
                    in_deg += A.basis.degree(tuple[q]);
                in_deg += N.basis.degree(y);
                for (GenId out : M.basis.ids()) {
                    // intrinsic = s+1-d
                    long long s = M.basis.degree(out) - in_deg +
                                  static_cast<long long>(d) - 1;
                    H.basis[s].push_back(
                        {d, tuple, out, s});
                }
            }
        };
        walk(0);
    }
    return H;
}

FiniteComplex HomComplex::as_complex() const {
    FiniteComplex c;
    c.name = "hom(" + source->name + "," + target->name + ")<=" +
             std::to_string(truncation);
    const CurvedAInfAlgebra& A = *source->algebra;
    for (const auto& [s, elems] : basis) {
        std::vector<std::string> labels;
        for (const auto& el : elems) {
            std::string lab = "t" + std::to_string(el.d) + "(";
            for (size_t q = 0; q + 1 < el.d; ++q)
                lab += A.basis[el.tuple[q]].name + ",";
            lab += source->basis[el.tuple[el.d - 1]].name + ")->" +
                   target->basis[el.out].name;
            labels.push_back(lab);
        }
        c.pieces[s] = labels;
    }
    for (const auto& [s, elems] : basis) {
        auto up = basis.find(s + 1);
        const size_t rows = up == basis.end() ? 0 : up->second.size();
        IntMat d(rows, elems.size());
        if (rows == 0) {
            if (!elems.empty()) c.diff[s] = d;
            continue;
        }
        for (size_t j = 0; j < elems.size(); ++j) {
            PreModuleHom T = from_coords(s, [&] {
                std::vector<Int> v(elems.size(), 0);
                v[j] = 1;
                return v;
            }());
            PreModuleHom dT = hom_differential(T, truncation);
            for (size_t i = 0; i < rows; ++i) {
                const BasisElem& el = up->second[i];
                const MultilinearOp* comp = dT.component(el.d);
                if (!comp) continue;
                d.at(i, j) = comp->entry(el.tuple).coeff(el.out);
            }
        }
        c.diff[s] = d;
    }
    return c;
}

PreModuleHom HomComplex::from_coords(long long s,
                                     const std::vector<Int>& coords) const {
    auto it = basis.find(s);
    if (it == basis.end() || coords.size() != it->second.size())
        throw ArityMismatch("hom coordinate vector length");
    PreModuleHom T;
    T.source = source;
    T.target = target;
    T.degree = s;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        const BasisElem& el = it->second[i];
        T.ensure_component(el.d).add_entry(
            el.tuple, Element::generator(el.out, coords[i]));
    }
    return T;
}

std::vector<Int> HomComplex::to_coords(const PreModuleHom& T) const {
    auto it = basis.find(T.degree);
    if (it == basis.end()) throw ArityMismatch("hom degree outside the basis");
    std::vector<Int> v(it->second.size(), 0);
    for (size_t i = 0; i < it->second.size(); ++i) {
        const BasisElem& el = it->second[i];
        const MultilinearOp* comp = T.component(el.d);
        if (comp) v[i] = comp->entry(el.tuple).coeff(el.out);
    }
    return v;
}

PreModuleHom lambda_map(const AInfModule& M, const AInfModule& yoneda,
                        const Element& c, size_t truncation) {
    const CurvedAInfAlgebra& A = *M.algebra;
    require_flat_unital(A);
    auto cdeg = c.homogeneous_degree(M.basis);
    if (!c.is_zero() && !cdeg)
        throw WrongDegree("lambda argument must be homogeneous");
    PreModuleHom T;
    T.source = &yoneda;
    T.target = &M;
    T.degree = cdeg.value_or(0);
    const int twist = parity_sign(T.degree);
    for (size_t d = 1; d <= truncation; ++d) {
        const MultilinearOp* nd = M.op(d);
        if (!nd) continue;
        MultilinearOp& comp = T.ensure_component(d);
        for (const auto& [tuple, value] : nd->table()) {
            // tuple = (a_{d-1}, ..., a_1, b, y): contract y against c
            const Int coeff = c.coeff(tuple.back());
            if (coeff == 0) continue;
            std::vector<GenId> t(tuple.begin(), tuple.end() - 1);
            // the b slot holds an algebra generator; map into the Yoneda
            // module basis by name
            const std::string& bname = A.basis[t.back()].name;
            if (!yoneda.basis.has(bname)) continue;
            t.back() = yoneda.basis.id_of(bname);
            comp.add_entry(t, Int(twist) * coeff * value);
        }
    }
    return T;
}

FiniteComplex lambda_cone(const AInfModule& M, const AInfModule& yoneda,
                          size_t truncation) {
    const std::string Y = yoneda.basis.size()
                              ? yoneda.basis[0].src
                              : std::string("*");
    HomComplex H = build_hom_complex(yoneda, M, truncation);
    FiniteComplex hom = H.as_complex();

    // gens of M(Y) by degree
    std::map<long long, std::vector<GenId>> mY;
    for (GenId g : M.basis.ids())
        if (M.basis[g].src == Y || M.basis[g].src == "*")
            mY[M.basis.degree(g)].push_back(g);

    FiniteComplex c;
    c.name = "cone(lambda:" + M.name + ")";
    long long lo = hom.pieces.empty() ? 0 : hom.min_degree();
    long long hi = hom.pieces.empty() ? 0 : hom.max_degree();
    if (!mY.empty()) {
        lo = std::min(lo, mY.begin()->first - 1);
        hi = std::max(hi, mY.rbegin()->first - 1);
    }
    lo -= 1;
    hi += 1;

    auto mdim = [&](long long k) -> const std::vector<GenId>* {
        auto it = mY.find(k);
        return it == mY.end() ? nullptr : &it->second;
    };

    for (long long k = lo; k <= hi; ++k) {
        std::vector<std::string> labels;
        if (const auto* gs = mdim(k + 1))
            for (GenId g : *gs) labels.push_back("s." + M.basis[g].name);
        if (hom.dim(k - 1))
            for (const auto& l : hom.pieces.at(k - 1)) labels.push_back(l);
        if (!labels.empty()) c.pieces[k] = labels;
    }

    const MultilinearOp* n0 = M.op(0);
    for (long long k = lo; k <= hi; ++k) {
        const auto* src_m = mdim(k + 1);
        size_t cols = (src_m ? src_m->size() : 0) + hom.dim(k - 1);
        const auto* dst_m = mdim(k + 2);
        size_t rows = (dst_m ? dst_m->size() : 0) + hom.dim(k);
        if (rows == 0 || cols == 0) continue;
        IntMat d(rows, cols);
        const size_t row_off = dst_m ? dst_m->size() : 0;
        // -n^0 on the M(Y) part
        if (src_m && dst_m && n0) {
            for (size_t j = 0; j < src_m->size(); ++j) {
                Element v = n0->entry({(*src_m)[j]});
                for (size_t i = 0; i < dst_m->size(); ++i)
                    d.at(i, j) = -v.coeff((*dst_m)[i]);
            }
        }
        // lambda into the hom part
        if (src_m && hom.dim(k)) {
            auto bit = H.basis.find(k);
            for (size_t j = 0; j < src_m->size(); ++j) {
                PreModuleHom lam = lambda_map(
                    M, yoneda, Element::generator((*src_m)[j]), truncation);
                std::vector<Int> coords = H.to_coords(lam);
                for (size_t i = 0; i < coords.size(); ++i)
                    d.at(row_off + i, j) = coords[i];
            }
            (void)bit;
        }
        // hom differential
        if (hom.dim(k - 1) && hom.dim(k)) {
            IntMat dh = hom.differential(k - 1);
            const size_t col_off = src_m ? src_m->size() : 0;
            for (size_t i = 0; i < dh.rows(); ++i)
                for (size_t j = 0; j < dh.cols(); ++j)
                    d.at(row_off + i, col_off + j) = dh.at(i, j);
        }
        c.diff[k] = d;
    }
    return c;
}

bool is_quasi_iso_lambda(const AInfModule& M, const AInfModule& yoneda,
                         size_t truncation) {
    const CurvedAInfAlgebra& A = *M.algebra;
    require_flat_unital(A);
    const GenId e = *A.unit;

    // Degree data for the window: columns above the truncation can only
    // reach cone degrees up to maxM - minN + r - (r-1)*dmin, which decreases
    // in r exactly when every non-unit algebra generator has degree >= 3.
    long long dmin = 0;
    bool have = false;
    for (GenId g : A.basis.ids()) {
        if (g == e) continue;
        long long red = A.basis.degree(g) - 1;
        if (!have || red < dmin) dmin = red;
        have = true;
    }
    if (have && dmin < 2)
        throw TruncationUnsound(
            "cone window needs non-unit generators of degree >= 3");

    long long maxM = 0, minN = 0, minM = 0;
    for (GenId g : M.basis.ids()) {
        maxM = std::max(maxM, M.basis.degree(g));
        minM = std::min(minM, M.basis.degree(g));
    }
    for (GenId g : yoneda.basis.ids())
        minN = std::min(minN, yoneda.basis.degree(g));

    const long long r1 = static_cast<long long>(truncation) + 1;
    // hom degree of a column-r element is at most maxM - minIn + r - 1;
    // its cone degree one more.
    long long max_cone_above =
        have ? maxM - minN + r1 - (r1 - 1) * dmin : minM - 3;
    long long window_start = max_cone_above + 2;
    // M(Y) occupies cone degrees [minM-1, maxM-1]; the window must reach it.
    if (window_start > minM - 1)
        throw TruncationUnsound("truncation too short for the degree window");

    FiniteComplex cone = lambda_cone(M, yoneda, truncation);
    HomologySummary h = cohomology(cone);
    for (const auto& [k, p] : h.by_degree)
        if (k >= window_start && (p.betti != 0 || !p.torsion.empty()))
            return false;
    return true;
}

}  // namespace ainfty
