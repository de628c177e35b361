#include "ainfty/mc.hpp"

#include <algorithm>
#include <set>

#include "ainfty/homology.hpp"

namespace ainfty {

FiltrationProfile filtration_profile(const Basis& basis) {
    FiltrationProfile p;
    p.levels = basis.levels();
    p.zero_included =
        std::find(p.levels.begin(), p.levels.end(), Rat(0)) != p.levels.end();
    return p;
}

namespace {

std::set<Rat> levels_with_zero(const Basis& b) {
    std::set<Rat> s;
    for (const Rat& l : b.levels()) s.insert(l);
    s.insert(Rat(0));
    return s;
}

}  // namespace

CyclicElementCertificate verify_cyclic(const CurvedAInfAlgebra& C,
                                       const AInfModule& D, const Element& u) {
    if (D.algebra != &C) throw SemanticError("module is not over this algebra");
    if (levels_with_zero(C.basis) != levels_with_zero(D.basis))
        throw NotStrictlyCompatible("filtration level sets differ");

    // u in F^0 with a nonzero level-0 part
    bool has_zero_part = false;
    for (const auto& [id, c] : u.terms()) {
        const Rat& f = D.basis.filtration(id);
        if (f < 0)
            throw NotFiltrationPreserving("u has a negative-filtration term");
        if (f == 0) has_zero_part = true;
    }
    if (!has_zero_part)
        throw NotFiltrationPreserving("u has no filtration-0 part");

    // iso matrix of x -> n^1(x; u)
    if (C.basis.size() != D.basis.size())
        throw NotIsomorphism("rank mismatch between algebra and module");
    const MultilinearOp* n1 = D.op(1);
    IntMat iso(D.basis.size(), C.basis.size());
    for (GenId x : C.basis.ids()) {
        Element v;
        if (n1) {
            std::vector<Element> args = {Element::generator(x), u};
            v = n1->evaluate(args);
        }
        for (GenId row : D.basis.ids()) iso.at(row, x) = v.coeff(row);
    }
    Int det = determinant(iso);
    if (det != 1 && det != -1)
        throw NotIsomorphism("n^1(.; u) has determinant " + det.get_str());

    // filtration-preserving: entries only raise the level
    for (GenId x : C.basis.ids())
        for (GenId row : D.basis.ids())
            if (iso.at(row, x) != 0 &&
                D.basis.filtration(row) < C.basis.filtration(x))
                throw NotFiltrationPreserving(
                    "n^1(.; u) lowers the filtration");

    // inverse filtration-preserving: square unimodular diagonal blocks
    for (const Rat& level : C.basis.levels()) {
        std::vector<GenId> cols = C.basis.at_level(level);
        std::vector<GenId> rows = D.basis.at_level(level);
        if (cols.size() != rows.size())
            throw NotFiltrationPreserving(
                "level dimensions differ; no filtration-preserving inverse");
        IntMat block(rows.size(), cols.size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j)
                block.at(i, j) = iso.at(rows[i], cols[j]);
        Int bd = determinant(block);
        if (bd != 1 && bd != -1)
            throw NotFiltrationPreserving(
                "diagonal block at one level is not unimodular");
    }

    // n^0(u) strictly raises the filtration
    Element n0u;
    if (const MultilinearOp* n0 = D.op(0)) {
        std::vector<Element> args = {u};
        n0u = n0->evaluate(args);
    }
    for (const auto& [id, c] : n0u.terms())
        if (!(D.basis.filtration(id) > 0))
            throw N0DoesNotIncrease("n^0(u) has a term at filtration <= 0");

    return {u, iso, n0u};
}

MultilinearOp deformed_module_differential(const AInfModule& D,
                                           const Element& b) {
    if (!b.is_zero()) {
        auto deg = b.homogeneous_degree(D.algebra->basis);
        if (!deg || *deg != 1)
            throw WrongDegree("d^b needs b homogeneous of degree 1");
    }
    MultilinearOp out(1, 1);
    for (GenId y : D.basis.ids()) {
        Element acc;
        for (const auto& [k, n] : D.ops) {
            std::vector<Element> args(k, b);
            args.push_back(Element::generator(y));
            acc += n.evaluate(args);
        }
        out.set_entry({y}, acc);
    }
    return out;
}

namespace {

Element apply_db(const AInfModule& D, const Element& b, const Element& u) {
    Element acc;
    for (const auto& [k, n] : D.ops) {
        std::vector<Element> args(k, b);
        args.push_back(u);
        acc += n.evaluate(args);
    }
    return acc;
}

}  // namespace

Element solve_bounding_cochain(const CurvedAInfAlgebra& C, const AInfModule& D,
                               const CyclicElementCertificate& cert) {
    const Element& u = cert.u;
    auto udeg = u.homogeneous_degree(D.basis);
    if (!udeg) throw NoSolution("the cyclic element must be homogeneous");

    // unknowns: degree-1 generators of strictly positive filtration,
    // grouped by level
    std::map<Rat, std::vector<GenId>> unknowns;
    for (GenId g : C.basis.ids())
        if (C.basis.degree(g) == 1 && C.basis.filtration(g) > 0)
            unknowns[C.basis.filtration(g)].push_back(g);

    if (unknowns.empty()) {
        if (!C.curvature().is_zero())
            throw NoSolution("curved algebra with no degree-1 unknowns");
        if (!apply_db(D, Element{}, u).is_zero())
            throw NoSolution("n^0(u) != 0 with no unknowns to solve for");
        return Element{};
    }

    Element b;
    for (const auto& [level, gens] : unknowns) {
        // rows: module generators at exactly this level, in the degree the
        // equation lives in (|u| + 1)
        std::vector<GenId> rows;
        for (GenId g : D.basis.at_level(level))
            if (D.basis.degree(g) == *udeg + 1) rows.push_back(g);
        Element residual = apply_db(D, b, u);
        std::vector<Int> rhs(rows.size());
        for (size_t i = 0; i < rows.size(); ++i)
            rhs[i] = -residual.coeff(rows[i]);
        // nonlinear terms in the level's unknowns land strictly above it,
        // so the level system is linear with the certificate's unimodular
        // diagonal block as coefficient matrix
        IntMat mat(rows.size(), gens.size());
        for (size_t j = 0; j < gens.size(); ++j) {
            Element with = apply_db(D, b + Element::generator(gens[j]), u);
            Element delta = with - residual;
            for (size_t i = 0; i < rows.size(); ++i)
                mat.at(i, j) = delta.coeff(rows[i]);
        }
        if (rows.size() != gens.size())
            throw NoSolution("level system is not square");
        Int det = determinant(mat);
        if (det != 1 && det != -1)
            throw NoSolution("level system is not unimodular");
        auto sol = solve_exact(mat, rhs);
        if (!sol) throw NoSolution("no integral solution at one level");
        for (size_t j = 0; j < gens.size(); ++j)
            b.add_term(gens[j], (*sol)[j]);
    }

    if (!apply_db(D, b, u).is_zero())
        throw NoSolution("residual survives above the solved levels");
    if (!mc_residual(C, b).is_zero())
        throw NoSolution("solution fails the Maurer-Cartan equation");
    return b;
}

}  // namespace ainfty
