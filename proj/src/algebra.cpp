#include "ainfty/algebra.hpp"

#include <functional>

namespace ainfty {

const MultilinearOp* CurvedAInfAlgebra::op(size_t k) const {
    auto it = ops.find(k);
    return it == ops.end() ? nullptr : &it->second;
}

MultilinearOp& CurvedAInfAlgebra::ensure_op(size_t k) {
    auto it = ops.find(k);
    if (it == ops.end())
        it = ops.emplace(k, MultilinearOp(k, 2 - static_cast<long long>(k)))
                 .first;
    return it->second;
}

Element CurvedAInfAlgebra::curvature() const {
    const MultilinearOp* m0 = op(0);
    return m0 ? m0->entry({}) : Element{};
}

void CurvedAInfAlgebra::validate() const {
    for (const auto& [k, m] : ops) {
        if (m.arity() != k)
            throw ArityMismatch("m^" + std::to_string(k) + " has arity " +
                                std::to_string(m.arity()));
        if (m.intrinsic_degree() != 2 - static_cast<long long>(k))
            throw DegreeMismatch("m^" + std::to_string(k) +
                                 " must have intrinsic degree 2-k");
        if (k > k_max && !m.is_zero())
            throw ArityMismatch("operation above the support bound k_max");
        std::vector<const Basis*> slots(k, &basis);
        validate_op(m, slots, basis);
    }
    if (unit && (basis.degree(*unit) != 0 || basis.filtration(*unit) != 0))
        throw SemanticError("unit must sit in degree 0 and filtration 0");
}

RelationReport check_relations(const CurvedAInfAlgebra& A, size_t max_arity) {
    RelationReport report;
    for (size_t d = 0; d <= max_arity; ++d) {
        MultilinearOp residual(d, 3 - static_cast<long long>(d));
        for (size_t m = 0; m <= d + 1; ++m) {
            const size_t k = d + 1 - m;  // outer arity, k + m - 1 = d
            if (k == 0) continue;        // m^0 takes no insertions
            const MultilinearOp* outer = A.op(k);
            const MultilinearOp* inner = A.op(m);
            if (!outer || !inner) continue;
            for (size_t pos = 0; pos < k; ++pos)
                residual += compose_insert(A.basis, *outer, *inner, pos);
        }
        for (const auto& [tuple, value] : residual.table())
            report.findings.push_back({d, tuple, value});
    }
    return report;
}

bool check_unit(const CurvedAInfAlgebra& A) {
    if (!A.unit) throw MissingUnit("algebra has no designated unit");
    const GenId e = *A.unit;
    if (const MultilinearOp* m1 = A.op(1)) {
        if (!m1->entry({e}).is_zero()) return false;
    }
    const MultilinearOp* m2 = A.op(2);
    if (!m2) return false;
    for (GenId a : A.basis.ids()) {
        Element right = m2->entry({a, e});
        Element left = m2->entry({e, a});
        if (!(right == Element::generator(a))) return false;
        Element expect = Element::generator(a, parity_sign(A.basis.degree(a)));
        if (!(left == expect)) return false;
    }
    for (const auto& [k, m] : A.ops) {
        if (k < 3) continue;
        for (const auto& [tuple, value] : m.table())
            for (GenId g : tuple)
                if (g == e && !value.is_zero()) return false;
    }
    return true;
}

namespace {

// For one op, check that every evaluation with b in exactly the slots of
// some size-j subset (and generators elsewhere) vanishes.  Scanning the
// sparse table once per subset covers all generator fillings.
bool insertions_vanish(const MultilinearOp& m, const Element& b, size_t j) {
    const size_t n = m.arity();
    if (j > n) return true;
    std::vector<size_t> subset(j);
    std::function<bool(size_t, size_t)> rec = [&](size_t idx,
                                                  size_t from) -> bool {
        if (idx == j) {
            std::map<std::vector<GenId>, Element> acc;
            for (const auto& [tuple, value] : m.table()) {
                Int c = 1;
                for (size_t s : subset) {
                    c *= b.coeff(tuple[s]);
                    if (c == 0) break;
                }
                if (c == 0) continue;
                std::vector<GenId> rest;
                rest.reserve(n - j);
                size_t si = 0;
                for (size_t q = 0; q < n; ++q) {
                    if (si < j && subset[si] == q) {
                        ++si;
                        continue;
                    }
                    rest.push_back(tuple[q]);
                }
                acc[rest] += c * value;
            }
            for (const auto& [rest, v] : acc)
                if (!v.is_zero()) return false;
            return true;
        }
        for (size_t s = from; s + (j - idx) <= n; ++s) {
            subset[idx] = s;
            if (!rec(idx + 1, s + 1)) return false;
        }
        return true;
    };
    return rec(0, 0);
}

}  // namespace

std::optional<size_t> insertion_vanish_bound(const CurvedAInfAlgebra& A,
                                             const Element& b) {
    if (b.is_zero()) return 0;
    // Finite tables make the sweep complete: arities above k_max vanish
    // identically, so a bound of k_max + 1 always works and the question is
    // only how early the insertions die.
    std::vector<bool> vanish(A.k_max + 2, true);
    for (size_t j = 1; j <= A.k_max; ++j)
        for (const auto& [k, m] : A.ops)
            if (!insertions_vanish(m, b, j)) {
                vanish[j] = false;
                break;
            }
    size_t bound = A.k_max + 1;
    while (bound > 0 && vanish[bound]) --bound;
    return bound + 1;
}

Element mc_residual(const CurvedAInfAlgebra& A, const Element& b) {
    if (!b.is_zero()) {
        auto deg = b.homogeneous_degree(A.basis);
        if (!deg || *deg != 1)
            throw WrongDegree(
                "Maurer-Cartan input must be homogeneous of degree 1");
    }
    Element acc = A.curvature();
    for (const auto& [k, m] : A.ops) {
        if (k == 0) continue;
        std::vector<Element> args(k, b);
        acc += m.evaluate(args);
    }
    return acc;
}

CurvedAInfAlgebra deform(const CurvedAInfAlgebra& A, const Element& b) {
    if (!b.is_zero()) {
        auto deg = b.homogeneous_degree(A.basis);
        if (!deg || *deg != 1)
            throw WrongDegree(
                "deformation element must be homogeneous of degree 1");
    }
    if (!insertion_vanish_bound(A, b))
        throw NotNilpotent("deformation element is not nilpotent");

    CurvedAInfAlgebra out;
    out.name = A.name + ".deformed";
    out.basis = A.basis;
    out.unit = A.unit;
    out.k_max = A.k_max;

    // m^{k;b} sums every way of viewing a tuple of m^n as k surviving
    // slots plus n-k slots fed with b.  |b| = 1, so no signs arise.
    for (const auto& [n, m] : A.ops) {
        for (const auto& [tuple, value] : m.table()) {
            const size_t nn = tuple.size();
            for (unsigned long mask = 0; mask < (1ul << nn); ++mask) {
                Int c = 1;
                std::vector<GenId> rest;
                for (size_t q = 0; q < nn && c != 0; ++q) {
                    if (mask & (1ul << q))
                        c *= b.coeff(tuple[q]);
                    else
                        rest.push_back(tuple[q]);
                }
                if (c == 0) continue;
                out.ensure_op(rest.size()).add_entry(rest, c * value);
            }
        }
        if (n == 0 && m.table().empty()) out.ensure_op(0);
    }
    for (size_t k = 0; k <= 2; ++k)
        if (A.op(k)) out.ensure_op(k);

    if (mc_residual(A, b).is_zero()) {
        // Asserted, not assumed: a Maurer-Cartan solution kills the
        // curvature and squares the deformed differential to zero.
        if (!out.curvature().is_zero())
            throw NoSolution("deformation by an MC element kept curvature");
        if (const MultilinearOp* m1 = out.op(1)) {
            for (GenId g : out.basis.ids()) {
                std::vector<Element> arg = {m1->entry({g})};
                if (!m1->evaluate(arg).is_zero())
                    throw NoSolution(
                        "deformed differential does not square to zero");
            }
        }
    }
    return out;
}

}  // namespace ainfty
