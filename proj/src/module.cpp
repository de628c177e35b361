#include "ainfty/module.hpp"

#include <functional>

namespace ainfty {

const MultilinearOp* AInfModule::op(size_t k) const {
    auto it = ops.find(k);
    return it == ops.end() ? nullptr : &it->second;
}

MultilinearOp& AInfModule::ensure_op(size_t k) {
    auto it = ops.find(k);
    if (it == ops.end())
        it = ops.emplace(k, MultilinearOp(k + 1, 1 - static_cast<long long>(k)))
                 .first;
    return it->second;
}

void AInfModule::validate() const {
    if (!algebra) throw SemanticError("module without algebra");
    for (const auto& [k, n] : ops) {
        if (n.arity() != k + 1)
            throw ArityMismatch("n^" + std::to_string(k) + " has arity " +
                                std::to_string(n.arity()));
        if (n.intrinsic_degree() != 1 - static_cast<long long>(k))
            throw DegreeMismatch("n^" + std::to_string(k) +
                                 " must have intrinsic degree 1-k");
        // Left modules carry the module input rightmost, right modules
        // leftmost.
        std::vector<const Basis*> slots;
        if (side == Side::Left) {
            slots.assign(k, &algebra->basis);
            slots.push_back(&basis);
        } else {
            slots.push_back(&basis);
            slots.insert(slots.end(), k, &algebra->basis);
        }
        validate_op(n, slots, basis);
    }
}

FiniteComplex AInfModule::underlying_complex() const {
    FiniteComplex c;
    c.name = name;
    std::map<long long, std::vector<GenId>> ids;
    for (GenId g : basis.ids()) {
        ids[basis.degree(g)].push_back(g);
        c.pieces[basis.degree(g)].push_back(basis[g].name);
    }
    const MultilinearOp* n0 = op(0);
    for (const auto& [k, gens] : ids) {
        auto up = ids.find(k + 1);
        if (up == ids.end()) continue;
        IntMat d(up->second.size(), gens.size());
        for (size_t j = 0; j < gens.size(); ++j) {
            if (!n0) continue;
            Element v = n0->entry({gens[j]});
            for (size_t i = 0; i < up->second.size(); ++i)
                d.at(i, j) = v.coeff(up->second[i]);
        }
        c.diff[k] = d;
    }
    return c;
}

const MultilinearOp* AInfBimodule::op(size_t k, size_t l) const {
    auto it = ops.find({k, l});
    return it == ops.end() ? nullptr : &it->second;
}

MultilinearOp& AInfBimodule::ensure_op(size_t k, size_t l) {
    auto it = ops.find({k, l});
    if (it == ops.end())
        it = ops.emplace(std::make_pair(k, l),
                         MultilinearOp(k + l + 1,
                                       1 - static_cast<long long>(k + l)))
                 .first;
    return it->second;
}

void AInfBimodule::validate() const {
    if (!left_algebra || !right_algebra)
        throw SemanticError("bimodule without algebras");
    for (const auto& [kl, n] : ops) {
        auto [k, l] = kl;
        if (n.arity() != k + l + 1)
            throw ArityMismatch("n^{k,l} arity");
        if (n.intrinsic_degree() != 1 - static_cast<long long>(k + l))
            throw DegreeMismatch("n^{k,l} must have intrinsic degree 1-k-l");
        std::vector<const Basis*> slots(k, &left_algebra->basis);
        slots.push_back(&basis);
        for (size_t i = 0; i < l; ++i) slots.push_back(&right_algebra->basis);
        validate_op(n, slots, basis);
    }
}

const MultilinearOp* PreModuleHom::component(size_t d) const {
    auto it = components.find(d);
    return it == components.end() ? nullptr : &it->second;
}

MultilinearOp& PreModuleHom::ensure_component(size_t d) {
    if (d == 0) throw ArityMismatch("pre-module hom components start at d=1");
    auto it = components.find(d);
    if (it == components.end())
        it = components
                 .emplace(d, MultilinearOp(d, degree + 1 -
                                                  static_cast<long long>(d)))
                 .first;
    return it->second;
}

void PreModuleHom::validate() const {
    if (!source || !target) throw SemanticError("hom without endpoints");
    if (source->algebra != target->algebra)
        throw SemanticError("hom endpoints over different algebras");
    for (const auto& [d, t] : components) {
        if (d == 0 || t.arity() != d) throw ArityMismatch("component arity");
        if (t.intrinsic_degree() != degree + 1 - static_cast<long long>(d))
            throw DegreeMismatch("component intrinsic degree");
        std::vector<const Basis*> slots(d - 1, &source->algebra->basis);
        slots.push_back(&source->basis);
        validate_op(t, slots, target->basis);
    }
}

AInfModule yoneda_left(const CurvedAInfAlgebra& A, const std::string& Y) {
    AInfModule M;
    M.name = "yoneda(" + A.name + "," + Y + ")";
    M.side = AInfModule::Side::Left;
    M.algebra = &A;
    M.k_max = A.k_max > 0 ? A.k_max - 1 : 0;
    std::map<GenId, GenId> to_module;
    for (GenId g : A.basis.ids())
        if (A.basis[g].src == Y)
            to_module[g] = M.basis.add(A.basis[g]);
    for (const auto& [k, m] : A.ops) {
        if (k == 0) continue;
        MultilinearOp& nk = M.ensure_op(k - 1);
        for (const auto& [tuple, value] : m.table()) {
            auto last = to_module.find(tuple.back());
            if (last == to_module.end()) continue;
            std::vector<GenId> t = tuple;
            t.back() = last->second;
            Element out;
            bool ok = true;
            for (const auto& [id, c] : value.terms()) {
                auto it = to_module.find(id);
                if (it == to_module.end()) { ok = false; break; }
                out.add_term(it->second, c);
            }
            if (!ok)
                throw SemanticError("operations do not respect object tags");
            nk.set_entry(std::move(t), std::move(out));
        }
    }
    return M;
}

namespace {

// Reduced-degree sign of a suffix of a mixed tuple.
int suffix_sign(const std::vector<long long>& degrees, size_t from) {
    long long e = 0;
    for (size_t q = from; q < degrees.size(); ++q) e += degrees[q] - 1;
    return parity_sign(e);
}

}  // namespace

RelationReport check_module_relations(const AInfModule& M, size_t max_arity) {
    RelationReport report;
    const CurvedAInfAlgebra& A = *M.algebra;
    if (M.side == AInfModule::Side::Right) {
        // Delegate: a right module is a bimodule with a trivial left side.
        static const CurvedAInfAlgebra trivial{};
        AInfBimodule P;
        P.left_algebra = &trivial;
        P.right_algebra = &A;
        P.basis = M.basis;
        for (const auto& [k, n] : M.ops) P.ops.emplace(std::make_pair(0u, k), n);
        return check_bimodule_relations(P, max_arity);
    }

    for (size_t d = 0; d <= max_arity; ++d) {
        // written tuple (a_d, ..., a_1, y)
        std::vector<GenId> tuple(d + 1);
        std::vector<long long> degrees(d + 1);
        std::function<void(size_t)> walk = [&](size_t slot) {
            if (slot < d) {
                for (GenId g : A.basis.ids()) {
                    tuple[slot] = g;
                    degrees[slot] = A.basis.degree(g);
                    walk(slot + 1);
                }
                return;
            }
            for (GenId y : M.basis.ids()) {
                tuple[d] = y;
                degrees[d] = M.basis.degree(y);
                Element residual;
                // suffix module blocks: n^{d-j}( a_d..a_{j+1}, n^j(a_j..a_1, y) )
                for (size_t j = 0; j <= d; ++j) {
                    const MultilinearOp* inner = M.op(j);
                    const MultilinearOp* outer = M.op(d - j);
                    if (!inner || !outer) continue;
                    std::vector<GenId> in(tuple.begin() + (d - j), tuple.end());
                    Element mid = inner->entry(in);
                    if (mid.is_zero()) continue;
                    std::vector<Element> args;
                    for (size_t q = 0; q < d - j; ++q)
                        args.push_back(Element::generator(tuple[q]));
                    args.push_back(mid);
                    residual += outer->evaluate(args);
                }
                // pure algebra blocks (including m^0 insertions):
                // outer n^{d-m+1} with m^m(block) at gap position i
                for (size_t m = 0; m <= d; ++m) {
                    const MultilinearOp* inner = A.op(m);
                    const MultilinearOp* outer = M.op(d - m + 1);
                    if (!inner || !outer) continue;
                    for (size_t i = 0; i + m <= d; ++i) {
                        std::vector<GenId> in(tuple.begin() + i,
                                              tuple.begin() + i + m);
                        Element mid = inner->entry(in);
                        if (mid.is_zero()) continue;
                        int sign = suffix_sign(degrees, i + m);
                        std::vector<Element> args;
                        for (size_t q = 0; q < i; ++q)
                            args.push_back(Element::generator(tuple[q]));
                        args.push_back(mid);
                        for (size_t q = i + m; q <= d; ++q)
                            args.push_back(Element::generator(tuple[q]));
                        residual += Int(sign) * outer->evaluate(args);
                    }
                }
                if (!residual.is_zero())
                    report.findings.push_back({d, tuple, residual});
            }
        };
        walk(0);
    }
    return report;
}

RelationReport check_bimodule_relations(const AInfBimodule& P,
                                        size_t max_arity) {
    RelationReport report;
    const CurvedAInfAlgebra& L = *P.left_algebra;
    const CurvedAInfAlgebra& R = *P.right_algebra;

    for (size_t k = 0; k <= max_arity; ++k) {
        for (size_t l = 0; k + l <= max_arity; ++l) {
            // written tuple (c_k, ..., c_1, p, a_1, ..., a_l)
            const size_t len = k + l + 1;
            std::vector<GenId> tuple(len);
            std::vector<long long> degrees(len);
            std::function<void(size_t)> walk = [&](size_t slot) {
                if (slot < len) {
                    const Basis* b = slot < k ? &L.basis
                                    : slot == k ? &P.basis
                                                : &R.basis;
                    for (GenId g : b->ids()) {
                        tuple[slot] = g;
                        degrees[slot] = b->degree(g);
                        walk(slot + 1);
                    }
                    return;
                }
                Element residual;
                // middle blocks: inner n^{j,i} on (c_j..c_1, p, a_1..a_i)
                for (size_t j = 0; j <= k; ++j)
                    for (size_t i = 0; i <= l; ++i) {
                        const MultilinearOp* inner = P.op(j, i);
                        const MultilinearOp* outer = P.op(k - j, l - i);
                        if (!inner || !outer) continue;
                        std::vector<GenId> in(tuple.begin() + (k - j),
                                              tuple.begin() + k + 1 + i);
                        Element mid = inner->entry(in);
                        if (mid.is_zero()) continue;
                        int sign = suffix_sign(degrees, k + 1 + i);
                        std::vector<Element> args;
                        for (size_t q = 0; q < k - j; ++q)
                            args.push_back(Element::generator(tuple[q]));
                        args.push_back(mid);
                        for (size_t q = k + 1 + i; q < len; ++q)
                            args.push_back(Element::generator(tuple[q]));
                        residual += Int(sign) * outer->evaluate(args);
                    }
                // pure left-algebra blocks
                for (size_t m = 0; m <= k; ++m) {
                    const MultilinearOp* inner = L.op(m);
                    const MultilinearOp* outer = P.op(k - m + 1, l);
                    if (!inner || !outer) continue;
                    for (size_t i = 0; i + m <= k; ++i) {
                        std::vector<GenId> in(tuple.begin() + i,
                                              tuple.begin() + i + m);
                        Element mid = inner->entry(in);
                        if (mid.is_zero()) continue;
                        int sign = suffix_sign(degrees, i + m);
                        std::vector<Element> args;
                        for (size_t q = 0; q < i; ++q)
                            args.push_back(Element::generator(tuple[q]));
                        args.push_back(mid);
                        for (size_t q = i + m; q < len; ++q)
                            args.push_back(Element::generator(tuple[q]));
                        residual += Int(sign) * outer->evaluate(args);
                    }
                }
                // pure right-algebra blocks
                for (size_t m = 0; m <= l; ++m) {
                    const MultilinearOp* inner = R.op(m);
                    const MultilinearOp* outer = P.op(k, l - m + 1);
                    if (!inner || !outer) continue;
                    for (size_t i = k + 1; i + m <= len; ++i) {
                        std::vector<GenId> in(tuple.begin() + i,
                                              tuple.begin() + i + m);
                        Element mid = inner->entry(in);
                        if (mid.is_zero()) continue;
                        int sign = suffix_sign(degrees, i + m);
                        std::vector<Element> args;
                        for (size_t q = 0; q < i; ++q)
                            args.push_back(Element::generator(tuple[q]));
                        args.push_back(mid);
                        for (size_t q = i + m; q < len; ++q)
                            args.push_back(Element::generator(tuple[q]));
                        residual += Int(sign) * outer->evaluate(args);
                    }
                }
                if (!residual.is_zero())
                    report.findings.push_back({k + l, tuple, residual});
            };
            walk(0);
        }
    }
    return report;
}

AInfModule deform_module(const AInfModule& M, const Element& b) {
    if (!b.is_zero()) {
        auto deg = b.homogeneous_degree(M.algebra->basis);
        if (!deg || *deg != 1)
            throw WrongDegree("module deformation element must have degree 1");
    }
    AInfModule out;
    out.name = M.name + ".deformed";
    out.side = M.side;
    out.algebra = M.algebra;
    out.basis = M.basis;
    out.k_max = M.k_max;
    const bool left = M.side == AInfModule::Side::Left;
    for (const auto& [n, op] : M.ops) {
        const size_t mod_slot = left ? n : 0;
        for (const auto& [tuple, value] : op.table()) {
            // insertions in the n algebra slots only; |b| = 1 keeps every
            // sign +1
            for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
                Int c = 1;
                std::vector<GenId> rest;
                size_t bit = 0;
                for (size_t q = 0; q <= n && c != 0; ++q) {
                    if (q == mod_slot) {
                        rest.push_back(tuple[q]);
                        continue;
                    }
                    if (mask & (1ul << bit++))
                        c *= b.coeff(tuple[q]);
                    else
                        rest.push_back(tuple[q]);
                }
                if (c == 0) continue;
                out.ensure_op(rest.size() - 1).add_entry(rest, c * value);
            }
        }
    }
    if (M.op(0)) out.ensure_op(0);
    return out;
}

AInfBimodule deform_bimodule(const AInfBimodule& P, const Element& b0,
                             const Element& b1) {
    if (!b0.is_zero()) {
        auto d0 = b0.homogeneous_degree(P.left_algebra->basis);
        if (!d0 || *d0 != 1) throw WrongDegree("b0 must have degree 1");
    }
    if (!b1.is_zero()) {
        auto d1 = b1.homogeneous_degree(P.right_algebra->basis);
        if (!d1 || *d1 != 1) throw WrongDegree("b1 must have degree 1");
    }
    AInfBimodule out;
    out.name = P.name + ".deformed";
    out.left_algebra = P.left_algebra;
    out.right_algebra = P.right_algebra;
    out.basis = P.basis;
    out.k_max = P.k_max;
    for (const auto& [kl, op] : P.ops) {
        auto [k, l] = kl;
        for (const auto& [tuple, value] : op.table()) {
            for (unsigned long mask = 0; mask < (1ul << (k + l)); ++mask) {
                Int c = 1;
                std::vector<GenId> rest;
                size_t left_kept = 0;
                for (size_t q = 0; q < k && c != 0; ++q) {
                    if (mask & (1ul << q))
                        c *= b0.coeff(tuple[q]);
                    else {
                        rest.push_back(tuple[q]);
                        ++left_kept;
                    }
                }
                if (c == 0) continue;
                rest.push_back(tuple[k]);
                for (size_t q = 0; q < l && c != 0; ++q) {
                    if (mask & (1ul << (k + q)))
                        c *= b1.coeff(tuple[k + 1 + q]);
                    else
                        rest.push_back(tuple[k + 1 + q]);
                }
                if (c == 0) continue;
                out.ensure_op(left_kept, rest.size() - 1 - left_kept)
                    .add_entry(rest, c * value);
            }
        }
    }
    if (P.op(0, 0)) out.ensure_op(0, 0);
    return out;
}

AInfModule bimodule_functor_object(const AInfBimodule& P,
                                   const std::string& X) {
    AInfModule M;
    M.name = "F_" + P.name + "(" + X + ")";
    M.side = AInfModule::Side::Left;
    M.algebra = P.left_algebra;
    M.k_max = P.k_max;
    std::map<GenId, GenId> to_module;
    for (GenId g : P.basis.ids())
        if (P.basis[g].src == X || P.basis[g].src == "*")
            to_module[g] = M.basis.add(P.basis[g]);
    for (const auto& [kl, op] : P.ops) {
        auto [k, l] = kl;
        if (l != 0) continue;
        MultilinearOp& nk = M.ensure_op(k);
        for (const auto& [tuple, value] : op.table()) {
            auto pit = to_module.find(tuple[k]);
            if (pit == to_module.end()) continue;
            std::vector<GenId> t = tuple;
            t[k] = pit->second;
            Element out;
            for (const auto& [id, c] : value.terms()) {
                auto oit = to_module.find(id);
                if (oit == to_module.end())
                    throw SemanticError("bimodule does not respect object tags");
                out.add_term(oit->second, c);
            }
            nk.set_entry(std::move(t), std::move(out));
        }
    }
    return M;
}

PreModuleHom bimodule_functor_morphism(const AInfBimodule& P,
                                       const AInfModule& source_module,
                                       const AInfModule& target_module,
                                       const std::vector<GenId>& right_tuple) {
    const size_t l = right_tuple.size();
    if (l == 0) throw ArityMismatch("functor morphism needs at least one input");
    PreModuleHom T;
    T.source = &source_module;
    T.target = &target_module;
    long long deg = 0;
    for (GenId a : right_tuple) deg += P.right_algebra->basis.degree(a);
    T.degree = deg + 1 - static_cast<long long>(l);
    for (const auto& [kl, op] : P.ops) {
        auto [k, ll] = kl;
        if (ll != l) continue;
        MultilinearOp& td = T.ensure_component(k + 1);
        for (const auto& [tuple, value] : op.table()) {
            bool match = true;
            for (size_t q = 0; q < l; ++q)
                if (tuple[k + 1 + q] != right_tuple[q]) { match = false; break; }
            if (!match) continue;
            std::vector<GenId> t(tuple.begin(), tuple.begin() + k + 1);
            td.add_entry(t, value);
        }
    }
    return T;
}

}  // namespace ainfty
