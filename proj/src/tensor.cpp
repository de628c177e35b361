#include "ainfty/tensor.hpp"

namespace ainfty {

namespace {

void require_dg(const CurvedAInfAlgebra& A) {
    if (!A.curvature().is_zero()) throw NotDG(A.name + " has curvature");
    for (const auto& [k, m] : A.ops)
        if (k >= 3 && !m.is_zero())
            throw NotDG(A.name + " has higher operations");
}

std::string pair_name(const Generator& a, const Generator& b) {
    return a.name + "\xE2\x8A\x97" + b.name;  // a⊗b
}

}  // namespace

CurvedAInfAlgebra tensor_dg(const CurvedAInfAlgebra& A,
                            const CurvedAInfAlgebra& B) {
    require_dg(A);
    require_dg(B);
    CurvedAInfAlgebra T;
    T.name = A.name + "(x)" + B.name;
    T.k_max = 2;

    std::map<std::pair<GenId, GenId>, GenId> pair_id;
    for (GenId a : A.basis.ids())
        for (GenId b : B.basis.ids()) {
            Generator g;
            g.name = pair_name(A.basis[a], B.basis[b]);
            g.degree = A.basis.degree(a) + B.basis.degree(b);
            g.filtration = A.basis.filtration(a) + B.basis.filtration(b);
            pair_id[{a, b}] = T.basis.add(g);
        }
    if (A.unit && B.unit) T.unit = pair_id.at({*A.unit, *B.unit});

    auto embed = [&](const Element& ea, const Element& eb) {
        Element out;
        for (const auto& [a, ca] : ea.terms())
            for (const auto& [b, cb] : eb.terms())
                out.add_term(pair_id.at({a, b}), ca * cb);
        return out;
    };

    const MultilinearOp* m1a = A.op(1);
    const MultilinearOp* m1b = B.op(1);
    MultilinearOp& m1 = T.ensure_op(1);
    for (GenId a : A.basis.ids())
        for (GenId b : B.basis.ids()) {
            Element v;
            if (m1a) v += embed(m1a->entry({a}), Element::generator(b));
            if (m1b) {
                Element part = embed(Element::generator(a), m1b->entry({b}));
                part *= Int(parity_sign(A.basis.degree(a)));
                v += part;
            }
            m1.set_entry({pair_id.at({a, b})}, v);
        }

    const MultilinearOp* m2a = A.op(2);
    const MultilinearOp* m2b = B.op(2);
    MultilinearOp& m2 = T.ensure_op(2);
    if (m2a && m2b) {
        for (const auto& [ta, va] : m2a->table())
            for (const auto& [tb, vb] : m2b->table()) {
                // (a2(x)b2, a1(x)b1) -> (-1)^{|b2||a1|} m2(a2,a1)(x)m2(b2,b1)
                int sign = parity_sign(B.basis.degree(tb[0]) *
                                       A.basis.degree(ta[1]));
                Element v = embed(va, vb);
                v *= Int(sign);
                m2.add_entry({pair_id.at({ta[0], tb[0]}),
                              pair_id.at({ta[1], tb[1]})},
                             v);
            }
    }
    return T;
}

bool tensor_swap_is_iso(const CurvedAInfAlgebra& A,
                        const CurvedAInfAlgebra& B) {
    CurvedAInfAlgebra AB = tensor_dg(A, B);
    CurvedAInfAlgebra BA = tensor_dg(B, A);
    // a(x)b -> (-1)^{|a||b|} b(x)a on generators
    std::map<GenId, std::pair<GenId, int>> swap;  // AB gen -> (BA gen, sign)
    {
        size_t i = 0;
        for (GenId a : A.basis.ids())
            for (GenId b : B.basis.ids()) {
                GenId ab = static_cast<GenId>(i++);
                GenId ba = BA.basis.id_of(pair_name(B.basis[b], A.basis[a]));
                int sign =
                    parity_sign(A.basis.degree(a) * B.basis.degree(b));
                swap[ab] = {ba, sign};
            }
    }
    auto apply = [&](const Element& e) {
        Element out;
        for (const auto& [id, c] : e.terms()) {
            auto [img, sign] = swap.at(id);
            out.add_term(img, Int(sign) * c);
        }
        return out;
    };
    // chain map and algebra map on the nose
    const MultilinearOp* d_ab = AB.op(1);
    const MultilinearOp* d_ba = BA.op(1);
    for (GenId g : AB.basis.ids()) {
        Element lhs = apply(d_ab ? d_ab->entry({g}) : Element{});
        auto [img, sign] = swap.at(g);
        Element rhs = d_ba ? d_ba->entry({img}) : Element{};
        rhs *= Int(sign);
        if (!(lhs == rhs)) return false;
    }
    const MultilinearOp* p_ab = AB.op(2);
    const MultilinearOp* p_ba = BA.op(2);
    for (GenId x : AB.basis.ids())
        for (GenId y : AB.basis.ids()) {
            Element lhs = apply(p_ab ? p_ab->entry({x, y}) : Element{});
            auto [ix, sx] = swap.at(x);
            auto [iy, sy] = swap.at(y);
            Element rhs = p_ba ? p_ba->entry({ix, iy}) : Element{};
            rhs *= Int(sx * sy);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

}  // namespace ainfty
