#include "ainfty/bar.hpp"

#include <functional>
#include <sstream>

namespace ainfty {

namespace {

// per-degree generator lists and differential matrices of (basis, d)
struct GradedPieces {
    std::map<long long, std::vector<GenId>> gens;
    std::map<long long, IntMat> mats;  // deg k -> matrix into deg k+1
};

GradedPieces graded_pieces(const Basis& basis, const MultilinearOp* d) {
    GradedPieces g;
    for (GenId id : basis.ids()) g.gens[basis.degree(id)].push_back(id);
    for (const auto& [k, lo] : g.gens) {
        auto hi = g.gens.find(k + 1);
        IntMat m(hi == g.gens.end() ? 0 : hi->second.size(), lo.size());
        if (d && hi != g.gens.end()) {
            for (size_t j = 0; j < lo.size(); ++j) {
                Element v = d->entry({lo[j]});
                for (size_t i = 0; i < hi->second.size(); ++i)
                    m.at(i, j) = v.coeff(hi->second[i]);
            }
        }
        g.mats[k] = m;
    }
    return g;
}

}  // namespace

CohomologyData::CohomologyData(const Basis& basis, const MultilinearOp* d)
    : basis_(&basis) {
    GradedPieces g = graded_pieces(basis, d);
    for (const auto& [k, gens] : g.gens) {
        Piece p;
        p.gens = gens;
        p.cycles = kernel_basis(g.mats.at(k));
        // image of the incoming differential, in cycle coordinates
        IntMat incoming(gens.size(), 0);
        auto lo = g.gens.find(k - 1);
        if (lo != g.gens.end()) incoming = g.mats.at(k - 1);
        IntMat r(p.cycles.cols(), incoming.cols());
        for (size_t j = 0; j < incoming.cols(); ++j) {
            std::vector<Int> col(gens.size());
            for (size_t i = 0; i < gens.size(); ++i) col[i] = incoming.at(i, j);
            auto sol = solve_exact(p.cycles, col);
            if (!sol)
                throw NotAComplex("image does not consist of cycles");
            for (size_t i = 0; i < p.cycles.cols(); ++i) r.at(i, j) = (*sol)[i];
        }
        SnfResult snf = smith_normal_form(r);
        p.u_r = snf.u;
        p.image_rank = 0;
        for (size_t t = 0; t < std::min(r.rows(), r.cols()); ++t) {
            const Int& x = snf.d.at(t, t);
            if (x == 0) break;
            if (x != 1)
                throw SemanticError(
                    "bar page needs free cohomology; torsion found in degree " +
                    std::to_string(k));
            ++p.image_rank;
        }
        IntMat u_inv = unimodular_inverse(p.u_r);
        for (size_t i = p.image_rank; i < p.cycles.cols(); ++i) {
            // representative: cycles * (u_r^{-1} e_i)
            Element rep;
            for (size_t row = 0; row < gens.size(); ++row) {
                Int c = 0;
                for (size_t t = 0; t < p.cycles.cols(); ++t)
                    c += p.cycles.at(row, t) * u_inv.at(t, i);
                rep.add_term(gens[row], c);
            }
            p.reps.push_back(rep);
        }
        pieces_.emplace(k, std::move(p));
    }
}

size_t CohomologyData::rank(long long deg) const {
    auto it = pieces_.find(deg);
    return it == pieces_.end() ? 0 : it->second.reps.size();
}

const Element& CohomologyData::rep(long long deg, size_t i) const {
    return pieces_.at(deg).reps.at(i);
}

std::vector<Int> CohomologyData::project(long long deg,
                                         const Element& cycle) const {
    auto it = pieces_.find(deg);
    if (it == pieces_.end()) {
        if (!cycle.is_zero()) throw DegreeMismatch("projection degree");
        return {};
    }
    const Piece& p = it->second;
    std::vector<Int> col(p.gens.size(), 0);
    for (size_t i = 0; i < p.gens.size(); ++i) col[i] = cycle.coeff(p.gens[i]);
    auto z = solve_exact(p.cycles, col);
    if (!z) throw SemanticError("projecting a non-cycle");
    std::vector<Int> out(p.reps.size(), 0);
    for (size_t i = p.image_rank; i < p.cycles.cols(); ++i) {
        Int c = 0;
        for (size_t t = 0; t < p.cycles.cols(); ++t)
            c += p.u_r.at(i, t) * (*z)[t];
        out[i - p.image_rank] = c;
    }
    return out;
}

std::vector<long long> CohomologyData::degrees() const {
    std::vector<long long> out;
    for (const auto& [k, p] : pieces_)
        if (!p.reps.empty()) out.push_back(k);
    return out;
}

BarPage::BarPage(const CurvedAInfAlgebra& A, const AInfModule& yoneda,
                 const AInfModule& M)
    : a_(&A), n_(&yoneda), m_(&M) {
    if (!A.unit) throw NotUnital("the bar page needs a strict unit");
    if (!A.curvature().is_zero())
        throw SemanticError("the bar page needs a flat algebra");
    MultilinearOp m1(1, 1);
    if (const MultilinearOp* op = A.op(1)) m1 = *op;
    ha_ = CohomologyData(A.basis, &m1);
    hn_ = CohomologyData(yoneda.basis, yoneda.op(0));
    hm_ = CohomologyData(M.basis, M.op(0));
}

std::vector<BarPage::Column::Elem> BarPage::enumerate(size_t r,
                                                      long long s) const {
    std::vector<Column::Elem> out;
    if (r == 0) {
        for (size_t i = 0; i < hm_.rank(s); ++i)
            out.push_back({{}, {s, i}});
        return out;
    }
    std::vector<long long> adegs = ha_.degrees();
    std::vector<long long> ndegs = hn_.degrees();
    std::vector<HRef> tuple(r);
    std::function<void(size_t, long long)> walk = [&](size_t slot,
                                                      long long deg_sum) {
        if (slot + 1 < r) {
            for (long long d : adegs)
                for (size_t i = 0; i < ha_.rank(d); ++i) {
                    tuple[slot] = {d, i};
                    walk(slot + 1, deg_sum + d);
                }
            return;
        }
        for (long long d : ndegs)
            for (size_t i = 0; i < hn_.rank(d); ++i) {
                tuple[r - 1] = {d, i};
                long long out_deg = deg_sum + d + s;
                for (size_t j = 0; j < hm_.rank(out_deg); ++j)
                    out.push_back({tuple, {out_deg, j}});
            }
    };
    walk(0, 0);
    return out;
}

std::vector<Int> BarPage::hm2_coords(const HRef& a, const HRef& b) const {
    const MultilinearOp* m2 = a_->op(2);
    Element v;
    if (m2) {
        std::vector<Element> args = {ha_.rep(a.deg, a.idx),
                                     ha_.rep(b.deg, b.idx)};
        v = m2->evaluate(args);
    }
    return ha_.project(a.deg + b.deg, v);
}

std::vector<Int> BarPage::habs_coords(const HRef& a, const HRef& y) const {
    const MultilinearOp* n1 = n_->op(1);
    Element v;
    if (n1) {
        std::vector<Element> args = {ha_.rep(a.deg, a.idx),
                                     hn_.rep(y.deg, y.idx)};
        v = n1->evaluate(args);
    }
    return hn_.project(a.deg + y.deg, v);
}

std::vector<Int> BarPage::hact_coords(const HRef& a, const HRef& m) const {
    const MultilinearOp* n1 = m_->op(1);
    Element v;
    if (n1) {
        std::vector<Element> args = {ha_.rep(a.deg, a.idx),
                                     hm_.rep(m.deg, m.idx)};
        v = n1->evaluate(args);
    }
    return hm_.project(a.deg + m.deg, v);
}

std::vector<Int> BarPage::yoneda_to_algebra(const HRef& y) const {
    // the Yoneda module shares its underlying space with (part of) the
    // algebra; convert a representative by generator names
    const Element& rep = hn_.rep(y.deg, y.idx);
    Element image;
    for (const auto& [id, c] : rep.terms())
        image.add_term(a_->basis.id_of(n_->basis[id].name), c);
    return ha_.project(y.deg, image);
}

std::vector<Int> BarPage::unit_class() const {
    Element e = Element::generator(
        n_->basis.id_of(a_->basis[*a_->unit].name));
    return hn_.project(0, e);
}

BarPage::Column BarPage::column(size_t r, long long s) const {
    Column col;
    col.r = r;
    col.s = s;
    col.basis = enumerate(r, s);
    for (const auto& el : col.basis) {
        std::ostringstream lab;
        if (r == 0) {
            lab << "[" << m_->basis[0].name << "-class " << el.out.deg << "."
                << el.out.idx << "]";
        } else {
            lab << "t(";
            for (size_t q = 0; q < el.tuple.size(); ++q) {
                if (q) lab << ",";
                lab << (q + 1 < el.tuple.size() ? "a" : "y") << el.tuple[q].deg
                    << "." << el.tuple[q].idx;
            }
            lab << ")->m" << el.out.deg << "." << el.out.idx;
        }
        col.labels.push_back(lab.str());
    }

    std::vector<Column::Elem> rows = enumerate(r + 1, s);
    std::map<std::pair<std::vector<HRef>, HRef>, size_t> row_index;
    for (size_t i = 0; i < rows.size(); ++i)
        row_index.emplace(std::make_pair(rows[i].tuple, rows[i].out), i);
    IntMat d(rows.size(), col.basis.size());
    const int sigma = parity_sign(s + static_cast<long long>(r) - 1);

    for (size_t j = 0; j < col.basis.size(); ++j) {
        const auto& el = col.basis[j];
        if (r == 0) {
            // d0(c)(y) = n^1(y_as_algebra; c)
            for (long long yd : hn_.degrees())
                for (size_t yi = 0; yi < hn_.rank(yd); ++yi) {
                    HRef y{yd, yi};
                    std::vector<Int> ya = yoneda_to_algebra(y);
                    for (size_t ai = 0; ai < ya.size(); ++ai) {
                        if (ya[ai] == 0) continue;
                        std::vector<Int> act = hact_coords({yd, ai}, el.out);
                        for (size_t oi = 0; oi < act.size(); ++oi) {
                            if (act[oi] == 0) continue;
                            auto it = row_index.find(
                                {{y}, HRef{yd + el.out.deg, oi}});
                            if (it != row_index.end())
                                d.at(it->second, j) += ya[ai] * act[oi];
                        }
                    }
                }
            continue;
        }
        // action face: t |-> n^1(a_r; t(...)), row tuple = (a_r, tuple)
        for (long long ad : ha_.degrees())
            for (size_t ai = 0; ai < ha_.rank(ad); ++ai) {
                HRef a{ad, ai};
                std::vector<Int> act = hact_coords(a, el.out);
                for (size_t oi = 0; oi < act.size(); ++oi) {
                    if (act[oi] == 0) continue;
                    std::vector<HRef> tuple;
                    tuple.push_back(a);
                    tuple.insert(tuple.end(), el.tuple.begin(),
                                 el.tuple.end());
                    auto it = row_index.find(
                        {tuple, HRef{ad + el.out.deg, oi}});
                    if (it != row_index.end()) d.at(it->second, j) += act[oi];
                }
            }
        // merge faces: expand algebra slot q of the column tuple into a
        // product m^2(x, w); the sign is the reduced-degree suffix right of
        // the pair, the whole bracket carrying -(-1)^sigma.
        for (size_t q = 0; q + 1 < el.tuple.size(); ++q) {
            const HRef merged = el.tuple[q];
            long long suffix = 0;
            for (size_t p = q + 1; p < el.tuple.size(); ++p)
                suffix += el.tuple[p].deg - 1;
            const int sign = -sigma * parity_sign(suffix);
            for (long long xd : ha_.degrees())
                for (size_t xi = 0; xi < ha_.rank(xd); ++xi) {
                    long long wd = merged.deg - xd;
                    for (size_t wi = 0; wi < ha_.rank(wd); ++wi) {
                        std::vector<Int> prod =
                            hm2_coords({xd, xi}, {wd, wi});
                        const Int c = merged.idx < prod.size()
                                          ? prod[merged.idx]
                                          : Int(0);
                        if (c == 0) continue;
                        std::vector<HRef> tuple;
                        tuple.reserve(el.tuple.size() + 1);
                        tuple.insert(tuple.end(), el.tuple.begin(),
                                     el.tuple.begin() + q);
                        tuple.push_back({xd, xi});
                        tuple.push_back({wd, wi});
                        tuple.insert(tuple.end(), el.tuple.begin() + q + 1,
                                     el.tuple.end());
                        auto it = row_index.find({tuple, el.out});
                        if (it != row_index.end())
                            d.at(it->second, j) += Int(sign) * c;
                    }
                }
        }
        // absorb face: expand the Yoneda slot into m^2(x, y)
        {
            const HRef merged = el.tuple.back();
            for (long long xd : ha_.degrees())
                for (size_t xi = 0; xi < ha_.rank(xd); ++xi) {
                    long long yd = merged.deg - xd;
                    for (size_t yi = 0; yi < hn_.rank(yd); ++yi) {
                        std::vector<Int> prod =
                            habs_coords({xd, xi}, {yd, yi});
                        const Int c = merged.idx < prod.size()
                                          ? prod[merged.idx]
                                          : Int(0);
                        if (c == 0) continue;
                        std::vector<HRef> tuple;
                        tuple.reserve(el.tuple.size() + 1);
                        tuple.insert(tuple.end(), el.tuple.begin(),
                                     el.tuple.end() - 1);
                        tuple.push_back({xd, xi});
                        tuple.push_back({yd, yi});
                        auto it = row_index.find({tuple, el.out});
                        if (it != row_index.end())
                            d.at(it->second, j) += Int(-sigma) * c;
                    }
                }
        }
    }
    col.d_out = d;
    return col;
}

IntMat BarPage::kappa(size_t r, long long s) const {
    std::vector<Column::Elem> cols = enumerate(r + 1, s);
    std::vector<Column::Elem> rows = enumerate(r, s);
    std::map<std::pair<std::vector<HRef>, HRef>, size_t> row_index;
    for (size_t i = 0; i < rows.size(); ++i)
        row_index.emplace(std::make_pair(rows[i].tuple, rows[i].out), i);
    IntMat k(rows.size(), cols.size());
    const int sign = parity_sign(s + static_cast<long long>(r));
    std::vector<Int> e = unit_class();
    for (size_t j = 0; j < cols.size(); ++j) {
        const auto& el = cols[j];
        // u-tuple (c_r, ..., c_1, y_u): kappa pairs y_u against the unit
        // class and moves c_1 into the module slot of the shorter tuple.
        const HRef yu = el.tuple.back();
        if (yu.deg != 0) continue;
        const Int beta = yu.idx < e.size() ? e[yu.idx] : Int(0);
        if (beta == 0) continue;
        if (r == 0) {
            // target is E1^{0,s} = H^s(M)
            if (el.out.deg != s) continue;
            auto it = row_index.find({{}, el.out});
            if (it != row_index.end()) k.at(it->second, j) += Int(sign) * beta;
            continue;
        }
        const HRef c1 = el.tuple[el.tuple.size() - 2];
        // c1 is an algebra class; the row module slot y satisfies
        // yoneda_to_algebra(y) having a c1 component
        for (size_t yi = 0; yi < hn_.rank(c1.deg); ++yi) {
            HRef y{c1.deg, yi};
            std::vector<Int> ya = yoneda_to_algebra(y);
            const Int alpha = c1.idx < ya.size() ? ya[c1.idx] : Int(0);
            if (alpha == 0) continue;
            std::vector<HRef> tuple(el.tuple.begin(), el.tuple.end() - 2);
            tuple.push_back(y);
            auto it = row_index.find({tuple, el.out});
            if (it != row_index.end())
                k.at(it->second, j) += Int(sign) * alpha * beta;
        }
    }
    return k;
}

}  // namespace ainfty
