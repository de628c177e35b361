#include "ainfty/homology.hpp"

#include <algorithm>

namespace ainfty {

IntMat IntMat::identity(size_t n) {
    IntMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMat::is_zero() const {
    for (const Int& v : data_)
        if (v != 0) return false;
    return true;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
    if (a.cols_ != b.rows_) throw ArityMismatch("matrix product shapes");
    IntMat out(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const Int& bkj = b.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

IntMat operator+(const IntMat& a, const IntMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw ArityMismatch("matrix sum shapes");
    IntMat out = a;
    for (size_t i = 0; i < a.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

IntMat operator-(const IntMat& a, const IntMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw ArityMismatch("matrix difference shapes");
    IntMat out = a;
    for (size_t i = 0; i < a.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

Int determinant(const IntMat& m) {
    if (m.rows() != m.cols()) throw ArityMismatch("determinant of non-square");
    const size_t n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), v.get_mpz_t(),
                             prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

namespace {

void swap_rows(IntMat& m, size_t a, size_t b) {
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(IntMat& m, size_t a, size_t b) {
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
void add_row(IntMat& m, size_t dst, size_t src, const Int& f) {
    for (size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += f * m.at(src, j);
}
void add_col(IntMat& m, size_t dst, size_t src, const Int& f) {
    for (size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += f * m.at(i, src);
}
void negate_row(IntMat& m, size_t r) {
    for (size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

SnfResult smith_normal_form(const IntMat& m) {
    const size_t rows = m.rows(), cols = m.cols();
    SnfResult res{IntMat::identity(rows), m, IntMat::identity(cols)};
    IntMat& d = res.d;
    IntMat& u = res.u;
    IntMat& v = res.v;
    const size_t nmin = std::min(rows, cols);

    for (size_t t = 0; t < nmin; ++t) {
        for (;;) {
            // Smallest-magnitude nonzero pivot in the lower-right block.
            size_t pr = t, pc = t;
            Int best = 0;
            for (size_t i = t; i < rows; ++i)
                for (size_t j = t; j < cols; ++j) {
                    const Int& x = d.at(i, j);
                    if (x == 0) continue;
                    Int a = abs(x);
                    if (best == 0 || a < best) {
                        best = a;
                        pr = i;
                        pc = j;
                    }
                }
            if (best == 0) goto done;  // block is zero, so are later ones
            if (pr != t) { swap_rows(d, t, pr); swap_rows(u, t, pr); }
            if (pc != t) { swap_cols(d, t, pc); swap_cols(v, t, pc); }

            bool clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                add_row(d, i, t, -q);
                add_row(u, i, t, -q);
                if (d.at(i, t) != 0) clean = false;
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                add_col(d, j, t, -q);
                add_col(v, j, t, -q);
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold in any entry the pivot does not divide.
            bool divides = true;
            for (size_t i = t + 1; i < rows && divides; ++i)
                for (size_t j = t + 1; j < cols; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        add_row(d, t, i, 1);
                        add_row(u, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
    }
done:
    for (size_t t = 0; t < nmin; ++t)
        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
    return res;
}

SnfSummary snf_summary(const IntMat& m) {
    SnfResult snf = smith_normal_form(m);
    SnfSummary s;
    for (size_t t = 0; t < std::min(m.rows(), m.cols()); ++t) {
        const Int& x = snf.d.at(t, t);
        if (x == 0) break;
        ++s.rank;
        if (x > 1) s.torsion.push_back(x);
    }
    return s;
}

IntMat kernel_basis(const IntMat& m) {
    if (m.cols() == 0) return IntMat(0, 0);
    if (m.rows() == 0) return IntMat::identity(m.cols());
    SnfResult snf = smith_normal_form(m);
    size_t rank = 0;
    for (size_t t = 0; t < std::min(m.rows(), m.cols()); ++t)
        if (snf.d.at(t, t) != 0) ++rank;
    // m * v has zero columns exactly beyond the rank.
    IntMat out(m.cols(), m.cols() - rank);
    for (size_t i = 0; i < m.cols(); ++i)
        for (size_t j = rank; j < m.cols(); ++j)
            out.at(i, j - rank) = snf.v.at(i, j);
    return out;
}

IntMat unimodular_inverse(const IntMat& u) {
    const size_t n = u.rows();
    if (u.cols() != n) throw ArityMismatch("inverse of non-square");
    SnfResult snf = smith_normal_form(u);
    for (size_t t = 0; t < n; ++t)
        if (snf.d.at(t, t) != 1)
            throw NotIsomorphism("matrix is not unimodular");
    // u = U^{-1} V^{-1} with U u V = I, so u^{-1} = V U.
    return snf.v * snf.u;
}

std::optional<std::vector<Int>> solve_exact(const IntMat& a,
                                            const std::vector<Int>& b) {
    if (b.size() != a.rows()) throw ArityMismatch("solve shapes");
    SnfResult snf = smith_normal_form(a);
    // a = U^{-1} D V^{-1}; solve D w = U b, z = V w.
    std::vector<Int> ub(a.rows(), 0);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.rows(); ++j)
            ub[i] += snf.u.at(i, j) * b[j];
    std::vector<Int> w(a.cols(), 0);
    const size_t nmin = std::min(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        const Int d = i < nmin ? snf.d.at(i, i) : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            w[i] = ub[i] / d;
        }
    }
    std::vector<Int> z(a.cols(), 0);
    for (size_t i = 0; i < a.cols(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) z[i] += snf.v.at(i, j) * w[j];
    return z;
}

size_t FiniteComplex::dim(long long k) const {
    auto it = pieces.find(k);
    return it == pieces.end() ? 0 : it->second.size();
}

IntMat FiniteComplex::differential(long long k) const {
    auto it = diff.find(k);
    if (it != diff.end()) return it->second;
    return IntMat(dim(k + 1), dim(k));
}

long long FiniteComplex::min_degree() const {
    return pieces.empty() ? 0 : pieces.begin()->first;
}
long long FiniteComplex::max_degree() const {
    return pieces.empty() ? 0 : pieces.rbegin()->first;
}

void FiniteComplex::validate() const {
    for (const auto& [k, d] : diff) {
        if (d.rows() != dim(k + 1) || d.cols() != dim(k))
            throw NotAComplex("differential at degree " + std::to_string(k) +
                              " has the wrong shape");
    }
    for (const auto& [k, d] : diff) {
        IntMat next = differential(k + 1);
        if (next.rows() == 0 || d.cols() == 0) continue;
        if (!(next * d).is_zero())
            throw NotAComplex("d*d != 0 at degree " + std::to_string(k));
    }
}

HomologySummary cohomology(const FiniteComplex& c) {
    c.validate();
    HomologySummary out;
    for (const auto& [k, labels] : c.pieces) {
        const size_t n = labels.size();
        if (n == 0) continue;
        SnfSummary out_d = snf_summary(c.differential(k));
        SnfSummary in_d = snf_summary(c.differential(k - 1));
        HomologySummary::Piece p;
        p.betti = static_cast<long long>(n) -
                  static_cast<long long>(out_d.rank) -
                  static_cast<long long>(in_d.rank);
        // Torsion of H^k comes from the invariant factors of d^{k-1}.
        p.torsion = in_d.torsion;
        if (p.betti != 0 || !p.torsion.empty()) out.by_degree[k] = p;
    }
    return out;
}

bool HomologySummary::trivial() const {
    for (const auto& [k, p] : by_degree)
        if (p.betti != 0 || !p.torsion.empty()) return false;
    return true;
}

IntMat ChainMap::component(long long k) const {
    auto it = mats.find(k);
    if (it != mats.end()) return it->second;
    return IntMat(dst->dim(k), src->dim(k));
}

void ChainMap::validate() const {
    if (!src || !dst) throw NotChainMap("unset endpoints");
    for (const auto& [k, f] : mats)
        if (f.rows() != dst->dim(k) || f.cols() != src->dim(k))
            throw NotChainMap("component shape at degree " + std::to_string(k));
    long long lo = std::min(src->min_degree(), dst->min_degree()) - 1;
    long long hi = std::max(src->max_degree(), dst->max_degree()) + 1;
    for (long long k = lo; k <= hi; ++k) {
        IntMat lhs = dst->differential(k) * component(k);
        IntMat rhs = component(k + 1) * src->differential(k);
        if (!(lhs == rhs))
            throw NotChainMap("does not commute with differentials at degree " +
                              std::to_string(k));
    }
}

FiniteComplex cone(const ChainMap& f) {
    f.validate();
    const FiniteComplex& x = *f.src;
    const FiniteComplex& z = *f.dst;
    FiniteComplex c;
    c.name = "cone(" + x.name + "->" + z.name + ")";
    long long lo = std::min(x.min_degree() - 1, z.min_degree());
    long long hi = std::max(x.max_degree() - 1, z.max_degree());
    for (long long k = lo; k <= hi; ++k) {
        std::vector<std::string> labels;
        for (size_t i = 0; i < x.dim(k + 1); ++i)
            labels.push_back("s." + x.pieces.at(k + 1)[i]);
        if (z.dim(k))
            for (size_t i = 0; i < z.dim(k); ++i)
                labels.push_back(z.pieces.at(k)[i]);
        if (!labels.empty()) c.pieces[k] = labels;
    }
    for (long long k = lo; k <= hi; ++k) {
        size_t rows = x.dim(k + 2) + z.dim(k + 1);
        size_t cols = x.dim(k + 1) + z.dim(k);
        if (rows == 0 || cols == 0) continue;
        IntMat d(rows, cols);
        IntMat dx = x.differential(k + 1);
        IntMat dz = z.differential(k);
        IntMat fk = f.component(k + 1);
        for (size_t i = 0; i < dx.rows(); ++i)
            for (size_t j = 0; j < dx.cols(); ++j) d.at(i, j) = -dx.at(i, j);
        for (size_t i = 0; i < fk.rows(); ++i)
            for (size_t j = 0; j < fk.cols(); ++j)
                d.at(x.dim(k + 2) + i, j) = fk.at(i, j);
        for (size_t i = 0; i < dz.rows(); ++i)
            for (size_t j = 0; j < dz.cols(); ++j)
                d.at(x.dim(k + 2) + i, x.dim(k + 1) + j) = dz.at(i, j);
        c.diff[k] = d;
    }
    return c;
}

bool is_quasi_iso(const ChainMap& f) { return cohomology(cone(f)).trivial(); }

}  // namespace ainfty
