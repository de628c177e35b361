#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ainfty/numbers.hpp"
#include "ainfty/errors.hpp"

namespace ainfty {

// Dense integer matrix, row major.  rows()==0 or cols()==0 encode the zero
// map to/from the zero module.
class IntMat {
public:
    IntMat() = default;
    IntMat(size_t rows, size_t cols) : rows_(rows), cols_(cols),
        data_(rows * cols, 0) {}
    static IntMat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Int& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    friend IntMat operator*(const IntMat& a, const IntMat& b);
    friend IntMat operator+(const IntMat& a, const IntMat& b);
    friend IntMat operator-(const IntMat& a, const IntMat& b);
    friend bool operator==(const IntMat& a, const IntMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

// Fraction-free determinant (Bareiss).
Int determinant(const IntMat& m);

struct SnfResult {
    IntMat u, d, v;  // u * m * v = d, u and v unimodular, d diagonal with
                     // a divisibility chain of nonnegative entries
};
SnfResult smith_normal_form(const IntMat& m);

// Invariant factors > 1 and the rank of a matrix, off its SNF.
struct SnfSummary {
    size_t rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1
};
SnfSummary snf_summary(const IntMat& m);

// Basis of the integer kernel of m (as columns of the result).
IntMat kernel_basis(const IntMat& m);

// Inverse of a unimodular matrix, exact over Z.
IntMat unimodular_inverse(const IntMat& u);

// One integer solution of A z = b, if any.
std::optional<std::vector<Int>> solve_exact(const IntMat& a,
                                            const std::vector<Int>& b);

// A finite cochain complex over Z: a free graded piece per degree (labelled
// for reporting) and a degree +1 differential; out-of-range differentials
// are zero by convention.
struct FiniteComplex {
    std::string name = "C";
    std::map<long long, std::vector<std::string>> pieces;
    // diff[k]: matrix of d: C^k -> C^{k+1}, rows = dim C^{k+1}, cols = dim C^k
    std::map<long long, IntMat> diff;

    size_t dim(long long k) const;
    IntMat differential(long long k) const;  // zero-filled when absent
    void validate() const;                   // shapes and d*d = 0
    long long min_degree() const;
    long long max_degree() const;
};

struct HomologySummary {
    struct Piece {
        long long betti = 0;
        std::vector<Int> torsion;
    };
    std::map<long long, Piece> by_degree;
    bool trivial() const;
};

HomologySummary cohomology(const FiniteComplex& c);

// A degree-0 chain map between complexes.
struct ChainMap {
    const FiniteComplex* src = nullptr;
    const FiniteComplex* dst = nullptr;
    std::map<long long, IntMat> mats;  // mats[k]: C_src^k -> C_dst^k

    IntMat component(long long k) const;
    void validate() const;  // shapes and commutation with differentials
};

// cone(f)^k = src^{k+1} (+) dst^k with differential [[-d_src, 0], [f, d_dst]].
FiniteComplex cone(const ChainMap& f);
bool is_quasi_iso(const ChainMap& f);

}  // namespace ainfty
