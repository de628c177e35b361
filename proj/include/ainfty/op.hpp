#pragma once

#include <span>
#include <vector>

#include "ainfty/element.hpp"

namespace ainfty {

enum class SignRule { ReducedDegree };

// (-1)^(sum of (|a_i| - 1)) over the given degrees.  This is the one sign
// rule of the engine: argument tuples are written (a_d, ..., a_1) and an
// operation inserted into such a tuple picks up the sign of the reduced
// degrees standing to its right.
int koszul_sign(std::span<const long long> degrees,
                SignRule rule = SignRule::ReducedDegree);

// A sparse table mapping k-tuples of generators to elements; tuples absent
// from the table denote the zero output.  Tuples are stored in written
// order: entry[0] is a_k (leftmost), entry[k-1] is a_1 (rightmost).
class MultilinearOp {
public:
    MultilinearOp() = default;
    MultilinearOp(size_t arity, long long intrinsic_degree)
        : arity_(arity), intrinsic_degree_(intrinsic_degree) {}

    size_t arity() const { return arity_; }
    long long intrinsic_degree() const { return intrinsic_degree_; }

    const std::map<std::vector<GenId>, Element>& table() const { return table_; }
    Element entry(const std::vector<GenId>& tuple) const;
    void set_entry(std::vector<GenId> tuple, Element value);
    void add_entry(const std::vector<GenId>& tuple, const Element& value);
    bool is_zero() const { return table_.empty(); }

    // Multilinear extension of the table; exact integer arithmetic.
    Element evaluate(std::span<const Element> args) const;

    MultilinearOp& operator+=(const MultilinearOp& other);
    MultilinearOp& operator*=(const Int& c);

private:
    size_t arity_ = 0;
    long long intrinsic_degree_ = 0;
    std::map<std::vector<GenId>, Element> table_;
};

// The operation (a...) -> +/- outer(..., inner(...), ...) where inner's
// output is fed into the outer slot `position` counted from the right
// (position 0 = the rightmost slot, matching the subscript of the sign
// exponent): the Koszul sign of the `position` arguments standing right of
// the inserted block is baked into the table.
//
// All slots are over the single basis passed in.
MultilinearOp compose_insert(const Basis& basis, const MultilinearOp& outer,
                             const MultilinearOp& inner, size_t position);

// Degree and filtration invariants for a table whose slots live in
// `slot_bases` (size = arity) and whose outputs live in `out`.
// Throws DegreeMismatch / FiltrationViolation / UnknownGenerator.
void validate_op(const MultilinearOp& op,
                 const std::vector<const Basis*>& slot_bases, const Basis& out);

}  // namespace ainfty
