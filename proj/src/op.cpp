#include "ainfty/op.hpp"

#include <functional>

namespace ainfty {

int koszul_sign(std::span<const long long> degrees, SignRule) {
    long long e = 0;
    for (long long d : degrees) e += d - 1;
    return parity_sign(e);
}

Element MultilinearOp::entry(const std::vector<GenId>& tuple) const {
    auto it = table_.find(tuple);
    return it == table_.end() ? Element{} : it->second;
}

void MultilinearOp::set_entry(std::vector<GenId> tuple, Element value) {
    if (tuple.size() != arity_)
        throw ArityMismatch("table tuple of length " +
                            std::to_string(tuple.size()) + " in arity-" +
                            std::to_string(arity_) + " operation");
    if (value.is_zero())
        table_.erase(tuple);
    else
        table_.insert_or_assign(std::move(tuple), std::move(value));
}

void MultilinearOp::add_entry(const std::vector<GenId>& tuple,
                              const Element& value) {
    if (tuple.size() != arity_)
        throw ArityMismatch("table tuple of length " +
                            std::to_string(tuple.size()) + " in arity-" +
                            std::to_string(arity_) + " operation");
    if (value.is_zero()) return;
    auto it = table_.find(tuple);
    if (it == table_.end()) {
        table_.emplace(tuple, value);
    } else {
        it->second += value;
        if (it->second.is_zero()) table_.erase(it);
    }
}

Element MultilinearOp::evaluate(std::span<const Element> args) const {
    if (args.size() != arity_)
        throw ArityMismatch("evaluate got " + std::to_string(args.size()) +
                            " arguments for arity " + std::to_string(arity_));
    Element acc;
    std::vector<GenId> tuple(arity_);
    // Expand multilinearly over the sparse arguments.
    std::vector<std::map<GenId, Int>::const_iterator> its(arity_);
    std::function<void(size_t, Int)> rec = [&](size_t slot, Int coeff) {
        if (slot == arity_) {
            auto it = table_.find(tuple);
            if (it != table_.end()) acc += coeff * it->second;
            return;
        }
        for (const auto& [id, c] : args[slot].terms()) {
            tuple[slot] = id;
            rec(slot + 1, coeff * c);
        }
    };
    rec(0, 1);
    return acc;
}

MultilinearOp& MultilinearOp::operator+=(const MultilinearOp& other) {
    if (other.arity_ != arity_ || other.intrinsic_degree_ != intrinsic_degree_)
        throw ArityMismatch("operation sum shape mismatch");
    for (const auto& [tuple, value] : other.table_) add_entry(tuple, value);
    return *this;
}

MultilinearOp& MultilinearOp::operator*=(const Int& c) {
    if (c == 0) {
        *this = MultilinearOp(arity_, intrinsic_degree_);
        return *this;
    }
    for (auto& [tuple, value] : table_) value *= c;
    return *this;
}

MultilinearOp compose_insert(const Basis& basis, const MultilinearOp& outer,
                             const MultilinearOp& inner, size_t position) {
    if (outer.arity() == 0 || position >= outer.arity())
        throw PositionOutOfRange("position " + std::to_string(position) +
                                 " in arity-" + std::to_string(outer.arity()) +
                                 " operation");
    const size_t slot = outer.arity() - 1 - position;  // written-order index
    MultilinearOp out(outer.arity() + inner.arity() - 1,
                      outer.intrinsic_degree() + inner.intrinsic_degree());
    for (const auto& [ituple, ivalue] : inner.table()) {
        for (const auto& [otuple, ovalue] : outer.table()) {
            const Int c = ivalue.coeff(otuple[slot]);
            if (c == 0) continue;
            std::vector<long long> suffix;
            suffix.reserve(position);
            for (size_t q = slot + 1; q < otuple.size(); ++q)
                suffix.push_back(basis.degree(otuple[q]));
            Int signed_c = c * koszul_sign(suffix);
            std::vector<GenId> tuple;
            tuple.reserve(out.arity());
            tuple.insert(tuple.end(), otuple.begin(), otuple.begin() + slot);
            tuple.insert(tuple.end(), ituple.begin(), ituple.end());
            tuple.insert(tuple.end(), otuple.begin() + slot + 1, otuple.end());
            out.add_entry(tuple, signed_c * ovalue);
        }
    }
    return out;
}

void validate_op(const MultilinearOp& op,
                 const std::vector<const Basis*>& slot_bases,
                 const Basis& out) {
    if (slot_bases.size() != op.arity())
        throw ArityMismatch("slot signature length");
    for (const auto& [tuple, value] : op.table()) {
        long long in_deg = 0;
        Rat in_filt = 0;
        for (size_t i = 0; i < tuple.size(); ++i) {
            const Basis& b = *slot_bases[i];
            if (tuple[i] < 0 || tuple[i] >= static_cast<GenId>(b.size()))
                throw UnknownGenerator("table tuple slot " + std::to_string(i));
            in_deg += b.degree(tuple[i]);
            in_filt += b.filtration(tuple[i]);
        }
        for (const auto& [id, c] : value.terms()) {
            if (id < 0 || id >= static_cast<GenId>(out.size()))
                throw UnknownGenerator("table output generator");
            if (out.degree(id) != in_deg + op.intrinsic_degree())
                throw DegreeMismatch("entry outputs " + out[id].name +
                                     " of degree " +
                                     std::to_string(out.degree(id)) +
                                     ", expected " +
                                     std::to_string(in_deg +
                                                    op.intrinsic_degree()));
            if (out.filtration(id) < in_filt)
                throw FiltrationViolation("entry outputs " + out[id].name +
                                          " below the input filtration sum");
        }
    }
}

}  // namespace ainfty
