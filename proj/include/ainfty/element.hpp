#pragma once

#include <map>
#include <optional>
#include <string>

#include "ainfty/basis.hpp"

namespace ainfty {

// A sparse integer linear combination of generators of one basis.
// No zero coefficient is ever stored.
class Element {
public:
    Element() = default;
    static Element generator(GenId id, Int coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<GenId, Int>& terms() const { return terms_; }
    Int coeff(GenId id) const;

    void add_term(GenId id, const Int& c);
    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const Int& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Int& c, Element a) { return a *= c; }
    friend bool operator==(const Element& a, const Element& b) {
        return a.terms_ == b.terms_;
    }

    // All generators share one degree; nullopt for zero or mixed.
    std::optional<long long> homogeneous_degree(const Basis& basis) const;
    // Minimal filtration level among the terms (nullopt for zero).
    std::optional<Rat> filtration_bound(const Basis& basis) const;

    // Canonical form: terms in basis order, signed decimal coefficients,
    // e.g. "3*x - 1*c"; the zero element prints "0".
    std::string to_string(const Basis& basis) const;

private:
    std::map<GenId, Int> terms_;
};

}  // namespace ainfty
