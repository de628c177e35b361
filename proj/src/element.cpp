#include "ainfty/element.hpp"

#include <sstream>

namespace ainfty {

Element Element::generator(GenId id, Int coeff) {
    Element e;
    e.add_term(id, coeff);
    return e;
}

Int Element::coeff(GenId id) const {
    auto it = terms_.find(id);
    return it == terms_.end() ? Int(0) : it->second;
}

void Element::add_term(GenId id, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(id, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& other) {
    for (const auto& [id, c] : other.terms_) add_term(id, c);
    return *this;
}

Element& Element::operator-=(const Element& other) {
    for (const auto& [id, c] : other.terms_) add_term(id, -c);
    return *this;
}

Element& Element::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [id, v] : terms_) v *= c;
    return *this;
}

std::optional<long long> Element::homogeneous_degree(const Basis& basis) const {
    std::optional<long long> deg;
    for (const auto& [id, c] : terms_) {
        long long d = basis.degree(id);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

std::optional<Rat> Element::filtration_bound(const Basis& basis) const {
    std::optional<Rat> bound;
    for (const auto& [id, c] : terms_) {
        const Rat& f = basis.filtration(id);
        if (!bound || f < *bound) bound = f;
    }
    return bound;
}

std::string Element::to_string(const Basis& basis) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, c] : terms_) {
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << a.get_str() << "*" << basis[id].name;
    }
    return os.str();
}

}  // namespace ainfty
