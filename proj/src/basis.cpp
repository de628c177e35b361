#include "ainfty/basis.hpp"

#include <algorithm>
#include <set>

namespace ainfty {

GenId Basis::add(Generator g) {
    if (index_.count(g.name))
        throw SemanticError("duplicate generator name '" + g.name + "'");
    GenId id = static_cast<GenId>(gens_.size());
    index_.emplace(g.name, id);
    gens_.push_back(std::move(g));
    return id;
}

GenId Basis::add(const std::string& name, long long degree, Rat filtration) {
    Generator g;
    g.name = name;
    g.degree = degree;
    g.filtration = std::move(filtration);
    return add(std::move(g));
}

GenId Basis::id_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw UnknownGenerator("no generator named '" + name + "'");
    return it->second;
}

std::vector<Rat> Basis::levels() const {
    std::set<Rat> s;
    for (const auto& g : gens_) s.insert(g.filtration);
    return {s.begin(), s.end()};
}

std::vector<GenId> Basis::at_level(const Rat& level) const {
    std::vector<GenId> out;
    for (GenId i = 0; i < static_cast<GenId>(gens_.size()); ++i)
        if (gens_[i].filtration == level) out.push_back(i);
    return out;
}

std::vector<GenId> Basis::ids() const {
    std::vector<GenId> out(gens_.size());
    for (size_t i = 0; i < gens_.size(); ++i) out[i] = static_cast<GenId>(i);
    return out;
}

}  // namespace ainfty
