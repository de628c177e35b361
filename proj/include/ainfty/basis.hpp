#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ainfty/errors.hpp"
#include "ainfty/numbers.hpp"

namespace ainfty {

using GenId = int;

// A named basis element with a cohomological degree and a rational
// filtration (action) level.  src/dst carry the object tags when a
// structure encodes a category with several objects; the default "*"
// is the single-object case.
struct Generator {
    std::string name;
    long long degree = 0;
    Rat filtration = 0;
    std::string src = "*";
    std::string dst = "*";
};

// An ordered sequence of generators.  The order is part of the data: it
// fixes serialization, matrix layouts and the tie-breaking used by the
// bounding-cochain solver.
class Basis {
public:
    GenId add(Generator g);
    GenId add(const std::string& name, long long degree, Rat filtration = 0);

    size_t size() const { return gens_.size(); }
    const Generator& operator[](GenId id) const { return gens_.at(id); }
    const std::vector<Generator>& generators() const { return gens_; }

    bool has(const std::string& name) const { return index_.count(name) != 0; }
    GenId id_of(const std::string& name) const;

    long long degree(GenId id) const { return gens_.at(id).degree; }
    const Rat& filtration(GenId id) const { return gens_.at(id).filtration; }

    // The set of filtration values occurring, sorted increasing.
    std::vector<Rat> levels() const;
    // Ids at one filtration level, in basis order.
    std::vector<GenId> at_level(const Rat& level) const;
    std::vector<GenId> ids() const;

private:
    std::vector<Generator> gens_;
    std::map<std::string, GenId> index_;
};

}  // namespace ainfty
