#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ainfty/numbers.hpp"
#include "ainfty/errors.hpp"

namespace ainfty {

// A planar rooted tree with {0,1} vertex colors, {0,1} exterior edge
// colors, rational interior edge lengths, and one exceptional case: a
// single doubly-infinite edge with no vertices.  Leaves are numbered left
// to right in planar order.
struct ColoredRootedTree {
    struct Child {
        bool leaf = true;
        int dcolor = 0;   // exterior color when leaf
        int node = -1;    // child vertex when !leaf
        Rat length = 0;   // interior edge length when !leaf
    };
    struct Vertex {
        int color = 1;
        std::vector<Child> children;
    };
    bool exceptional = false;
    int root_vertex = 0;
    int root_dcolor = 0;
    std::vector<Vertex> vertices;

    static ColoredRootedTree infinite_edge();
    static ColoredRootedTree corolla(int color, size_t leaves, int root_d = 0,
                                     int leaf_d = 0);

    size_t leaf_count() const;
    void validate() const;  // shape + the d=1 endpoint color constraint
    std::string encode() const;
};

// True iff the tree decomposes as a color-1 core containing the root with
// color-0 trees attached leafward by color-0 edges (plus the exceptional
// doubly-infinite edge).
bool is_admissible(const ColoredRootedTree& t);

// (T_0, ..., T_m) with, for each j != 0, the root of T_j connected at
// infinity to leaf p(j) of component l(j).
struct BrokenTree {
    struct Connection {
        size_t into;  // l(j)
        size_t leaf;  // p(j)
    };
    std::vector<ColoredRootedTree> components;
    // connections[j-1] describes component j, j = 1..m
    std::vector<Connection> connections;

    void validate() const;
};

// Glue the components indexed by the subset J (all by default) with the
// given edge lengths; a full gluing returns a single tree (a broken tree
// with one component).
BrokenTree glue(const BrokenTree& broken, const std::vector<Rat>& rho,
                const std::vector<size_t>& subset);
ColoredRootedTree glue_all(const BrokenTree& broken,
                           const std::vector<Rat>& rho);

// Break the interior edges (vertex, child slot); the two new exterior ends
// of each broken edge receive the given d-color.
BrokenTree break_edges(const ColoredRootedTree& t,
                       const std::vector<std::pair<int, size_t>>& edges,
                       int dcolor = 0);

// ---------------------------------------------------------------------
// Stratum combinatorics of the associahedra M_{k+1} and the multiplihedra
// N_{k+1} = M_{k+1} x R_+.

enum class Moduli { Associahedron, Multiplihedron };

struct StratumDescriptor {
    Moduli moduli;
    size_t leaves = 0;
    size_t codim = 0;
    std::string encoding;  // canonical form; also the identity of the stratum
    std::string w;         // "0", "finite", "inf" for N; "-" for M
    auto operator<=>(const StratumDescriptor&) const = default;
};

// All strata of the given codimension, duplicate free, sorted by encoding.
// Associahedron strata are stable planar rooted trees with codim interior
// edges; multiplihedron strata are painted trees: an optional painted tree
// above (arities >= 2), one weighted vertex per root-leaf path, plain trees
// below, with codim = #painted vertices + #plain interior vertices.
std::vector<StratumDescriptor> enumerate_strata(Moduli moduli, size_t leaves,
                                                size_t codim);

// The codim+1 strata in the closure of s.
std::vector<StratumDescriptor> boundary_map(const StratumDescriptor& s);

}  // namespace ainfty
