#include "ainfty/trees.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace ainfty {

ColoredRootedTree ColoredRootedTree::infinite_edge() {
    ColoredRootedTree t;
    t.exceptional = true;
    t.root_vertex = -1;
    return t;
}

ColoredRootedTree ColoredRootedTree::corolla(int color, size_t leaves,
                                             int root_d, int leaf_d) {
    ColoredRootedTree t;
    Vertex v;
    v.color = color;
    for (size_t i = 0; i < leaves; ++i) {
        Child c;
        c.leaf = true;
        c.dcolor = leaf_d;
        v.children.push_back(c);
    }
    t.vertices.push_back(v);
    t.root_vertex = 0;
    t.root_dcolor = root_d;
    return t;
}

size_t ColoredRootedTree::leaf_count() const {
    if (exceptional) return 1;
    size_t n = 0;
    std::function<void(int)> walk = [&](int v) {
        for (const Child& c : vertices[v].children) {
            if (c.leaf)
                ++n;
            else
                walk(c.node);
        }
    };
    walk(root_vertex);
    return n;
}

void ColoredRootedTree::validate() const {
    if (exceptional) {
        if (!vertices.empty())
            throw MalformedTree("the exceptional edge carries no vertices");
        return;
    }
    if (vertices.empty()) throw MalformedTree("tree without vertices");
    if (root_vertex < 0 || root_vertex >= static_cast<int>(vertices.size()))
        throw MalformedTree("root out of range");
    std::vector<int> seen(vertices.size(), 0);
    std::function<void(int)> walk = [&](int v) {
        if (v < 0 || v >= static_cast<int>(vertices.size()))
            throw MalformedTree("child out of range");
        if (seen[v]++) throw MalformedTree("vertex reached twice");
        for (const Child& c : vertices[v].children) {
            if (c.leaf) {
                if (c.dcolor == 1 && vertices[v].color != 1)
                    throw MalformedTree(
                        "a d=1 exterior edge must end at a color-1 vertex");
            } else {
                if (c.length < 0) throw MalformedTree("negative edge length");
                walk(c.node);
            }
        }
    };
    walk(root_vertex);
    for (int s : seen)
        if (!s) throw MalformedTree("disconnected vertex");
    if (root_dcolor == 1 && vertices[root_vertex].color != 1)
        throw MalformedTree("a d=1 root must end at a color-1 vertex");
}

std::string ColoredRootedTree::encode() const {
    if (exceptional) return "INF";
    std::function<std::string(int)> walk = [&](int v) -> std::string {
        std::ostringstream os;
        os << "(";
        bool first = true;
        for (const Child& c : vertices[v].children) {
            if (!first) os << ",";
            first = false;
            if (c.leaf)
                os << "L" << c.dcolor;
            else
                os << walk(c.node) << ":" << c.length.get_str();
        }
        os << ")c" << vertices[v].color;
        return os.str();
    };
    return "r" + std::to_string(root_dcolor) + walk(root_vertex);
}

bool is_admissible(const ColoredRootedTree& t) {
    t.validate();
    if (t.exceptional) return true;
    // color-1 vertices exist, span a connected subtree containing the root
    // side, and every mixed edge has its color-1 end rootward
    bool any1 = false;
    for (const auto& v : t.vertices) any1 |= v.color == 1;
    if (!any1) return false;
    if (t.vertices[t.root_vertex].color != 1) return false;
    bool ok = true;
    std::function<void(int)> walk = [&](int v) {
        for (const auto& c : t.vertices[v].children) {
            if (c.leaf) continue;
            // once color 0, never color 1 again leafward
            if (t.vertices[v].color == 0 && t.vertices[c.node].color == 1)
                ok = false;
            walk(c.node);
        }
    };
    walk(t.root_vertex);
    return ok;
}

namespace {

// d-color of the i-th leaf (planar order)
int leaf_dcolor(const ColoredRootedTree& t, size_t leaf) {
    if (t.exceptional) {
        if (leaf != 0) throw BadConnection("leaf out of range");
        return 0;
    }
    int found = -1;
    size_t n = 0;
    std::function<void(int)> walk = [&](int v) {
        for (const auto& c : t.vertices[v].children) {
            if (c.leaf) {
                if (n++ == leaf) found = c.dcolor;
            } else {
                walk(c.node);
            }
        }
    };
    walk(t.root_vertex);
    if (found < 0) throw BadConnection("leaf out of range");
    return found;
}

int root_dcolor_of(const ColoredRootedTree& t) {
    return t.exceptional ? 0 : t.root_dcolor;
}

}  // namespace

void BrokenTree::validate() const {
    if (components.empty()) throw BadConnection("empty broken tree");
    if (connections.size() + 1 != components.size())
        throw BadConnection("need one connection per non-root component");
    for (const auto& t : components) t.validate();
    std::set<std::pair<size_t, size_t>> used;
    for (size_t j = 1; j < components.size(); ++j) {
        const Connection& c = connections[j - 1];
        if (c.into >= components.size() || c.into == j)
            throw BadConnection("connection target out of range");
        if (c.leaf >= components[c.into].leaf_count())
            throw BadConnection("connection leaf out of range");
        if (!used.insert({c.into, c.leaf}).second)
            throw BadConnection("two roots share one leaf");
    }
    // acyclic and rooted: following into-links reaches component 0
    for (size_t j = 1; j < components.size(); ++j) {
        size_t cur = j;
        size_t steps = 0;
        while (cur != 0) {
            if (++steps > components.size())
                throw BadConnection("connection cycle");
            cur = connections[cur - 1].into;
        }
    }
    // compatible coloring
    for (size_t j = 1; j < components.size(); ++j) {
        const Connection& c = connections[j - 1];
        if (leaf_dcolor(components[c.into], c.leaf) !=
            root_dcolor_of(components[j]))
            throw ColorMismatch("connected ends carry different d-colors");
    }
}

namespace {

// merge component j of b into its target, with edge length rho
BrokenTree glue_one(const BrokenTree& b, size_t j, const Rat& rho) {
    BrokenTree::Connection conn = b.connections[j - 1];
    const ColoredRootedTree& host = b.components[conn.into];
    const ColoredRootedTree& guest = b.components[j];
    if (leaf_dcolor(host, conn.leaf) != root_dcolor_of(guest))
        throw ColorMismatch("glue ends carry different d-colors");

    ColoredRootedTree merged;
    size_t guest_leaves = guest.leaf_count();
    if (guest.exceptional) {
        // gluing the infinite edge changes nothing
        merged = host;
    } else if (host.exceptional) {
        // the host is the infinite edge: the guest replaces it entirely
        merged = guest;
    } else {
        merged = host;
        const int offset = static_cast<int>(merged.vertices.size());
        for (const auto& v : guest.vertices) {
            auto copy = v;
            for (auto& c : copy.children)
                if (!c.leaf) c.node += offset;
            merged.vertices.push_back(copy);
        }
        // replace the conn.leaf-th leaf slot by an interior edge
        size_t n = 0;
        bool done = false;
        std::function<void(int)> walk = [&](int v) {
            for (auto& c : merged.vertices[v].children) {
                if (done) return;
                if (c.leaf) {
                    if (n++ == conn.leaf) {
                        c.leaf = false;
                        c.node = guest.root_vertex + offset;
                        c.length = rho;
                        done = true;
                        return;
                    }
                } else {
                    walk(c.node);
                }
            }
        };
        walk(merged.root_vertex);
        if (!done) throw BadConnection("glue leaf not found");
    }

    BrokenTree out;
    std::vector<size_t> new_index(b.components.size());
    {
        size_t idx = 0;
        for (size_t i = 0; i < b.components.size(); ++i) {
            if (i == j) continue;
            new_index[i] = idx++;
            out.components.push_back(i == conn.into ? merged
                                                    : b.components[i]);
        }
        new_index[j] = new_index[conn.into];
    }
    for (size_t i = 1; i < b.components.size(); ++i) {
        if (i == j) continue;
        BrokenTree::Connection c = b.connections[i - 1];
        size_t leaf = c.leaf;
        if (c.into == j) {
            // leaves of the guest now sit at offset conn.leaf in the host
            c.into = conn.into;
            leaf = conn.leaf + c.leaf;
        } else if (c.into == conn.into && c.leaf > conn.leaf) {
            leaf = c.leaf + guest_leaves - 1;
        }
        c.into = new_index[c.into];
        c.leaf = leaf;
        out.connections.push_back(c);
    }
    return out;
}

}  // namespace

BrokenTree glue(const BrokenTree& broken, const std::vector<Rat>& rho,
                const std::vector<size_t>& subset) {
    broken.validate();
    if (rho.size() != broken.connections.size())
        throw BadConnection("one gluing length per connection");
    for (const Rat& r : rho)
        if (!(r > 0)) throw BadConnection("gluing lengths must be positive");
    std::vector<size_t> todo = subset;
    std::sort(todo.begin(), todo.end(), std::greater<size_t>());
    if (std::adjacent_find(todo.begin(), todo.end()) != todo.end())
        throw BadConnection("duplicate subset index");
    for (size_t j : todo)
        if (j == 0 || j >= broken.components.size())
            throw BadConnection("subset index out of range");
    // indices shift as components merge; gluing from the highest index down
    // keeps the remaining indices valid
    BrokenTree cur = broken;
    std::vector<Rat> lengths = rho;
    for (size_t j : todo) {
        cur = glue_one(cur, j, lengths[j - 1]);
        lengths.erase(lengths.begin() + (j - 1));
    }
    return cur;
}

ColoredRootedTree glue_all(const BrokenTree& broken,
                           const std::vector<Rat>& rho) {
    std::vector<size_t> all;
    for (size_t j = 1; j < broken.components.size(); ++j) all.push_back(j);
    BrokenTree out = glue(broken, rho, all);
    return out.components.at(0);
}

BrokenTree break_edges(const ColoredRootedTree& t,
                       const std::vector<std::pair<int, size_t>>& edges,
                       int dcolor) {
    t.validate();
    BrokenTree out;
    std::set<std::pair<int, size_t>> cut(edges.begin(), edges.end());
    for (const auto& [v, slot] : cut) {
        if (v < 0 || v >= static_cast<int>(t.vertices.size()) ||
            slot >= t.vertices[v].children.size() ||
            t.vertices[v].children[slot].leaf)
            throw BadConnection("not an interior edge");
        if (dcolor == 1) {
            int child = t.vertices[v].children[slot].node;
            if (t.vertices[v].color != 1 || t.vertices[child].color != 1)
                throw ColorMismatch(
                    "a d=1 break needs color-1 endpoints");
        }
    }
    // component ids assigned by a rootward walk; component 0 holds the root
    struct Piece {
        ColoredRootedTree tree;
        std::optional<BrokenTree::Connection> conn;
    };
    std::vector<Piece> pieces;
    // map: original vertex -> (piece, vertex index inside the piece)
    std::vector<std::pair<size_t, int>> where(t.vertices.size());

    // pieces and their vertex vectors grow during recursion; re-index on
    // every access instead of holding references
    std::function<void(int, size_t)> build = [&](int v, size_t piece) {
        int local = static_cast<int>(pieces[piece].tree.vertices.size());
        where[v] = {piece, local};
        pieces[piece].tree.vertices.push_back(t.vertices[v]);
        const size_t nkids = t.vertices[v].children.size();
        for (size_t s = 0; s < nkids; ++s) {
            if (t.vertices[v].children[s].leaf) continue;
            int orig_child = t.vertices[v].children[s].node;
            if (cut.count({v, s})) {
                auto& c = pieces[piece].tree.vertices[local].children[s];
                c.leaf = true;
                c.dcolor = dcolor;
                c.node = -1;
                Piece p;
                p.tree.root_dcolor = dcolor;
                p.tree.root_vertex = 0;
                pieces.push_back(p);
                build(orig_child, pieces.size() - 1);
            } else {
                pieces[piece].tree.vertices[local].children[s].node =
                    static_cast<int>(pieces[piece].tree.vertices.size());
                build(orig_child, piece);
            }
        }
    };
    {
        Piece root;
        root.tree.root_dcolor = t.root_dcolor;
        root.tree.root_vertex = 0;
        pieces.push_back(root);
        build(t.root_vertex, 0);
    }
    // connections: for each piece j != 0, locate its attachment leaf in the
    // final leaf numbering of its host piece
    for (auto& p : pieces) out.components.push_back(p.tree);
    for (size_t j = 1; j < pieces.size(); ++j) {
        // find the cut edge that created piece j
        BrokenTree::Connection conn{};
        bool found = false;
        for (const auto& [v, slot] : cut) {
            int child = t.vertices[v].children[slot].node;
            if (where[child] == std::make_pair(j, 0)) {
                conn.into = where[v].first;
                // leaf index: count leaves of the host piece left of (v,slot)
                size_t count = 0;
                const ColoredRootedTree& host = out.components[conn.into];
                bool stop = false;
                std::function<void(int, int)> walk = [&](int hv, int orig) {
                    const auto& vv = host.vertices[hv];
                    const auto& ov = t.vertices[orig];
                    for (size_t s = 0; s < vv.children.size(); ++s) {
                        if (stop) return;
                        if (orig == v && s == slot) {
                            stop = true;
                            return;
                        }
                        if (vv.children[s].leaf) {
                            ++count;
                            // descend the original tree where an uncut
                            // original child was folded into a leaf? no:
                            // cut children became leaves; skip into them
                            if (!ov.children[s].leaf &&
                                !cut.count({orig, s})) {
                                throw MalformedTree("break bookkeeping");
                            }
                        } else {
                            walk(vv.children[s].node, ov.children[s].node);
                        }
                    }
                };
                walk(host.root_vertex, t.root_vertex);
                conn.leaf = count;
                found = true;
                break;
            }
        }
        if (!found) throw BadConnection("lost a broken component");
        out.connections.push_back(conn);
    }
    out.validate();
    return out;
}

// ---------------------------------------------------------------------
// strata

namespace {

// Plain stable trees (associahedron strata): leaf or internal vertex with
// >= 2 children.
struct MTree {
    std::vector<MTree> kids;  // empty = leaf
    bool leaf() const { return kids.empty(); }
    size_t leaves() const {
        if (leaf()) return 1;
        size_t n = 0;
        for (const auto& k : kids) n += k.leaves();
        return n;
    }
    size_t internal() const {
        if (leaf()) return 0;
        size_t n = 1;
        for (const auto& k : kids) n += k.internal();
        return n;
    }
    std::string encode() const {
        if (leaf()) return "*";
        std::string s = "(";
        for (size_t i = 0; i < kids.size(); ++i) {
            if (i) s += ",";
            s += kids[i].encode();
        }
        return s + ")";
    }
};

// all M-trees with n leaves and exactly v internal vertices
std::vector<MTree> mtrees(size_t n, size_t v);

// all forests (ordered lists of MTree-or-leaf) with total n leaves, total v
// internal vertices, exactly parts parts
std::vector<std::vector<MTree>> mforests(size_t n, size_t v, size_t parts) {
    std::vector<std::vector<MTree>> out;
    if (parts == 0) {
        if (n == 0 && v == 0) out.push_back({});
        return out;
    }
    for (size_t first = 1; first + (parts - 1) <= n; ++first) {
        for (size_t fv = 0; fv <= v; ++fv) {
            std::vector<MTree> heads;
            if (first == 1 && fv == 0) heads.push_back(MTree{});  // leaf
            for (auto& t : mtrees(first, fv))
                if (fv >= 1) heads.push_back(t);
            if (heads.empty()) continue;
            auto tails = mforests(n - first, v - fv, parts - 1);
            for (const auto& h : heads)
                for (const auto& tl : tails) {
                    std::vector<MTree> f;
                    f.push_back(h);
                    f.insert(f.end(), tl.begin(), tl.end());
                    out.push_back(f);
                }
        }
    }
    return out;
}

std::vector<MTree> mtrees(size_t n, size_t v) {
    std::vector<MTree> out;
    if (v == 0 || n < 2) return out;
    // root has a >= 2 children; distribute leaves and the remaining v-1
    // internal vertices
    for (size_t a = 2; a <= n; ++a)
        for (auto& f : mforests(n, v - 1, a)) {
            MTree t;
            t.kids = f;
            out.push_back(t);
        }
    return out;
}

// Painted trees (multiplihedron strata).
struct NPart {  // a weighted vertex and everything below it
    std::vector<MTree> kids;  // each leaf or plain subtree
    size_t leaves() const {
        size_t n = 0;
        for (const auto& k : kids) n += k.leaves();
        return n;
    }
    size_t minternal() const {
        size_t n = 0;
        for (const auto& k : kids) n += k.internal();
        return n;
    }
    std::string encode() const {
        std::string s = "N[";
        for (size_t i = 0; i < kids.size(); ++i) {
            if (i) s += ",";
            s += kids[i].encode();
        }
        return s + "]";
    }
};

struct PTree {  // painted region node or a crossing
    bool crossing = true;
    NPart n;                  // when crossing
    std::vector<PTree> kids;  // painted children otherwise (>= 2)

    size_t leaves() const {
        if (crossing) return n.leaves();
        size_t s = 0;
        for (const auto& k : kids) s += k.leaves();
        return s;
    }
    size_t painted() const {
        if (crossing) return 0;
        size_t s = 1;
        for (const auto& k : kids) s += k.painted();
        return s;
    }
    size_t minternal() const {
        if (crossing) return n.minternal();
        size_t s = 0;
        for (const auto& k : kids) s += k.minternal();
        return s;
    }
    size_t codim() const { return painted() + minternal(); }
    std::string encode() const {
        if (crossing) return n.encode();
        std::string s = "P(";
        for (size_t i = 0; i < kids.size(); ++i) {
            if (i) s += ",";
            s += kids[i].encode();
        }
        return s + ")";
    }
    std::string wsym() const {
        if (!crossing) return "inf";
        if (n.kids.size() == 1 && !n.kids[0].leaf()) return "0";
        return "finite";
    }
};

// all NParts with n leaves, m plain internal vertices, any arity >= 1
std::vector<NPart> nparts(size_t n, size_t m) {
    std::vector<NPart> out;
    for (size_t arity = 1; arity <= n; ++arity)
        for (auto& f : mforests(n, m, arity)) {
            NPart p;
            p.kids = f;
            out.push_back(p);
        }
    return out;
}

// all painted trees with n leaves and the given codim
std::vector<PTree> ptrees(size_t n, size_t codim);

// painted forests: lists of PTrees, total leaves n, total codim c, parts
std::vector<std::vector<PTree>> pforests(size_t n, size_t c, size_t parts) {
    std::vector<std::vector<PTree>> out;
    if (parts == 0) {
        if (n == 0 && c == 0) out.push_back({});
        return out;
    }
    for (size_t first = 1; first + (parts - 1) <= n; ++first)
        for (size_t fc = 0; fc <= c; ++fc) {
            auto heads = ptrees(first, fc);
            if (heads.empty()) continue;
            auto tails = pforests(n - first, c - fc, parts - 1);
            for (const auto& h : heads)
                for (const auto& tl : tails) {
                    std::vector<PTree> f;
                    f.push_back(h);
                    f.insert(f.end(), tl.begin(), tl.end());
                    out.push_back(f);
                }
        }
    return out;
}

std::vector<PTree> ptrees(size_t n, size_t codim) {
    std::vector<PTree> out;
    // crossing at the top: codim = minternal
    for (auto& p : nparts(n, codim)) {
        PTree t;
        t.crossing = true;
        t.n = p;
        out.push_back(t);
    }
    // painted vertex at the top: codim = 1 + sum of kid codims
    if (codim >= 1)
        for (size_t a = 2; a <= n; ++a)
            for (auto& f : pforests(n, codim - 1, a)) {
                PTree t;
                t.crossing = false;
                t.kids = f;
                out.push_back(t);
            }
    return out;
}

MTree parse_mtree(const std::string& s, size_t& pos);

std::vector<MTree> parse_mforest(const std::string& s, size_t& pos,
                                 char close) {
    std::vector<MTree> kids;
    for (;;) {
        kids.push_back(parse_mtree(s, pos));
        if (pos >= s.size()) throw MalformedTree("truncated encoding");
        if (s[pos] == ',') {
            ++pos;
            continue;
        }
        if (s[pos] == close) {
            ++pos;
            return kids;
        }
        throw MalformedTree("bad encoding near position " +
                            std::to_string(pos));
    }
}

MTree parse_mtree(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw MalformedTree("truncated encoding");
    if (s[pos] == '*') {
        ++pos;
        return MTree{};
    }
    if (s[pos] == '(') {
        ++pos;
        MTree t;
        t.kids = parse_mforest(s, pos, ')');
        return t;
    }
    throw MalformedTree("bad encoding near position " + std::to_string(pos));
}

PTree parse_ptree(const std::string& s, size_t& pos) {
    if (pos + 1 < s.size() && s[pos] == 'N' && s[pos + 1] == '[') {
        pos += 2;
        PTree t;
        t.crossing = true;
        t.n.kids = parse_mforest(s, pos, ']');
        return t;
    }
    if (pos + 1 < s.size() && s[pos] == 'P' && s[pos + 1] == '(') {
        pos += 2;
        PTree t;
        t.crossing = false;
        for (;;) {
            t.kids.push_back(parse_ptree(s, pos));
            if (pos >= s.size()) throw MalformedTree("truncated encoding");
            if (s[pos] == ',') {
                ++pos;
                continue;
            }
            if (s[pos] == ')') {
                ++pos;
                break;
            }
            throw MalformedTree("bad encoding");
        }
        return t;
    }
    throw MalformedTree("bad painted encoding");
}

StratumDescriptor descriptor_of(Moduli m, const MTree& t) {
    return {m, t.leaves(), t.internal() - 1, t.encode(), "-"};
}
StratumDescriptor descriptor_of(const PTree& t) {
    return {Moduli::Multiplihedron, t.leaves(), t.codim(), t.encode(),
            t.wsym()};
}

// elementary expansions of an MTree: all ways to pull a consecutive block
// of 2..arity-1 children of one vertex into a new vertex
void mtree_expansions(const MTree& t, std::vector<MTree>& out) {
    if (t.leaf()) return;
    const size_t a = t.kids.size();
    for (size_t start = 0; start < a; ++start)
        for (size_t len = 2; start + len <= a && len < a; ++len) {
            MTree inner;
            inner.kids.assign(t.kids.begin() + start,
                              t.kids.begin() + start + len);
            MTree copy = t;
            copy.kids.erase(copy.kids.begin() + start,
                            copy.kids.begin() + start + len);
            copy.kids.insert(copy.kids.begin() + start, inner);
            out.push_back(copy);
        }
    for (size_t i = 0; i < a; ++i) {
        std::vector<MTree> sub;
        mtree_expansions(t.kids[i], sub);
        for (const auto& s : sub) {
            MTree copy = t;
            copy.kids[i] = s;
            out.push_back(copy);
        }
    }
}

void npart_moves(const NPart& p, std::vector<PTree>& out);

void ptree_moves(const PTree& t, std::vector<PTree>& out) {
    if (t.crossing) {
        npart_moves(t.n, out);
        return;
    }
    // expand a painted vertex
    const size_t a = t.kids.size();
    for (size_t start = 0; start < a; ++start)
        for (size_t len = 2; start + len <= a && len < a; ++len) {
            PTree inner;
            inner.crossing = false;
            inner.kids.assign(t.kids.begin() + start,
                              t.kids.begin() + start + len);
            PTree copy = t;
            copy.kids.erase(copy.kids.begin() + start,
                            copy.kids.begin() + start + len);
            copy.kids.insert(copy.kids.begin() + start, inner);
            out.push_back(copy);
        }
    for (size_t i = 0; i < a; ++i) {
        std::vector<PTree> sub;
        ptree_moves(t.kids[i], sub);
        for (const auto& s : sub) {
            PTree copy = t;
            copy.kids[i] = s;
            out.push_back(copy);
        }
    }
}

void npart_moves(const NPart& p, std::vector<PTree>& out) {
    const size_t a = p.kids.size();
    // pull a consecutive block of kids through a new plain vertex
    for (size_t start = 0; start < a; ++start)
        for (size_t len = 2; start + len <= a; ++len) {
            MTree inner;
            inner.kids.assign(p.kids.begin() + start,
                              p.kids.begin() + start + len);
            PTree copy;
            copy.crossing = true;
            copy.n = p;
            copy.n.kids.erase(copy.n.kids.begin() + start,
                              copy.n.kids.begin() + start + len);
            copy.n.kids.insert(copy.n.kids.begin() + start, inner);
            out.push_back(copy);
        }
    // split into a painted vertex over l >= 2 weighted vertices
    if (a >= 2) {
        std::function<void(size_t, std::vector<size_t>&)> comps =
            [&](size_t left, std::vector<size_t>& parts) {
                if (left == 0) {
                    if (parts.size() < 2) return;
                    PTree t;
                    t.crossing = false;
                    size_t at = 0;
                    for (size_t sz : parts) {
                        PTree kid;
                        kid.crossing = true;
                        kid.n.kids.assign(p.kids.begin() + at,
                                          p.kids.begin() + at + sz);
                        at += sz;
                        t.kids.push_back(kid);
                    }
                    out.push_back(t);
                    return;
                }
                for (size_t take = 1; take <= left; ++take) {
                    parts.push_back(take);
                    comps(left - take, parts);
                    parts.pop_back();
                }
            };
        std::vector<size_t> parts;
        comps(a, parts);
    }
    // expand inside a plain subtree
    for (size_t i = 0; i < a; ++i) {
        std::vector<MTree> sub;
        mtree_expansions(p.kids[i], sub);
        for (const auto& s : sub) {
            PTree copy;
            copy.crossing = true;
            copy.n = p;
            copy.n.kids[i] = s;
            out.push_back(copy);
        }
        // a leaf kid cannot expand; a block of size 1 that is a leaf can
        // still be pulled, giving an arity-1 plain vertex: not allowed, so
        // nothing extra here
    }
}

}  // namespace

std::vector<StratumDescriptor> enumerate_strata(Moduli moduli, size_t leaves,
                                                size_t codim) {
    std::set<StratumDescriptor> out;
    if (moduli == Moduli::Associahedron) {
        if (leaves < 2)
            throw MalformedTree("the associahedron needs at least 2 leaves");
        for (auto& t : mtrees(leaves, codim + 1))
            out.insert(descriptor_of(moduli, t));
    } else {
        if (leaves < 1)
            throw MalformedTree("the multiplihedron needs at least 1 leaf");
        for (auto& t : ptrees(leaves, codim)) out.insert(descriptor_of(t));
    }
    return {out.begin(), out.end()};
}

std::vector<StratumDescriptor> boundary_map(const StratumDescriptor& s) {
    std::set<StratumDescriptor> out;
    size_t pos = 0;
    if (s.moduli == Moduli::Associahedron) {
        MTree t = parse_mtree(s.encoding, pos);
        std::vector<MTree> moves;
        mtree_expansions(t, moves);
        for (const auto& m : moves)
            out.insert(descriptor_of(s.moduli, m));
    } else {
        PTree t = parse_ptree(s.encoding, pos);
        std::vector<PTree> moves;
        ptree_moves(t, moves);
        for (const auto& m : moves) out.insert(descriptor_of(m));
    }
    return {out.begin(), out.end()};
}

}  // namespace ainfty
