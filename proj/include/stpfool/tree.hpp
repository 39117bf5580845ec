#pragma once

/**
 * Labeled spanning trees on the node set {1, ..., n} and the proper node
 * subsets S (2 <= |S| <= n-1) that index the subtour inequalities. Nodes are
 * plain 1-based integers; subsets and neighbourhoods are n-bit masks with
 * node v stored in bit v-1.
 */

#include <stpfool/error.hpp>

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace stpfool {

using Node = int;
using Mask = std::uint64_t;

/// Masks are single words, so n is bounded by the word width.
inline constexpr int max_nodes = 64;

/// Largest n accepted by anything that enumerates trees or subsets.
inline constexpr int enumeration_cap = 12;

constexpr auto node_bit(Node v) -> Mask
{
    return Mask{1} << (v - 1);
}

constexpr auto full_mask(int n) -> Mask
{
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline auto popcount(Mask m) -> int
{
    return std::popcount(m);
}

/// Lowest node in a nonempty mask.
inline auto first_node(Mask m) -> Node
{
    return std::countr_zero(m) + 1;
}

inline auto nodes_of(Mask m) -> std::vector<Node>
{
    std::vector<Node> result;
    for (; m; m &= m - 1)
        result.push_back(first_node(m));
    return result;
}

inline auto check_node_count(int n) -> void
{
    if (n < 2 || n > max_nodes)
        throw InputError("node count " + std::to_string(n) + " outside 2.." + std::to_string(max_nodes));
}

inline auto check_node(int n, Node v) -> void
{
    if (v < 1 || v > n)
        throw InputError("node " + std::to_string(v) + " outside 1.." + std::to_string(n));
}

inline auto check_enumerable(int n) -> void
{
    if (n > enumeration_cap)
        throw ScaleError("enumeration refused for n=" + std::to_string(n) + " (cap is "
                + std::to_string(enumeration_cap) + ")");
}

/// Undirected edge, stored with the smaller endpoint first.
struct Edge
{
    Node u = 1;
    Node v = 2;

    constexpr Edge() = default;

    Edge(Node a, Node b) : u(std::min(a, b)), v(std::max(a, b))
    {
        if (a == b)
            throw InputError("edge endpoints must differ (got " + std::to_string(a) + ")");
    }

    auto operator<=>(const Edge &) const = default;
};

/// A spanning tree on {1, ..., n}: exactly n-1 edges forming a connected graph.
class Tree
{
public:
    Tree(int n, std::vector<Edge> edges) : _n(n), _edges(std::move(edges))
    {
        check_node_count(n);
        if (std::ssize(_edges) != n - 1)
            throw InputError("a tree on " + std::to_string(n) + " nodes needs " + std::to_string(n - 1)
                    + " edges, got " + std::to_string(_edges.size()));

        std::sort(_edges.begin(), _edges.end());
        if (std::adjacent_find(_edges.begin(), _edges.end()) != _edges.end())
            throw InputError("duplicate edge in tree");

        _adjacency.assign(n, 0);
        for (auto & e : _edges) {
            check_node(n, e.u);
            check_node(n, e.v);
            _adjacency[e.u - 1] |= node_bit(e.v);
            _adjacency[e.v - 1] |= node_bit(e.u);
        }

        if (reach(1, full_mask(n)) != full_mask(n))
            throw InputError("edge set is not connected");
    }

    auto n() const -> int { return _n; }

    auto edges() const -> std::span<const Edge> { return _edges; }

    auto neighbours(Node v) const -> Mask { return _adjacency[v - 1]; }

    auto degree(Node v) const -> int { return popcount(_adjacency[v - 1]); }

    auto has_edge(Edge e) const -> bool
    {
        return e.v <= _n && (_adjacency[e.u - 1] & node_bit(e.v));
    }

    /// Nodes reachable from start using only nodes inside allowed (start must be allowed).
    auto reach(Node start, Mask allowed) const -> Mask
    {
        Mask seen = node_bit(start), frontier = seen;
        while (frontier) {
            Node v = first_node(frontier);
            frontier &= frontier - 1;
            Mask next = _adjacency[v - 1] & allowed & ~seen;
            seen |= next;
            frontier |= next;
        }
        return seen;
    }

    /// True iff x lies on the path between a and b, endpoints included.
    auto on_path(Node a, Node b, Node x) const -> bool
    {
        if (x == a || x == b)
            return true;
        return ! (reach(a, full_mask(_n) & ~node_bit(x)) & node_bit(b));
    }

    friend auto operator==(const Tree & l, const Tree & r) -> bool
    {
        return l._n == r._n && l._edges == r._edges;
    }

private:
    int _n;
    std::vector<Edge> _edges;
    std::vector<Mask> _adjacency;
};

/// Proper node subset with at least two members: the index set of one subtour inequality.
class NodeSubset
{
public:
    NodeSubset(int n, Mask members) : _n(n), _members(members)
    {
        check_node_count(n);
        if (members & ~full_mask(n))
            throw InputError("subset contains nodes outside 1.." + std::to_string(n));
        int k = popcount(members);
        if (k < 2 || k > n - 1)
            throw InputError("subset size " + std::to_string(k) + " outside 2.." + std::to_string(n - 1));
    }

    static auto from_nodes(int n, std::span<const Node> nodes) -> NodeSubset
    {
        check_node_count(n);
        Mask m = 0;
        for (Node v : nodes) {
            check_node(n, v);
            if (m & node_bit(v))
                throw InputError("repeated node " + std::to_string(v) + " in subset");
            m |= node_bit(v);
        }
        return NodeSubset(n, m);
    }

    static auto from_nodes(int n, std::initializer_list<Node> nodes) -> NodeSubset
    {
        return from_nodes(n, std::span<const Node>(nodes.begin(), nodes.size()));
    }

    auto n() const -> int { return _n; }
    auto mask() const -> Mask { return _members; }
    auto size() const -> int { return popcount(_members); }
    auto contains(Node v) const -> bool { return v >= 1 && v <= _n && (_members & node_bit(v)); }
    auto members() const -> std::vector<Node> { return nodes_of(_members); }

    auto operator<=>(const NodeSubset &) const = default;

private:
    int _n;
    Mask _members;
};

/// Prüfer code of a labeled tree: n-2 entries, each in 1..n.
struct PruferSeq
{
    int n = 2;
    std::vector<Node> seq;

    auto operator<=>(const PruferSeq &) const = default;
};

inline auto prufer_decode(const PruferSeq & code) -> Tree
{
    const int n = code.n;
    check_node_count(n);
    if (std::ssize(code.seq) != n - 2)
        throw InputError("Prüfer sequence for n=" + std::to_string(n) + " needs length " + std::to_string(n - 2)
                + ", got " + std::to_string(code.seq.size()));

    std::vector<int> degree(n + 1, 1);
    for (Node v : code.seq) {
        check_node(n, v);
        ++degree[v];
    }

    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Node v : code.seq) {
        Node leaf = 1;
        while (degree[leaf] != 1)
            ++leaf;
        edges.emplace_back(leaf, v);
        --degree[leaf];
        --degree[v];
    }

    Node u = 0, w = 0;
    for (Node v = 1 ; v <= n ; ++v)
        if (degree[v] == 1)
            (u == 0 ? u : w) = v;
    edges.emplace_back(u, w);

    return Tree(n, std::move(edges));
}

inline auto prufer_encode(const Tree & t) -> PruferSeq
{
    const int n = t.n();
    std::vector<Mask> adjacency(n + 1);
    for (Node v = 1 ; v <= n ; ++v)
        adjacency[v] = t.neighbours(v);

    PruferSeq code{n, {}};
    code.seq.reserve(n - 2);
    for (int step = 0 ; step < n - 2 ; ++step) {
        Node leaf = 1;
        while (popcount(adjacency[leaf]) != 1)
            ++leaf;
        Node parent = first_node(adjacency[leaf]);
        code.seq.push_back(parent);
        adjacency[leaf] = 0;
        adjacency[parent] &= ~node_bit(leaf);
    }
    return code;
}

/// n^(n-2), the number of labeled trees on n nodes.
inline auto tree_count(int n) -> std::uint64_t
{
    std::uint64_t result = 1;
    for (int i = 0 ; i < n - 2 ; ++i)
        result *= static_cast<std::uint64_t>(n);
    return result;
}

/// 2^n - n - 2, the number of proper subsets with at least two members.
inline auto subset_count(int n) -> std::uint64_t
{
    return n < 2 ? 0 : (std::uint64_t{1} << n) - static_cast<std::uint64_t>(n) - 2;
}

/**
 * Every labeled tree on {1, ..., n} exactly once, in lexicographic order of
 * Prüfer codes. Single pass; independent ranges may be iterated concurrently.
 */
class TreeRange
{
public:
    explicit TreeRange(int n) : _n(n)
    {
        check_node_count(n);
        check_enumerable(n);
    }

    class iterator
    {
    public:
        using value_type = Tree;
        using difference_type = std::ptrdiff_t;

        iterator() = default;

        explicit iterator(int n) : _code{n, std::vector<Node>(n - 2, 1)}, _done(false) {}

        auto operator*() const -> Tree { return prufer_decode(_code); }

        auto operator++() -> iterator &
        {
            int i = static_cast<int>(_code.seq.size()) - 1;
            while (i >= 0 && _code.seq[i] == _code.n)
                _code.seq[i--] = 1;
            if (i < 0)
                _done = true;
            else
                ++_code.seq[i];
            return *this;
        }

        auto operator++(int) -> void { ++*this; }

        auto code() const -> const PruferSeq & { return _code; }

        friend auto operator==(const iterator & it, std::default_sentinel_t) -> bool { return it._done; }

    private:
        PruferSeq _code;
        bool _done = true;
    };

    auto begin() const -> iterator { return iterator(_n); }
    auto end() const -> std::default_sentinel_t { return {}; }

private:
    int _n;
};

inline auto enumerate_trees(int n) -> TreeRange
{
    return TreeRange(n);
}

/// Materialized enumerate_trees(n), same order.
inline auto all_trees(int n) -> std::vector<Tree>
{
    std::vector<Tree> result;
    result.reserve(tree_count(n));
    for (auto t : TreeRange(n))
        result.push_back(std::move(t));
    return result;
}

/// Every NodeSubset of [n] in increasing mask order; empty for n = 2.
inline auto enumerate_subsets(int n) -> std::vector<NodeSubset>
{
    check_node_count(n);
    check_enumerable(n);
    std::vector<NodeSubset> result;
    for (Mask m = 0 ; m <= full_mask(n) ; ++m) {
        int k = popcount(m);
        if (k >= 2 && k <= n - 1)
            result.emplace_back(n, m);
    }
    return result;
}

inline auto path_in_tree(const Tree & t, Node a, Node b) -> std::vector<Node>
{
    check_node(t.n(), a);
    check_node(t.n(), b);

    std::vector<Node> parent(t.n() + 1, 0);
    std::vector<Node> queue{a};
    parent[a] = a;
    for (std::size_t head = 0 ; head < queue.size() && parent[b] == 0 ; ++head) {
        Node v = queue[head];
        for (Mask m = t.neighbours(v) ; m ; m &= m - 1) {
            Node w = first_node(m);
            if (parent[w] == 0) {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }

    std::vector<Node> path{b};
    while (path.back() != a)
        path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

inline auto check_same_n(const NodeSubset & s, const Tree & t) -> void
{
    if (s.n() != t.n())
        throw InputError("subset is over n=" + std::to_string(s.n()) + " but tree is over n=" + std::to_string(t.n()));
}

/// True iff the edges of t inside s form a connected graph on s.
inline auto is_connected_in(const Tree & t, const NodeSubset & s) -> bool
{
    check_same_n(s, t);
    return t.reach(first_node(s.mask()), s.mask()) == s.mask();
}

/// Number of tree edges with both endpoints in s.
inline auto induced_edge_count(const Tree & t, const NodeSubset & s) -> int
{
    check_same_n(s, t);
    int count = 0;
    for (auto & e : t.edges())
        if (s.contains(e.u) && s.contains(e.v))
            ++count;
    return count;
}

/// (|S| - 1) - |T ∩ binom(S, 2)|: how far t is from making the subtour inequality for s tight.
inline auto slack(const NodeSubset & s, const Tree & t) -> int
{
    return s.size() - 1 - induced_edge_count(t, s);
}

/// 0 if s is connected in t, 1 otherwise.
inline auto support(const NodeSubset & s, const Tree & t) -> int
{
    return is_connected_in(t, s) ? 0 : 1;
}

} // namespace stpfool
