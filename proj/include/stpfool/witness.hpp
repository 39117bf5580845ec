#pragma once

/**
 * Witness triples (a, x, b) for f(S, T) = 1: a and b in S, x outside S, and x
 * on the tree path between a and b. A witness exists exactly when S is not
 * connected in T.
 */

#include <stpfool/tree.hpp>

#include <limits>
#include <optional>
#include <vector>

namespace stpfool {

struct Witness
{
    Node a = 0;
    Node x = 0;
    Node b = 0;

    auto reflected() const -> Witness { return {b, x, a}; }

    auto operator<=>(const Witness &) const = default;
};

/// All witnesses for (s, t) sharing the middle node x, reflections included, sorted.
struct WitnessSet
{
    Node x = 0;
    std::vector<Witness> triples;

    auto empty() const -> bool { return triples.empty(); }
    auto size() const -> std::size_t { return triples.size(); }
};

inline auto is_witness(const NodeSubset & s, const Tree & t, const Witness & w) -> bool
{
    check_same_n(s, t);
    check_node(t.n(), w.a);
    check_node(t.n(), w.x);
    check_node(t.n(), w.b);

    if (! s.contains(w.a) || ! s.contains(w.b) || s.contains(w.x))
        return false;
    return t.on_path(w.a, w.b, w.x);
}

namespace detail {

    /// Connected components of the subforest of t induced by s, as masks.
    inline auto induced_components(const Tree & t, Mask s) -> std::vector<Mask>
    {
        std::vector<Mask> components;
        for (Mask rest = s ; rest ; ) {
            Mask c = t.reach(first_node(rest), s);
            components.push_back(c);
            rest &= ~c;
        }
        return components;
    }

}

/**
 * Some witness for f(s, t) = 1, or nothing when s is connected in t.
 *
 * Shrinks each induced component of s to a single super node; any node outside
 * s separating two super nodes is a valid middle. Picks the smallest such x,
 * then the lexicographically smallest (a, b) with a < b.
 */
inline auto find_witness(const NodeSubset & s, const Tree & t) -> std::optional<Witness>
{
    check_same_n(s, t);
    auto components = detail::induced_components(t, s.mask());
    if (components.size() < 2)
        return std::nullopt;

    auto component_of = [&] (Node v) {
        for (std::size_t c = 0 ; c < components.size() ; ++c)
            if (components[c] & node_bit(v))
                return c;
        return components.size();
    };

    const Mask outside = full_mask(t.n()) & ~s.mask();
    for (Mask xs = outside ; xs ; xs &= xs - 1) {
        Node x = first_node(xs);
        const Mask without_x = full_mask(t.n()) & ~node_bit(x);
        for (Mask as = s.mask() ; as ; as &= as - 1) {
            Node a = first_node(as);
            // everything in s that x separates from a; such nodes are never in a's component
            Mask separated = s.mask() & ~t.reach(a, without_x) & ~(node_bit(a) * 2 - 1);
            if (separated) {
                Node b = first_node(separated);
                if (component_of(a) == component_of(b))
                    throw ContractError("separated nodes share an induced component");
                return Witness{a, x, b};
            }
        }
    }

    throw ContractError("disconnected subset without a separating node");
}

inline auto witnesses_with_middle(const NodeSubset & s, const Tree & t, Node x) -> WitnessSet
{
    check_same_n(s, t);
    check_node(t.n(), x);

    WitnessSet result{x, {}};
    if (s.contains(x))
        return result;

    const Mask without_x = full_mask(t.n()) & ~node_bit(x);
    for (Node a : s.members()) {
        Mask separated = s.mask() & ~t.reach(a, without_x);
        for (Node b : nodes_of(separated))
            result.triples.push_back({a, x, b});
    }
    return result;
}

/**
 * Given a nonempty witness set W(x, S, T) and a tree t_prime in which S is
 * connected, returns an edge {a, b} of t_prime inside S whose triple (a, x, b)
 * is in W(x, S, T).
 *
 * Picks, among witness pairs, one minimizing the distance in the tree Q formed
 * by t_prime restricted to S (ties: smallest canonical pair). The minimizer is
 * returned as is; callers that audit the construction check that it is
 * actually an edge of t_prime.
 */
inline auto tree_witness_edge(const NodeSubset & s, const Tree & t, const Tree & t_prime, Node x) -> Edge
{
    check_same_n(s, t);
    check_same_n(s, t_prime);
    check_node(t.n(), x);

    auto candidates = witnesses_with_middle(s, t, x);
    if (candidates.empty())
        throw ContractError("no witness for f(S,T)=1 with middle node " + std::to_string(x));
    if (! is_connected_in(t_prime, s))
        throw ContractError("subset is not connected in the second tree");

    const int n = t.n();
    auto q_distances_from = [&] (Node a) {
        std::vector<int> dist(n + 1, -1);
        dist[a] = 0;
        std::vector<Node> queue{a};
        for (std::size_t head = 0 ; head < queue.size() ; ++head) {
            Node v = queue[head];
            for (Mask m = t_prime.neighbours(v) & s.mask() ; m ; m &= m - 1) {
                Node w = first_node(m);
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        return dist;
    };

    int best_distance = std::numeric_limits<int>::max();
    std::optional<Edge> best;
    Node cached_source = 0;
    std::vector<int> dist;
    for (auto & w : candidates.triples) {
        if (w.a > w.b)
            continue;
        if (w.a != cached_source) {
            dist = q_distances_from(w.a);
            cached_source = w.a;
        }
        Edge pair(w.a, w.b);
        if (dist[w.b] < best_distance || (dist[w.b] == best_distance && pair < *best)) {
            best_distance = dist[w.b];
            best = pair;
        }
    }
    return *best;
}

/**
 * For distinct a, b, c: true iff among (a,x,b), (b,x,c), (c,x,a) either none
 * or at least two are witnesses for (s, t).
 */
inline auto check_triangle(const NodeSubset & s, const Tree & t, Node a, Node b, Node c, Node x) -> bool
{
    check_same_n(s, t);
    if (a == b || b == c || a == c)
        throw InputError("triangle corners must be distinct");

    int count = int(is_witness(s, t, {a, x, b})) + int(is_witness(s, t, {b, x, c}))
        + int(is_witness(s, t, {c, x, a}));
    return count == 0 || count >= 2;
}

} // namespace stpfool
