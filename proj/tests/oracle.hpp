#pragma once

// Brute-force reference implementations for the tests. Nothing here calls
// into the library's tree algorithms: graphs are plain edge lists, trees are
// found by filtering all (n-1)-edge subsets of K_n, connectivity is
// union-find, and paths come from a recursive search.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

struct UnionFind
{
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n + 1)
    {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int v)
    {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[a] = b;
        return true;
    }
};

inline bool in_set(unsigned long long mask, int v)
{
    return (mask >> (v - 1)) & 1;
}

/// Every spanning tree of K_n as a sorted edge list, sorted overall.
inline std::vector<EdgeList> all_trees(int n)
{
    EdgeList complete;
    for (int u = 1 ; u <= n ; ++u)
        for (int v = u + 1 ; v <= n ; ++v)
            complete.emplace_back(u, v);

    std::vector<EdgeList> result;
    std::vector<bool> chosen(complete.size(), false);
    std::fill(chosen.begin(), chosen.begin() + (n - 1), true);
    do {
        EdgeList edges;
        UnionFind uf(n);
        bool acyclic = true;
        for (std::size_t i = 0 ; i < complete.size() ; ++i)
            if (chosen[i]) {
                edges.push_back(complete[i]);
                acyclic = acyclic && uf.unite(complete[i].first, complete[i].second);
            }
        if (acyclic)
            result.push_back(edges);
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    std::sort(result.begin(), result.end());
    return result;
}

/// Masks of every S with 2 <= |S| <= n-1.
inline std::vector<unsigned long long> all_subsets(int n)
{
    std::vector<unsigned long long> result;
    for (unsigned long long m = 0 ; m < (1ULL << n) ; ++m) {
        int k = __builtin_popcountll(m);
        if (k >= 2 && k <= n - 1)
            result.push_back(m);
    }
    return result;
}

/// S is connected using only edges with both ends in S.
inline bool connected_within(int n, unsigned long long s, const EdgeList & edges)
{
    UnionFind uf(n);
    int components = __builtin_popcountll(s);
    for (auto [u, v] : edges)
        if (in_set(s, u) && in_set(s, v) && uf.unite(u, v))
            --components;
    return components == 1;
}

/// Simple path from a to b by recursive search over the edge list.
inline std::vector<int> path(const EdgeList & edges, int a, int b)
{
    std::vector<int> trail{a};
    std::function<bool(int, int)> walk = [&] (int v, int from) {
        if (v == b)
            return true;
        for (auto [p, q] : edges) {
            int w = p == v ? q : q == v ? p : 0;
            if (w == 0 || w == from)
                continue;
            trail.push_back(w);
            if (walk(w, v))
                return true;
            trail.pop_back();
        }
        return false;
    };
    walk(a, 0);
    return trail;
}

/// All witness triples (a, x, b), a != b, straight from the definition.
inline std::set<std::tuple<int, int, int>> witnesses(int n, unsigned long long s, const EdgeList & edges)
{
    std::set<std::tuple<int, int, int>> result;
    for (int a = 1 ; a <= n ; ++a)
        for (int b = 1 ; b <= n ; ++b) {
            if (a == b || ! in_set(s, a) || ! in_set(s, b))
                continue;
            for (int x : path(edges, a, b))
                if (! in_set(s, x))
                    result.emplace(a, x, b);
        }
    return result;
}

/// Fooling-set condition on index lists into (subset, tree) tables.
inline bool is_fooling(int n, const std::vector<std::pair<unsigned long long, EdgeList>> & pairs)
{
    auto f = [&] (unsigned long long s, const EdgeList & t) { return connected_within(n, s, t) ? 0 : 1; };
    for (std::size_t i = 0 ; i < pairs.size() ; ++i) {
        if (f(pairs[i].first, pairs[i].second) != 1)
            return false;
        for (std::size_t j = i + 1 ; j < pairs.size() ; ++j)
            if (f(pairs[i].first, pairs[j].second) * f(pairs[j].first, pairs[i].second) != 0)
                return false;
    }
    return true;
}

} // namespace oracle
