#pragma once

#include <stpfool/tree.hpp>

#include "oracle.hpp"

#include <vector>

namespace testing {

using namespace stpfool;

inline auto star(int n, Node centre) -> Tree
{
    std::vector<Edge> edges;
    for (Node v = 1 ; v <= n ; ++v)
        if (v != centre)
            edges.emplace_back(v, centre);
    return Tree(n, edges);
}

/// The path 1-2-...-n.
inline auto path_tree(int n) -> Tree
{
    std::vector<Edge> edges;
    for (Node v = 1 ; v < n ; ++v)
        edges.emplace_back(v, v + 1);
    return Tree(n, edges);
}

inline auto subset(int n, std::initializer_list<Node> nodes) -> NodeSubset
{
    return NodeSubset::from_nodes(n, nodes);
}

inline auto edge_list(const Tree & t) -> oracle::EdgeList
{
    oracle::EdgeList out;
    for (auto & e : t.edges())
        out.emplace_back(e.u, e.v);
    return out;
}

}
