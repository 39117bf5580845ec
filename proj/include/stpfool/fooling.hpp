#pragma once

/**
 * Fooling sets for the support function f restricted to subtour inequalities:
 * lists of (S_i, T_i) with f(S_i, T_i) = 1 and f(S_i, T_j) f(S_j, T_i) = 0 for
 * i != j. A fooling set is exactly a clique in the compatibility graph on the
 * pairs with f = 1, which is what the searches below look for.
 */

#include <stpfool/clique.hpp>
#include <stpfool/tree.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace stpfool {

struct STPair
{
    NodeSubset s;
    Tree t;

    friend auto operator==(const STPair &, const STPair &) -> bool = default;
};

class FoolingSet
{
public:
    explicit FoolingSet(int n, std::vector<STPair> pairs = {}) : _n(n), _pairs(std::move(pairs))
    {
        check_node_count(n);
        for (auto & p : _pairs)
            check_pair(p);
    }

    auto n() const -> int { return _n; }
    auto size() const -> int { return int(_pairs.size()); }
    auto pairs() const -> const std::vector<STPair> & { return _pairs; }
    auto operator[](int i) const -> const STPair & { return _pairs[i]; }

    auto push_back(STPair p) -> void
    {
        check_pair(p);
        _pairs.push_back(std::move(p));
    }

    friend auto operator==(const FoolingSet &, const FoolingSet &) -> bool = default;

private:
    auto check_pair(const STPair & p) const -> void
    {
        if (p.s.n() != _n || p.t.n() != _n)
            throw InputError("pair over n=" + std::to_string(p.s.n()) + "/" + std::to_string(p.t.n())
                    + " in a fooling set over n=" + std::to_string(_n));
    }

    int _n;
    std::vector<STPair> _pairs;
};

struct FoolingViolation
{
    enum class Kind { diagonal, cross };

    Kind kind;
    int i;  ///< 0-based row
    int j;  ///< 0-based; equals i for diagonal violations

    friend auto operator==(const FoolingViolation &, const FoolingViolation &) -> bool = default;
};

struct VerificationReport
{
    bool valid = true;
    std::vector<FoolingViolation> violations;
};

inline auto verify_fooling_set(const FoolingSet & fs) -> VerificationReport
{
    VerificationReport report;
    const int r = fs.size();
    for (int i = 0 ; i < r ; ++i)
        if (support(fs[i].s, fs[i].t) != 1)
            report.violations.push_back({FoolingViolation::Kind::diagonal, i, i});
    for (int i = 0 ; i < r ; ++i)
        for (int j = i + 1 ; j < r ; ++j)
            if (support(fs[i].s, fs[j].t) * support(fs[j].s, fs[i].t) != 0)
                report.violations.push_back({FoolingViolation::Kind::cross, i, j});
    report.valid = report.violations.empty();
    return report;
}

/// H(i, j) = f(S_i, T_j).
class HMatrix
{
public:
    explicit HMatrix(int r) : _r(r), _entries(std::size_t(r) * r, 0) {}

    auto size() const -> int { return _r; }
    auto operator()(int i, int j) const -> int { return _entries[std::size_t(i) * _r + j]; }
    auto set(int i, int j, int value) -> void { _entries[std::size_t(i) * _r + j] = std::uint8_t(value); }

    auto column_zeros(int k) const -> int
    {
        int zeros = 0;
        for (int i = 0 ; i < _r ; ++i)
            zeros += (*this)(i, k) == 0;
        return zeros;
    }

    auto rows() const -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> result(_r, std::vector<int>(_r));
        for (int i = 0 ; i < _r ; ++i)
            for (int j = 0 ; j < _r ; ++j)
                result[i][j] = (*this)(i, j);
        return result;
    }

private:
    int _r;
    std::vector<std::uint8_t> _entries;
};

inline auto build_h(const FoolingSet & fs) -> HMatrix
{
    HMatrix h(fs.size());
    for (int i = 0 ; i < fs.size() ; ++i)
        for (int j = 0 ; j < fs.size() ; ++j)
            h.set(i, j, support(fs[i].s, fs[j].t));
    return h;
}

/// mt19937_64 with a portable bounded draw, so seeded orders match across standard libraries.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    auto below(std::uint64_t bound) -> std::uint64_t
    {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t value;
        do
            value = _engine();
        while (value >= limit);
        return value % bound;
    }

    template <typename T>
    auto shuffle(std::vector<T> & items) -> void
    {
        for (std::size_t i = items.size() ; i > 1 ; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 _engine;
};

/// splitmix64 step; derives independent per-restart seeds from one run seed.
inline auto derive_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t
{
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Worker count: STPFOOL_THREADS if set and positive, else hardware concurrency.
inline auto default_threads() -> int
{
    if (const char * env = std::getenv("STPFOOL_THREADS")) {
        int value = std::atoi(env);
        if (value > 0)
            return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/**
 * All pairs (S, T) with f(S, T) = 1 for a fixed n, in subset-major order over
 * enumerate_subsets and enumerate_trees. Vertex p of the compatibility graph
 * is the p-th such pair.
 */
class CandidateSpace
{
public:
    explicit CandidateSpace(int n) : _n(n), _subsets(enumerate_subsets(n)), _trees(all_trees(n))
    {
        _support.resize(_subsets.size() * _trees.size());
        for (std::size_t s = 0 ; s < _subsets.size() ; ++s)
            for (std::size_t t = 0 ; t < _trees.size() ; ++t) {
                auto value = std::uint8_t(support(_subsets[s], _trees[t]));
                _support[s * _trees.size() + t] = value;
                if (value)
                    _vertices.push_back({int(s), int(t)});
            }
    }

    auto n() const -> int { return _n; }
    auto subsets() const -> const std::vector<NodeSubset> & { return _subsets; }
    auto trees() const -> const std::vector<Tree> & { return _trees; }
    auto size() const -> int { return int(_vertices.size()); }

    /// f for subset index s and tree index t.
    auto support_at(int s, int t) const -> int { return _support[std::size_t(s) * _trees.size() + t]; }

    auto subset_index(int p) const -> int { return _vertices[p].subset; }
    auto tree_index(int p) const -> int { return _vertices[p].tree; }

    auto compatible(int p, int q) const -> bool
    {
        return support_at(_vertices[p].subset, _vertices[q].tree) * support_at(_vertices[q].subset, _vertices[p].tree) == 0;
    }

    auto pair(int p) const -> STPair { return {_subsets[_vertices[p].subset], _trees[_vertices[p].tree]}; }

    auto to_fooling_set(const std::vector<int> & vertices) const -> FoolingSet
    {
        FoolingSet fs(_n);
        for (int p : vertices)
            fs.push_back(pair(p));
        return fs;
    }

    /// Compatibility graph; rows are filled by up to `threads` workers.
    auto build_graph(int threads = 1) const -> BitGraph
    {
        const int size = this->size();
        BitGraph graph(size);
        auto fill = [&] (int worker, int workers) {
            for (int p = worker ; p < size ; p += workers) {
                auto & row = graph.row(p);
                for (int q = 0 ; q < size ; ++q)
                    if (q != p && compatible(p, q))
                        row.set(q);
            }
        };

        threads = std::clamp(threads, 1, std::max(1, size));
        if (threads == 1)
            fill(0, 1);
        else {
            std::vector<std::jthread> workers;
            for (int w = 0 ; w < threads ; ++w)
                workers.emplace_back(fill, w, threads);
        }
        return graph;
    }

    /**
     * The action of every node relabeling of [n] on the candidate pairs, one
     * vertex permutation per element of the symmetric group. Relabeling
     * preserves f, so each is an automorphism of the compatibility graph.
     */
    auto relabelings() const -> std::vector<std::vector<int>>
    {
        std::vector<int> subset_at(std::size_t{1} << _n, -1);
        for (std::size_t s = 0 ; s < _subsets.size() ; ++s)
            subset_at[_subsets[s].mask()] = int(s);
        std::vector<int> vertex_at(_subsets.size() * _trees.size(), -1);
        for (int p = 0 ; p < size() ; ++p)
            vertex_at[std::size_t(_vertices[p].subset) * _trees.size() + _vertices[p].tree] = p;

        // enumerate_trees lists codes in lexicographic order, so a tree's index is its code read in base n
        auto tree_rank = [&] (const Tree & t) {
            std::size_t rank = 0;
            for (Node v : prufer_encode(t).seq)
                rank = rank * _n + std::size_t(v - 1);
            return rank;
        };

        std::vector<std::vector<int>> result;
        std::vector<Node> image(_n + 1);
        std::iota(image.begin(), image.end(), 0);
        do {
            std::vector<std::size_t> tree_image(_trees.size());
            for (std::size_t t = 0 ; t < _trees.size() ; ++t) {
                std::vector<Edge> edges;
                for (auto & e : _trees[t].edges())
                    edges.emplace_back(image[e.u], image[e.v]);
                tree_image[t] = tree_rank(Tree(_n, std::move(edges)));
            }

            std::vector<int> permutation(size());
            for (int p = 0 ; p < size() ; ++p) {
                Mask moved = 0;
                for (Node v : _subsets[_vertices[p].subset].members())
                    moved |= node_bit(image[v]);
                permutation[p] = vertex_at[std::size_t(subset_at[moved]) * _trees.size() + tree_image[_vertices[p].tree]];
            }
            result.push_back(std::move(permutation));
        } while (std::next_permutation(image.begin() + 1, image.end()));
        return result;
    }

private:
    struct Vertex
    {
        int subset;
        int tree;
    };

    int _n;
    std::vector<NodeSubset> _subsets;
    std::vector<Tree> _trees;
    std::vector<std::uint8_t> _support;
    std::vector<Vertex> _vertices;
};

/// Maximal clique from scanning the candidates in a seeded random order.
inline auto random_maximal_clique(const CandidateSpace & space, std::uint64_t seed) -> std::vector<int>
{
    std::vector<int> order(space.size());
    std::iota(order.begin(), order.end(), 0);
    Rng(seed).shuffle(order);

    std::vector<int> accepted;
    for (int p : order)
        if (std::all_of(accepted.begin(), accepted.end(), [&] (int q) { return space.compatible(p, q); }))
            accepted.push_back(p);
    return accepted;
}

inline auto greedy_fooling_set(int n, std::uint64_t seed) -> FoolingSet
{
    check_node_count(n);
    CandidateSpace space(n);
    return space.to_fooling_set(random_maximal_clique(space, seed));
}

enum class SearchMode { exact, heuristic };

struct SearchOptions
{
    SearchMode mode = SearchMode::exact;
    std::chrono::duration<double> time_limit = std::chrono::seconds(60);
    std::uint64_t seed = 0;
    /// Random maximal cliques tried by the heuristic (and to seed the exact incumbent).
    int restarts = 200;
    int threads = 1;
    /// Permit exact search for n >= 6.
    bool allow_large = false;
    /// Prune branches equivalent under node relabeling (exact mode).
    bool use_symmetry = true;
};

/// Relabelings are materialized as n! vertex permutations, so only for small n.
inline constexpr int symmetry_cap = 5;

/// Largest n for which exact search runs without allow_large.
inline constexpr int exact_search_cap = 5;

struct SearchResult
{
    FoolingSet best;
    int size = 0;
    bool proven_optimal = false;
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds wall_time{0};
    /// Colouring upper bound on the maximum size; exact mode only.
    std::optional<int> upper_bound;
};

inline auto search_max_fooling_set(int n, const SearchOptions & options) -> SearchResult
{
    check_node_count(n);
    if (options.mode == SearchMode::exact && n > exact_search_cap && ! options.allow_large)
        throw ScaleError("exact search refused for n=" + std::to_string(n) + " without the large-scale override");
    check_enumerable(n);

    const auto start = std::chrono::steady_clock::now();
    const auto deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(options.time_limit);

    SearchResult result{FoolingSet(n), 0, false, 0, {}, std::nullopt};
    CandidateSpace space(n);
    std::vector<int> incumbent;
    for (int i = 0 ; i < options.restarts ; ++i) {
        if (i > 0 && std::chrono::steady_clock::now() >= deadline)
            break;
        auto clique = random_maximal_clique(space, derive_seed(options.seed, std::uint64_t(i)));
        if (clique.size() > incumbent.size())
            incumbent = std::move(clique);
    }

    if (options.mode == SearchMode::exact) {
        auto graph = space.build_graph(options.threads);
        CliqueOptions clique_options{incumbent, deadline, {}};
        if (options.use_symmetry && n <= symmetry_cap)
            clique_options.automorphisms = space.relabelings();
        auto clique = max_clique(graph, clique_options);
        incumbent = clique.members;
        result.proven_optimal = clique.proven_optimal;
        result.nodes_explored = clique.nodes;
        result.upper_bound = clique.upper_bound;
    }

    std::sort(incumbent.begin(), incumbent.end());
    result.best = space.to_fooling_set(incumbent);
    result.size = result.best.size();
    result.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

    if (! verify_fooling_set(result.best).valid)
        throw ContractError("search produced a list that is not a fooling set");
    return result;
}

} // namespace stpfool
