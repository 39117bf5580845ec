#pragma once

/**
 * Maximum clique by bitset branch and bound (greedy colouring bound, vertices
 * renumbered in degeneracy order so that the colouring sees dense cores first).
 */

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace stpfool {

class BitSet
{
public:
    using Word = std::uint64_t;
    static constexpr int bits_per_word = 64;

    BitSet() = default;
    explicit BitSet(int size) : _words((size + bits_per_word - 1) / bits_per_word, 0) {}

    auto set(int i) -> void { _words[i / bits_per_word] |= Word{1} << (i % bits_per_word); }
    auto reset(int i) -> void { _words[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word)); }
    auto test(int i) const -> bool { return (_words[i / bits_per_word] >> (i % bits_per_word)) & 1; }

    auto empty() const -> bool
    {
        return std::all_of(_words.begin(), _words.end(), [] (Word w) { return w == 0; });
    }

    auto count() const -> int
    {
        int result = 0;
        for (Word w : _words)
            result += std::popcount(w);
        return result;
    }

    /// Index of the lowest set bit, or -1.
    auto first() const -> int
    {
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            if (_words[i])
                return int(i) * bits_per_word + std::countr_zero(_words[i]);
        return -1;
    }

    auto intersect_with(const BitSet & other) -> void
    {
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] &= other._words[i];
    }

    auto subtract(const BitSet & other) -> void
    {
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] &= ~other._words[i];
    }

    template <typename F>
    auto for_each(F && f) const -> void
    {
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            for (Word w = _words[i] ; w ; w &= w - 1)
                f(int(i) * bits_per_word + std::countr_zero(w));
    }

    friend auto operator==(const BitSet &, const BitSet &) -> bool = default;

private:
    std::vector<Word> _words;
};

/// Undirected simple graph with one adjacency bitset per vertex.
class BitGraph
{
public:
    BitGraph() = default;
    explicit BitGraph(int size) : _size(size), _rows(size, BitSet(size)) {}

    auto size() const -> int { return _size; }

    auto add_edge(int a, int b) -> void
    {
        _rows[a].set(b);
        _rows[b].set(a);
    }

    auto adjacent(int a, int b) const -> bool { return _rows[a].test(b); }
    auto neighbourhood(int v) const -> const BitSet & { return _rows[v]; }
    auto degree(int v) const -> int { return _rows[v].count(); }

    /// Direct row access for builders filling disjoint rows; caller keeps the matrix symmetric.
    auto row(int v) -> BitSet & { return _rows[v]; }

private:
    int _size = 0;
    std::vector<BitSet> _rows;
};

struct CliqueOptions
{
    /// Known clique used as the starting incumbent.
    std::vector<int> initial;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    /**
     * Optional automorphism group of the graph, listed element by element as
     * vertex permutations. After a branch on w is exhausted at a node with
     * clique C, every image of w under the pointwise stabilizer of C is
     * dropped from that node's candidates as well.
     */
    std::vector<std::vector<int>> automorphisms;
};

struct CliqueResult
{
    std::vector<int> members;
    bool proven_optimal = false;
    /// Valid upper bound on the clique number (equals members.size() when proven optimal).
    int upper_bound = 0;
    std::uint64_t nodes = 0;
};

/// Smallest-last (degeneracy) order, densest core first.
inline auto degeneracy_order(const BitGraph & g) -> std::vector<int>
{
    const int n = g.size();
    std::vector<int> degree(n);
    for (int v = 0 ; v < n ; ++v)
        degree[v] = g.degree(v);

    std::vector<bool> removed(n, false);
    std::vector<int> removal;
    removal.reserve(n);
    for (int step = 0 ; step < n ; ++step) {
        int best = -1;
        for (int v = 0 ; v < n ; ++v)
            if (! removed[v] && (best < 0 || degree[v] < degree[best]))
                best = v;
        removed[best] = true;
        removal.push_back(best);
        g.neighbourhood(best).for_each([&] (int w) { --degree[w]; });
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
}

namespace detail {

    class CliqueSearch
    {
    public:
        CliqueSearch(const BitGraph & original, const CliqueOptions & options) :
            _order(degeneracy_order(original)),
            _graph(original.size()),
            _options(options)
        {
            const int n = original.size();
            std::vector<int> position(n);
            for (int i = 0 ; i < n ; ++i)
                position[_order[i]] = i;
            for (int i = 0 ; i < n ; ++i)
                original.neighbourhood(_order[i]).for_each([&] (int w) {
                    _graph.row(i).set(position[w]);
                });

            for (int v : options.initial)
                _best.push_back(position[v]);

            for (auto & g : options.automorphisms) {
                std::vector<int> mapped(n);
                for (int i = 0 ; i < n ; ++i)
                    mapped[i] = position[g[_order[i]]];
                _group.push_back(std::move(mapped));
            }
        }

        auto run() -> CliqueResult
        {
            CliqueResult result;
            const int n = _graph.size();
            if (n == 0) {
                result.proven_optimal = true;
                return result;
            }

            BitSet all(n);
            for (int v = 0 ; v < n ; ++v)
                all.set(v);
            std::vector<int> current;
            int root_bound = n;
            std::vector<int> stabilizer(_group.size());
            for (std::size_t g = 0 ; g < _group.size() ; ++g)
                stabilizer[g] = int(g);
            expand(current, all, 0, root_bound, stabilizer);

            for (int v : _best)
                result.members.push_back(_order[v]);
            std::sort(result.members.begin(), result.members.end());
            result.nodes = _nodes;
            result.proven_optimal = ! _aborted;
            result.upper_bound = _aborted ? std::max(root_bound, int(_best.size())) : int(_best.size());
            return result;
        }

    private:
        auto colour(const BitSet & p, std::vector<int> & order, std::vector<int> & bounds) -> void
        {
            BitSet uncoloured = p;
            int colour = 0;
            while (! uncoloured.empty()) {
                ++colour;
                BitSet candidates = uncoloured;
                for (int v = candidates.first() ; v >= 0 ; v = candidates.first()) {
                    uncoloured.reset(v);
                    candidates.reset(v);
                    candidates.subtract(_graph.neighbourhood(v));
                    order.push_back(v);
                    bounds.push_back(colour);
                }
            }
        }

        auto timed_out() -> bool
        {
            if (_aborted)
                return true;
            if (_options.deadline && (_nodes & 0x3ff) == 0 && std::chrono::steady_clock::now() >= *_options.deadline)
                _aborted = true;
            return _aborted;
        }

        /// root_bound receives, at depth 0, the colour bound of the branch being explored.
        /// stabilizer lists the group elements fixing every vertex of current.
        auto expand(std::vector<int> & current, BitSet p, int depth, int & root_bound,
                const std::vector<int> & stabilizer) -> void
        {
            ++_nodes;
            if (timed_out())
                return;

            std::vector<int> order, bounds;
            colour(p, order, bounds);

            for (int i = int(order.size()) - 1 ; i >= 0 ; --i) {
                if (int(current.size()) + bounds[i] <= int(_best.size())) {
                    if (depth == 0)
                        root_bound = int(_best.size());
                    return;
                }
                if (depth == 0)
                    root_bound = bounds[i];

                int v = order[i];
                if (! p.test(v))
                    continue;

                current.push_back(v);
                BitSet next = p;
                next.intersect_with(_graph.neighbourhood(v));
                if (next.empty()) {
                    if (current.size() > _best.size())
                        _best = current;
                }
                else {
                    std::vector<int> fixing;
                    if (stabilizer.size() > 1)
                        for (int g : stabilizer)
                            if (_group[g][v] == v)
                                fixing.push_back(g);
                    expand(current, next, depth + 1, root_bound, fixing);
                }
                current.pop_back();

                if (_aborted)
                    return;
                p.reset(v);
                if (stabilizer.size() > 1)
                    for (int g : stabilizer)
                        p.reset(_group[g][v]);
            }
            if (depth == 0)
                root_bound = int(_best.size());
        }

        std::vector<int> _order;
        BitGraph _graph;
        std::vector<std::vector<int>> _group;
        const CliqueOptions & _options;
        std::vector<int> _best;
        std::uint64_t _nodes = 0;
        bool _aborted = false;
    };

}

inline auto max_clique(const BitGraph & graph, const CliqueOptions & options = {}) -> CliqueResult
{
    return detail::CliqueSearch(graph, options).run();
}

} // namespace stpfool
