#pragma once

/**
 * Machine checks of the O(n^2) counting argument on concrete fooling sets.
 *
 * For a node x and column k, Z(x, k) collects the rows i whose subset S_i is
 * connected in T_k and whose diagonal pair (S_i, T_i) has a witness with middle
 * node x. Every zero of column k lies in some Z(x, k); each Z(x, k) injects into
 * the edges of T_k, so it has at most n-1 rows and column k has at most
 * n(n-1) zeros. Everything is recomputed from f and the witness primitives;
 * none of the bounds are assumed.
 */

#include <stpfool/fooling.hpp>
#include <stpfool/witness.hpp>

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace stpfool {

struct ZSet
{
    Node x = 0;
    int k = 0;              ///< 0-based column
    std::vector<int> rows;  ///< 0-based rows, increasing
};

struct AuditViolation
{
    enum class Kind {
        z_bound,
        edge_not_in_tree,
        edge_not_witness,
        duplicate_edge,
        column_zeros,
        uncovered_zero,
        shared_witness,
    };

    Kind kind;
    std::string detail;
};

inline auto to_string(AuditViolation::Kind kind) -> std::string
{
    switch (kind) {
        case AuditViolation::Kind::z_bound:          return "z_bound";
        case AuditViolation::Kind::edge_not_in_tree: return "edge_not_in_tree";
        case AuditViolation::Kind::edge_not_witness: return "edge_not_witness";
        case AuditViolation::Kind::duplicate_edge:   return "duplicate_edge";
        case AuditViolation::Kind::column_zeros:     return "column_zeros";
        case AuditViolation::Kind::uncovered_zero:   return "uncovered_zero";
        case AuditViolation::Kind::shared_witness:   return "shared_witness";
    }
    return "unknown";
}

struct AuditReport
{
    int n = 0;
    int r = 0;
    int max_z_size = 0;
    int max_column_zeros = 0;
    /// z_sizes[x-1][k] = |Z(x, k)|; filled by the Z audit.
    std::vector<std::vector<int>> z_sizes;
    /// Zeros per column of H; filled by the column audit.
    std::vector<int> column_zeros;
    std::vector<AuditViolation> violations;

    auto ok() const -> bool { return violations.empty(); }
};

/// 2n(n-1) + 1: r(r-1)/2 <= #zeros of H <= r n(n-1) forces r - 1 <= 2n(n-1).
inline auto derived_size_bound(int n) -> int
{
    check_node_count(n);
    return 2 * n * (n - 1) + 1;
}

namespace detail {

    inline auto require_fooling_set(const FoolingSet & fs) -> void
    {
        if (! verify_fooling_set(fs).valid)
            throw ContractError("audits are only defined on valid fooling sets");
    }

    inline auto compute_z_unchecked(const FoolingSet & fs, Node x, int k) -> ZSet
    {
        ZSet z{x, k, {}};
        for (int i = 0 ; i < fs.size() ; ++i)
            if (is_connected_in(fs[k].t, fs[i].s) && ! witnesses_with_middle(fs[i].s, fs[i].t, x).empty())
                z.rows.push_back(i);
        return z;
    }

    inline auto label(const char * name, int index) -> std::string
    {
        return std::string(name) + "=" + std::to_string(index + 1);
    }

}

inline auto compute_z(const FoolingSet & fs, Node x, int k) -> ZSet
{
    detail::require_fooling_set(fs);
    check_node(fs.n(), x);
    if (k < 0 || k >= fs.size())
        throw InputError("column " + std::to_string(k) + " outside the fooling set");
    return detail::compute_z_unchecked(fs, x, k);
}

/**
 * |Z(x, k)| <= n-1 for all x, k, together with the injection behind it: for
 * each i in Z(x, k), tree_witness_edge(S_i, T_i, T_k, x) must be an edge of T_k
 * inside S_i carrying a witness of (S_i, T_i), and those edges must be
 * pairwise distinct.
 */
inline auto audit_z_bound(const FoolingSet & fs) -> AuditReport
{
    detail::require_fooling_set(fs);
    const int n = fs.n(), r = fs.size();
    AuditReport report;
    report.n = n;
    report.r = r;
    report.z_sizes.assign(n, std::vector<int>(r, 0));

    for (Node x = 1 ; x <= n ; ++x)
        for (int k = 0 ; k < r ; ++k) {
            auto z = detail::compute_z_unchecked(fs, x, k);
            const int size = int(z.rows.size());
            report.z_sizes[x - 1][k] = size;
            report.max_z_size = std::max(report.max_z_size, size);
            const std::string where = "x=" + std::to_string(x) + " " + detail::label("k", k);

            if (size > n - 1)
                report.violations.push_back({AuditViolation::Kind::z_bound,
                        where + " |Z|=" + std::to_string(size)});

            std::map<Edge, int> chosen;
            for (int i : z.rows) {
                Edge e = tree_witness_edge(fs[i].s, fs[i].t, fs[k].t, x);
                const std::string at = where + " " + detail::label("i", i) + " edge={" + std::to_string(e.u) + ","
                    + std::to_string(e.v) + "}";
                if (! fs[k].t.has_edge(e) || ! fs[i].s.contains(e.u) || ! fs[i].s.contains(e.v))
                    report.violations.push_back({AuditViolation::Kind::edge_not_in_tree, at});
                if (! is_witness(fs[i].s, fs[i].t, {e.u, x, e.v}))
                    report.violations.push_back({AuditViolation::Kind::edge_not_witness, at});
                if (auto [it, inserted] = chosen.emplace(e, i) ; ! inserted)
                    report.violations.push_back({AuditViolation::Kind::duplicate_edge,
                            at + " also chosen for " + detail::label("i", it->second)});
            }
        }
    return report;
}

/// Every column of H has at most n(n-1) zeros, and each zero (i, k) lies in some Z(x, k).
inline auto audit_column_zeros(const FoolingSet & fs) -> AuditReport
{
    detail::require_fooling_set(fs);
    const int n = fs.n(), r = fs.size();
    AuditReport report;
    report.n = n;
    report.r = r;
    auto h = build_h(fs);

    std::vector<std::vector<ZSet>> z(n + 1);
    for (Node x = 1 ; x <= n ; ++x)
        for (int k = 0 ; k < r ; ++k)
            z[x].push_back(detail::compute_z_unchecked(fs, x, k));

    for (int k = 0 ; k < r ; ++k) {
        const int zeros = h.column_zeros(k);
        report.column_zeros.push_back(zeros);
        report.max_column_zeros = std::max(report.max_column_zeros, zeros);
        if (zeros > n * (n - 1))
            report.violations.push_back({AuditViolation::Kind::column_zeros,
                    detail::label("k", k) + " zeros=" + std::to_string(zeros)});

        for (int i = 0 ; i < r ; ++i) {
            if (h(i, k) != 0)
                continue;
            bool covered = false;
            for (Node x = 1 ; x <= n && ! covered ; ++x)
                covered = std::binary_search(z[x][k].rows.begin(), z[x][k].rows.end(), i);
            if (! covered)
                report.violations.push_back({AuditViolation::Kind::uncovered_zero,
                        detail::label("i", i) + " " + detail::label("k", k)});
        }
    }
    return report;
}

/// True iff no triple (a, x, b) witnesses two distinct diagonal pairs.
inline auto audit_shared_witness(const FoolingSet & fs) -> bool
{
    detail::require_fooling_set(fs);
    std::set<Witness> seen;
    for (int i = 0 ; i < fs.size() ; ++i) {
        std::set<Witness> own;
        for (Node x = 1 ; x <= fs.n() ; ++x)
            for (auto & w : witnesses_with_middle(fs[i].s, fs[i].t, x).triples)
                if (w.a < w.b)
                    own.insert(w);
        for (auto & w : own)
            if (! seen.insert(w).second)
                return false;
    }
    return true;
}

/// All three audits merged into one report.
inline auto audit_fooling_set(const FoolingSet & fs) -> AuditReport
{
    auto report = audit_z_bound(fs);
    auto columns = audit_column_zeros(fs);
    report.column_zeros = std::move(columns.column_zeros);
    report.max_column_zeros = columns.max_column_zeros;
    report.violations.insert(report.violations.end(), columns.violations.begin(), columns.violations.end());
    if (! audit_shared_witness(fs))
        report.violations.push_back({AuditViolation::Kind::shared_witness,
                "a witness triple certifies two distinct diagonal pairs"});
    return report;
}

struct LemmaAuditReport
{
    int n = 0;
    bool sampled = false;
    std::uint64_t triangle_cases = 0;
    std::uint64_t triangle_violations = 0;
    std::uint64_t tree_witness_cases = 0;
    std::uint64_t tree_witness_violations = 0;
    /// First few offending cases, human readable.
    std::vector<std::string> examples;

    auto ok() const -> bool { return triangle_violations == 0 && tree_witness_violations == 0; }
};

namespace detail {

    inline constexpr std::size_t max_examples = 10;

    inline auto describe(const NodeSubset & s, const Tree & t) -> std::string
    {
        std::string out = "S={";
        for (Node v : s.members())
            out += (out.back() == '{' ? "" : ",") + std::to_string(v);
        out += "} T=[";
        for (auto & e : t.edges())
            out += (out.back() == '[' ? "" : ",") + ("{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        return out + "]";
    }

    inline auto triangle_case(LemmaAuditReport & report, const NodeSubset & s, const Tree & t, Node a, Node b, Node c, Node x) -> void
    {
        ++report.triangle_cases;
        if (! check_triangle(s, t, a, b, c, x)) {
            ++report.triangle_violations;
            if (report.examples.size() < max_examples)
                report.examples.push_back("triangle " + describe(s, t) + " a,b,c=" + std::to_string(a) + ","
                        + std::to_string(b) + "," + std::to_string(c) + " x=" + std::to_string(x));
        }
    }

    /// Caller guarantees the preconditions of tree_witness_edge.
    inline auto tree_witness_case(LemmaAuditReport & report, const NodeSubset & s, const Tree & t, const Tree & t_prime, Node x) -> void
    {
        ++report.tree_witness_cases;
        Edge e = tree_witness_edge(s, t, t_prime, x);
        bool sound = t_prime.has_edge(e) && s.contains(e.u) && s.contains(e.v) && is_witness(s, t, {e.u, x, e.v});
        if (! sound) {
            ++report.tree_witness_violations;
            if (report.examples.size() < max_examples)
                report.examples.push_back("tree-witness " + describe(s, t) + " T'=" + describe(s, t_prime)
                        + " x=" + std::to_string(x));
        }
    }

}

/**
 * The triangle property over every (S, T, {a,b,c} in S, x), and soundness of
 * tree_witness_edge over every (S, T, T', x) meeting its preconditions.
 */
inline auto audit_lemmas_exhaustive(int n) -> LemmaAuditReport
{
    check_node_count(n);
    LemmaAuditReport report;
    report.n = n;
    if (n < 3)
        return report;

    auto subsets = enumerate_subsets(n);
    auto trees = all_trees(n);
    for (auto & s : subsets) {
        auto members = s.members();
        std::vector<const Tree *> connected;
        for (auto & t : trees)
            if (is_connected_in(t, s))
                connected.push_back(&t);

        for (auto & t : trees)
            for (Node x = 1 ; x <= n ; ++x) {
                for (std::size_t i = 0 ; i < members.size() ; ++i)
                    for (std::size_t j = i + 1 ; j < members.size() ; ++j)
                        for (std::size_t l = j + 1 ; l < members.size() ; ++l)
                            detail::triangle_case(report, s, t, members[i], members[j], members[l], x);

                if (witnesses_with_middle(s, t, x).empty())
                    continue;
                for (auto * t_prime : connected)
                    detail::tree_witness_case(report, s, t, *t_prime, x);
            }
    }
    return report;
}

/// Random Prüfer code, hence a uniformly random labeled tree.
inline auto random_tree(int n, Rng & rng) -> Tree
{
    PruferSeq code{n, std::vector<Node>(std::max(0, n - 2))};
    for (auto & v : code.seq)
        v = Node(rng.below(std::uint64_t(n))) + 1;
    return prufer_decode(code);
}

/// Random subset of size 2..n-1 (size first, then members).
inline auto random_subset(int n, Rng & rng) -> NodeSubset
{
    int size = 2 + int(rng.below(std::uint64_t(n - 2)));
    std::vector<Node> nodes(n);
    std::iota(nodes.begin(), nodes.end(), 1);
    rng.shuffle(nodes);
    nodes.resize(size);
    return NodeSubset::from_nodes(n, nodes);
}

/**
 * Seeded sampling version of audit_lemmas_exhaustive for n too large to
 * enumerate. Each sample draws (S, T, T', x); the triangle property is checked
 * for every corner triple of S, and tree_witness_edge whenever its
 * preconditions hold.
 */
inline auto audit_lemmas_sampled(int n, std::uint64_t samples, std::uint64_t seed) -> LemmaAuditReport
{
    check_node_count(n);
    LemmaAuditReport report;
    report.n = n;
    report.sampled = true;
    if (n < 3)
        return report;

    Rng rng(seed);
    for (std::uint64_t sample = 0 ; sample < samples ; ++sample) {
        auto s = random_subset(n, rng);
        auto t = random_tree(n, rng);
        auto t_prime = random_tree(n, rng);
        Node x = Node(rng.below(std::uint64_t(n))) + 1;

        auto members = s.members();
        for (std::size_t i = 0 ; i < members.size() ; ++i)
            for (std::size_t j = i + 1 ; j < members.size() ; ++j)
                for (std::size_t l = j + 1 ; l < members.size() ; ++l)
                    detail::triangle_case(report, s, t, members[i], members[j], members[l], x);

        if (! witnesses_with_middle(s, t, x).empty() && is_connected_in(t_prime, s))
            detail::tree_witness_case(report, s, t, t_prime, x);
    }
    return report;
}

} // namespace stpfool
