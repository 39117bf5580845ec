#pragma once

/**
 * JSON forms of the domain objects. Trees are arrays of 2-arrays, subsets are
 * sorted integer arrays, witnesses are [a, x, b]. Row and column indices in
 * reports are 1-based, matching the usual H(i, j) numbering.
 */

#include <stpfool/audit.hpp>
#include <stpfool/fooling.hpp>
#include <stpfool/witness.hpp>

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace stpfool {

using Json = nlohmann::ordered_json;

/// Well-formed JSON that does not have the expected shape.
class FormatError : public std::runtime_error
{
public:
    explicit FormatError(const std::string & what) : std::runtime_error(what) {}
};

inline auto to_json(const Tree & t) -> Json
{
    Json out = Json::array();
    for (auto & e : t.edges())
        out.push_back({e.u, e.v});
    return out;
}

inline auto to_json(const NodeSubset & s) -> Json
{
    return Json(s.members());
}

inline auto to_json(const Witness & w) -> Json
{
    return Json::array({w.a, w.x, w.b});
}

inline auto to_json(const FoolingSet & fs) -> Json
{
    Json pairs = Json::array();
    for (auto & p : fs.pairs())
        pairs.push_back({{"S", to_json(p.s)}, {"T", to_json(p.t)}});
    return {{"n", fs.n()}, {"pairs", std::move(pairs)}};
}

inline auto to_json(const VerificationReport & report) -> Json
{
    Json violations = Json::array();
    for (auto & v : report.violations) {
        if (v.kind == FoolingViolation::Kind::diagonal)
            violations.push_back({{"kind", "diagonal"}, {"pair", v.i + 1}});
        else
            violations.push_back({{"kind", "cross"}, {"pairs", {v.i + 1, v.j + 1}}});
    }
    return {{"valid", report.valid}, {"violations", std::move(violations)}};
}

inline auto to_json(const HMatrix & h) -> Json
{
    return Json(h.rows());
}

inline auto to_json(const AuditReport & report) -> Json
{
    Json violations = Json::array();
    for (auto & v : report.violations)
        violations.push_back({{"kind", to_string(v.kind)}, {"detail", v.detail}});
    return {
        {"n", report.n},
        {"r", report.r},
        {"max_z_size", report.max_z_size},
        {"z_bound", report.n - 1},
        {"max_column_zeros", report.max_column_zeros},
        {"column_zero_bound", report.n * (report.n - 1)},
        {"z_sizes", report.z_sizes},
        {"column_zeros", report.column_zeros},
        {"violations", std::move(violations)},
    };
}

inline auto to_json(const LemmaAuditReport & report) -> Json
{
    return {
        {"n", report.n},
        {"mode", report.sampled ? "sampled" : "exhaustive"},
        {"triangle_cases", report.triangle_cases},
        {"triangle_violations", report.triangle_violations},
        {"tree_witness_cases", report.tree_witness_cases},
        {"tree_witness_violations", report.tree_witness_violations},
        {"violation_examples", report.examples},
    };
}

/// SearchResult; wall time only when asked, so repeated runs stay byte-identical.
inline auto to_json(const SearchResult & result, bool include_wall_time = false) -> Json
{
    Json out = to_json(result.best);
    out["size"] = result.size;
    out["proven_optimal"] = result.proven_optimal;
    out["nodes_explored"] = result.nodes_explored;
    if (result.upper_bound)
        out["upper_bound"] = *result.upper_bound;
    if (include_wall_time)
        out["wall_time_ms"] = result.wall_time.count();
    return out;
}

namespace detail {

    template <typename F>
    auto reshape_errors(F && f)
    {
        try {
            return f();
        }
        catch (const nlohmann::json::type_error & e) {
            throw FormatError(e.what());
        }
        catch (const nlohmann::json::out_of_range & e) {
            throw FormatError(e.what());
        }
    }

}

inline auto tree_from_json(int n, const Json & j) -> Tree
{
    return detail::reshape_errors([&] {
        if (! j.is_array())
            throw FormatError("tree must be an array of edges");
        std::vector<Edge> edges;
        for (auto & e : j) {
            if (! e.is_array() || e.size() != 2)
                throw FormatError("edge must be a 2-array");
            edges.emplace_back(e.at(0).get<Node>(), e.at(1).get<Node>());
        }
        return Tree(n, std::move(edges));
    });
}

inline auto subset_from_json(int n, const Json & j) -> NodeSubset
{
    return detail::reshape_errors([&] {
        if (! j.is_array())
            throw FormatError("subset must be an integer array");
        return NodeSubset::from_nodes(n, j.get<std::vector<Node>>());
    });
}

inline auto fooling_set_from_json(const Json & j) -> FoolingSet
{
    return detail::reshape_errors([&] {
        if (! j.is_object())
            throw FormatError("fooling set must be an object with \"n\" and \"pairs\"");
        const int n = j.at("n").get<int>();
        check_node_count(n);
        FoolingSet fs(n);
        for (auto & p : j.at("pairs"))
            fs.push_back({subset_from_json(n, p.at("S")), tree_from_json(n, p.at("T"))});
        return fs;
    });
}

} // namespace stpfool
