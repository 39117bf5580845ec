#include <stpfool/audit.hpp>

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace stpfool;
using namespace testing;

namespace
{
    auto valid_pair_of_stars() -> FoolingSet
    {
        return FoolingSet(4, {{subset(4, {1, 2}), star(4, 4)}, {subset(4, {3, 4}), star(4, 1)}});
    }

    auto require_clean(const FoolingSet & fs) -> void
    {
        auto report = audit_fooling_set(fs);
        INFO("n=" << fs.n() << " r=" << fs.size());
        for (auto & v : report.violations)
            INFO(to_string(v.kind) << ": " << v.detail);
        REQUIRE(report.ok());
        REQUIRE(report.max_z_size <= fs.n() - 1);
        REQUIRE(report.max_column_zeros <= fs.n() * (fs.n() - 1));
    }
}

TEST_CASE("compute_z examples")
{
    auto fs = valid_pair_of_stars();
    // rows and columns are 0-based here: k=1 is the second column
    CHECK(compute_z(fs, 4, 1).rows == std::vector<int>{0});
    CHECK(compute_z(fs, 1, 0).rows == std::vector<int>{1});
    CHECK(compute_z(fs, 2, 0).rows.empty());
    CHECK(compute_z(fs, 2, 1).rows.empty());

    CHECK_THROWS_AS(compute_z(fs, 5, 0), InputError);
    CHECK_THROWS_AS(compute_z(fs, 1, 2), InputError);
}

TEST_CASE("audits refuse lists that are not fooling sets")
{
    FoolingSet shared(4, {{subset(4, {1, 2}), star(4, 4)}, {subset(4, {1, 3}), star(4, 4)}});
    CHECK_THROWS_AS(compute_z(shared, 4, 0), ContractError);
    CHECK_THROWS_AS(audit_z_bound(shared), ContractError);
    CHECK_THROWS_AS(audit_column_zeros(shared), ContractError);
    CHECK_THROWS_AS(audit_shared_witness(shared), ContractError);
}

TEST_CASE("audits of the two-star fooling set")
{
    auto fs = valid_pair_of_stars();

    auto z = audit_z_bound(fs);
    CHECK(z.ok());
    CHECK(z.max_z_size == 1);
    CHECK(z.z_sizes[3][1] == 1);
    CHECK(z.z_sizes[0][0] == 1);

    auto columns = audit_column_zeros(fs);
    CHECK(columns.ok());
    CHECK(columns.column_zeros == std::vector<int>{1, 1});
    CHECK(columns.max_column_zeros == 1);

    CHECK(audit_shared_witness(fs));

    auto all = audit_fooling_set(fs);
    CHECK(all.ok());
    CHECK(all.max_z_size == 1);
    CHECK(all.max_column_zeros == 1);
}

TEST_CASE("audits of a single pair")
{
    FoolingSet single(5, {{subset(5, {1, 3}), path_tree(5)}});
    auto report = audit_fooling_set(single);
    CHECK(report.ok());
    CHECK(report.max_z_size <= 1);
    CHECK(report.column_zeros == std::vector<int>{0});
    CHECK(audit_shared_witness(single));
}

TEST_CASE("derived size bound")
{
    CHECK(derived_size_bound(3) == 13);
    CHECK(derived_size_bound(4) == 25);
    CHECK(derived_size_bound(5) == 41);
}

TEST_CASE("search outputs and random maximal cliques pass every audit")
{
    for (int n = 3 ; n <= 4 ; ++n) {
        auto exact = search_max_fooling_set(n, {});
        require_clean(exact.best);
        CHECK(exact.size <= derived_size_bound(n));

        CandidateSpace space(n);
        for (std::uint64_t seed = 0 ; seed < 200 ; ++seed)
            require_clean(space.to_fooling_set(random_maximal_clique(space, seed)));
    }

    CandidateSpace five(5);
    for (std::uint64_t seed = 0 ; seed < 20 ; ++seed)
        require_clean(five.to_fooling_set(random_maximal_clique(five, seed)));
}

TEST_CASE("every zero of H is covered by some Z set")
{
    CandidateSpace space(4);
    for (std::uint64_t seed = 0 ; seed < 50 ; ++seed) {
        auto fs = space.to_fooling_set(random_maximal_clique(space, seed));
        auto h = build_h(fs);
        for (int k = 0 ; k < fs.size() ; ++k)
            for (int i = 0 ; i < fs.size() ; ++i) {
                if (h(i, k) != 0)
                    continue;
                bool covered = false;
                for (Node x = 1 ; x <= 4 ; ++x) {
                    auto rows = compute_z(fs, x, k).rows;
                    covered = covered || std::find(rows.begin(), rows.end(), i) != rows.end();
                }
                REQUIRE(covered);
            }
    }
}

TEST_CASE("exhaustive lemma audits at n <= 4")
{
    for (int n = 2 ; n <= 4 ; ++n) {
        auto report = audit_lemmas_exhaustive(n);
        CHECK(report.ok());
        CHECK(report.examples.empty());
        CHECK_FALSE(report.sampled);
        if (n >= 3)
            CHECK(report.tree_witness_cases > 0);
        if (n >= 4)
            CHECK(report.triangle_cases > 0);
    }

    // a triangle needs |S| >= 3, and proper subsets of [3] have two members
    CHECK(audit_lemmas_exhaustive(3).triangle_cases == 0);
}

TEST_CASE("sampled lemma audit is reproducible")
{
    auto a = audit_lemmas_sampled(6, 2000, 11);
    auto b = audit_lemmas_sampled(6, 2000, 11);
    CHECK(a.ok());
    CHECK(a.sampled);
    CHECK(a.triangle_cases == b.triangle_cases);
    CHECK(a.tree_witness_cases == b.tree_witness_cases);
    CHECK(a.triangle_cases > 0);
}
