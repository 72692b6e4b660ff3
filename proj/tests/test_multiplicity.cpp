#include "oracles.hpp"
#include "pfaffians/pfaffians.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pfaffians;

TEST_CASE("binomial path counts")
{
    CHECK(path_count({2, 5}, {2, 5}) == 1);
    CHECK(path_count({1, 2}, {2, 4}) == 3);
    CHECK(path_count({3, 4}, {2, 6}) == 0);

    // r(h,k) = C(h+k-a-1, h-1) for Q = (1,a), P = (h,k)
    for (int a = 2; a <= 5; ++a)
        for (int h = 1; h <= 4; ++h)
            for (int k = a; k <= a + 4; ++k)
                CHECK(path_count({1, a}, {h, k}) == binomial(h + k - a - 1, h - 1));
}

TEST_CASE("constrained path counts against DFS")
{
    CHECK(constrained_path_count({3, 4}, {3, 4}) == 1);
    CHECK(constrained_path_count({3, 4}, {5, 6}) == 2);
    CHECK(constrained_path_count({1, 6}, {5, 6}) == 1);

    for (int qi = 1; qi <= 7; ++qi)
        for (int qj = qi + 1; qj <= 8; ++qj)
            for (int pi = 1; pi <= 7; ++pi)
                for (int pj = pi + 1; pj <= 8; ++pj)
                    CHECK(constrained_path_count({qi, qj}, {pi, pj}) ==
                          oracles::dfs_path_count({qi, qj}, {pi, pj}));
}

TEST_CASE("path matrix determinants count disjoint families")
{
    CogeneratorSpec spec(IndexTuple{1, 3, 4, 6}, 6);
    RegionMap rm(spec);
    for (int h = 1; h <= rm.a - 1; ++h)
        for (int k = rm.a + 2 * rm.t - 3; k <= rm.b - 1; ++k) {
            LGVMatrix m(spec, h, k);
            std::vector<std::pair<LatticePoint, LatticePoint>> endpoints;
            endpoints.push_back({{rm.a, k}, {rm.n - 1, rm.n}});       // Q_{t-1} -> P_1
            endpoints.push_back({{h, rm.b}, {rm.n - 3, rm.n}});       // Q_t -> P_2
            CHECK(m.det() == oracles::dfs_disjoint_families(endpoints));
        }

    CogeneratorSpec tall(IndexTuple{1, 3, 4, 5, 6, 8}, 8); // t = 3
    RegionMap rt(tall);
    for (int h = 1; h <= rt.a - 1; ++h)
        for (int k = rt.a + 2 * rt.t - 3; k <= rt.b - 1; ++k) {
            LGVMatrix m(tall, h, k);
            std::vector<std::pair<LatticePoint, LatticePoint>> endpoints;
            endpoints.push_back({{rt.a, rt.a + 1}, {rt.n - 1, rt.n}}); // Q_1 -> P_1
            endpoints.push_back({{rt.a, k}, {rt.n - 3, rt.n}});        // Q_2 -> P_2
            endpoints.push_back({{h, rt.b}, {rt.n - 5, rt.n}});        // Q_3 -> P_3
            CHECK(m.det() == oracles::dfs_disjoint_families(endpoints));
        }
}

TEST_CASE("multiplicity of the classic 50752 instance")
{
    CHECK(multiplicity(CogeneratorSpec(IndexTuple{4, 8, 9, 12}, 15)) == 50752);
    CHECK(multiplicity(CogeneratorSpec(IndexTuple{1, 5, 6, 9}, 12)) == 50752);

    auto detail = multiplicity_detailed(CogeneratorSpec(IndexTuple{4, 8, 9, 12}, 15));
    CHECK(detail.reduced.alpha == IndexTuple{1, 5, 6, 9});
    CHECK(detail.reduced.n == 12);
    CHECK(detail.terms.size() == 12); // h = 1..4, k = 6..8
    Integer sum = 0;
    for (auto& t : detail.terms)
        sum += t.contribution;
    CHECK(sum == detail.value);
}

TEST_CASE("multiplicity equals the facet count")
{
    // derived via the exhaustive maximal-face oracle
    CogeneratorSpec spec(IndexTuple{1, 3, 4, 6}, 6);
    CHECK(multiplicity(spec) == 7);
    CHECK(oracles::brute_force_complex(spec).maximal_count == 7);
    CHECK(enumerate_facets(spec).size() == 7);
}

TEST_CASE("t = 1 multiplicity is the classical path count")
{
    // alpha = [1,2], n = 5 cogenerates the ideal of all 4-Pfaffians; the
    // quotient is the cone over the Pluecker quadric of Gr(2,5), degree 5
    CogeneratorSpec spec(IndexTuple{1, 2}, 5);
    CHECK(multiplicity(spec) == 5);
    CHECK(Integer(enumerate_facets(spec).size()) == 5);

    CogeneratorSpec other(IndexTuple{1, 3}, 5);
    CHECK(multiplicity(other) == constrained_path_count({1, 3}, {4, 5}));
    CHECK(Integer(enumerate_facets(other).size()) == multiplicity(other));
}

TEST_CASE("multiplicity is invariant under reduction")
{
    for (auto alpha : {IndexTuple{2, 4, 5, 7}, IndexTuple{3, 5, 6, 8}, IndexTuple{2, 3},
                       IndexTuple{4, 6, 7, 9}}) {
        CogeneratorSpec spec(alpha, alpha.idx.back() + 2);
        if (!is_g_pfaffian(alpha))
            continue;
        CHECK(multiplicity(spec) == multiplicity(reduce_cogenerator(spec)));
    }
}

TEST_CASE("multiplicity rejects non-G cogenerators")
{
    CHECK_THROWS_AS(multiplicity(CogeneratorSpec(IndexTuple{1, 2, 4, 5}, 6)),
                    std::invalid_argument);
}
