#include <catch2/catch_amalgamated.hpp>

#include "ytc/homology.hpp"
#include "ytc/pathideal.hpp"

using namespace ytc;

TEST_CASE("squarefree power generators") {
    // n=6, t=2, k=3: a single 3-matching covering everything
    auto gens = squarefree_power_generator_supports({6, 2, 3});
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == Face{1, 2, 3, 4, 5, 6});

    CHECK(squarefree_power_generators({9, 2, 3}).size() == 20);
    CHECK(squarefree_power_generators({3, 2, 2}).empty());  // k > floor(3/2)
    CHECK_THROWS_AS(squarefree_power_generators({5, 2, 0}), DomainError);

    // every support has kt vertices and splits into t-blocks
    for (Mask g : squarefree_power_generators({9, 2, 3})) CHECK(popcount(g) == 6);
}

TEST_CASE("matching numbers") {
    CHECK(matching_numbers(9, 2) == std::pair<int, int>{4, 4});
    CHECK(matching_numbers(12, 4) == std::pair<int, int>{3, 2});
    CHECK(matching_numbers(5, 5) == std::pair<int, int>{1, 0});
    CHECK_THROWS_AS(matching_numbers(3, 4), DomainError);
}

TEST_CASE("stanley-reisner complex") {
    CHECK(stanley_reisner_complex({2, 2, 1}).facets() == std::vector<Face>{{1}, {2}});

    // one generator x1 x2 x3 x4: the boundary of the 3-simplex
    SimplicialComplex boundary = stanley_reisner_complex({4, 2, 2});
    CHECK(boundary.facets() ==
          std::vector<Face>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});

    // zero ideal: the full simplex
    CHECK(stanley_reisner_complex({3, 2, 2}).facets() == std::vector<Face>{{1, 2, 3}});

    // the faces are exactly the subsets containing no generator support
    SimplicialComplex sr = stanley_reisner_complex({5, 2, 1});
    auto gens = squarefree_power_generators({5, 2, 1});
    for (Mask s = 0; s < (Mask{1} << 5); ++s) {
        Mask face = s << 1;  // vertices 1..5
        bool contains_gen = false;
        for (Mask g : gens) contains_gen = contains_gen || subset(g, face);
        CHECK(sr.contains(face) == !contains_gen);
    }
}

TEST_CASE("dual complex by parameters") {
    CHECK(dual_complex({5, 2, 3}).is_void());        // n < kt
    CHECK(dual_complex({6, 2, 3}).is_irrelevant());  // principal ideal
    CHECK(dual_complex({9, 2, 3}) == young_complex(rectangle_partition(3, 4), 2));
    CHECK(dual_complex({4, 3, 0}).facets() == std::vector<Face>{{1, 2, 3, 4}});

    // both routes agree on a spread of instances
    for (int n = 2; n <= 9; ++n)
        for (int t = 1; t <= 3; ++t)
            for (int k = 1; k <= n / t; ++k)
                CHECK(dual_complex({n, t, k}) == dual_complex_via_alexander({n, t, k}));
}

TEST_CASE("dual complex vertex labels live inside [n]") {
    SimplicialComplex d = dual_complex({9, 2, 3});
    CHECK(subset(d.vertex_mask(), interval_mask(1, 9)));
    CHECK(d.universe() == interval_mask(1, 9));
}

TEST_CASE("krull height oracle") {
    KrullResult r = krull_height_oracle({4, 2, 2});
    CHECK(r.height == 1);
    CHECK(r.dim == 3);

    CHECK(krull_height_oracle({15, 5, 3}).dim == 14);

    KrullResult principal = krull_height_oracle({5, 5, 1});
    CHECK(principal.height == 1);
    CHECK(principal.dim == 4);

    CHECK_THROWS_AS(krull_height_oracle({3, 2, 2}), DomainError);  // k > floor(n/t)
    CHECK_THROWS_AS(krull_height_oracle({21, 2, 1}), CapacityError);
}

TEST_CASE("generator window") {
    // nonzero power exactly for 1 <= k <= floor(n/t)
    for (int n = 2; n <= 10; ++n)
        for (int t = 1; t <= 4 && t <= n; ++t)
            for (int k = 1; k <= n; ++k)
                CHECK(!squarefree_power_generators({n, t, k}).empty() == (k <= n / t));
}
