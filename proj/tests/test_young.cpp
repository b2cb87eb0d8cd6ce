#include <catch2/catch_amalgamated.hpp>

#include "ytc/young.hpp"

using namespace ytc;

TEST_CASE("partition parsing") {
    CHECK(Partition::parse("5,4,2").parts() == std::vector<int>{5, 4, 2});
    CHECK(Partition::parse("7").parts() == std::vector<int>{7});
    CHECK_THROWS_WITH(Partition::parse("5,6,2"),
                      Catch::Matchers::ContainsSubstring("part 2"));
    CHECK_THROWS_WITH(Partition::parse("3,x,1"),
                      Catch::Matchers::ContainsSubstring("part 2"));
    CHECK_THROWS_AS(Partition::parse(""), DomainError);
    // zero tail is trimmed at construction
    CHECK(Partition({3, 2, 0, 0}).parts() == std::vector<int>{3, 2});
    CHECK(Partition({0, 0}).empty_shape());
}

TEST_CASE("young filling matches the running example") {
    // (5,4,2) with t = 3: rows 7..11 / 4..7 / 1..2 from the top
    auto rows = young_filling(Partition({5, 4, 2}), 3);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<int>{7, 8, 9, 10, 11});
    CHECK(rows[1] == std::vector<int>{4, 5, 6, 7});
    CHECK(rows[2] == std::vector<int>{1, 2});

    // entry 7 labels two cells but is a single vertex; column 4 holds {7, 10}
    auto cols = young_column_candidates(Partition({5, 4, 2}), 3);
    CHECK(cols[3] == std::vector<int>{7, 10});
}

TEST_CASE("young complex of (5,4,2) with t=3") {
    SimplicialComplex c = young_complex(Partition({5, 4, 2}), 3);
    const std::vector<Face> expected = {
        {1, 2, 6, 7, 11}, {1, 2, 6, 10, 11}, {1, 2, 9, 10, 11}, {1, 5, 6, 7, 11},
        {1, 5, 6, 10, 11}, {1, 5, 9, 10, 11}, {1, 8, 9, 10, 11}, {4, 5, 6, 7, 11},
        {4, 5, 6, 10, 11}, {4, 5, 9, 10, 11}, {4, 8, 9, 10, 11}, {7, 8, 9, 10, 11}};
    CHECK(c.facets() == expected);
    CHECK(c.is_pure());
    CHECK(c.dim() == 4);
}

TEST_CASE("young complex degenerate shapes") {
    CHECK(young_complex(Partition({2}), 1).facets() == std::vector<Face>{{1, 2}});
    // (1,1,1) with t=2: three isolated points 1, 3, 5
    CHECK(young_complex(Partition({1, 1, 1}), 2).facets() ==
          std::vector<Face>{{1}, {3}, {5}});
    CHECK(young_complex(Partition(), 4).is_irrelevant());
}

TEST_CASE("cone vertex when the top row is strictly longest") {
    // λ1 > λ2: the top-right entry (r-1)t + λ1 lies in every facet
    Partition lambda({5, 4, 2});
    SimplicialComplex c = young_complex(lambda, 3);
    int apex = 2 * 3 + 5;
    for (Mask f : c.facet_masks()) CHECK(subset(bit(apex), f));
}

TEST_CASE("order complex presentation") {
    CHECK(order_complex_presentation(Partition({3, 2}), 3) ==
          young_complex(Partition({3, 2}), 3));
    CHECK(order_complex_presentation(Partition({2}), 1).facets() ==
          std::vector<Face>{{1, 2}});
    // two incomparable singleton columns
    CHECK(order_complex_presentation(Partition({1, 1}), 5).facets() ==
          std::vector<Face>{{1}, {6}});
    CHECK_THROWS_AS(order_complex_presentation(Partition({5, 4, 2}), 3), DomainError);
}

TEST_CASE("capacity bound on diagram entries") {
    // (r-1)t + λ1 = 63 is fine, 64 is not
    CHECK_NOTHROW(young_complex(Partition(std::vector<int>(21, 3)), 3));
    CHECK_THROWS_AS(young_complex(Partition(std::vector<int>(22, 1)), 3), CapacityError);
}
