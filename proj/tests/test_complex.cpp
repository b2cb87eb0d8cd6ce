#include <catch2/catch_amalgamated.hpp>

#include "ytc/complex.hpp"

using namespace ytc;

TEST_CASE("from_facets removes dominated faces and canonicalizes") {
    SimplicialComplex c = SimplicialComplex::from_facets({{1, 2}, {2}, {2, 3}});
    REQUIRE(c.is_proper());
    CHECK(c.facets() == std::vector<Face>{{1, 2}, {2, 3}});

    CHECK(SimplicialComplex::from_facets({}).is_void());
    CHECK(SimplicialComplex::from_facets({{}}).is_irrelevant());
    CHECK(SimplicialComplex::from_facets({{}, {}}).is_irrelevant());
    // the empty face is dominated by any nonempty facet
    CHECK(SimplicialComplex::from_facets({{}, {4}}).facets() == std::vector<Face>{{4}});
}

TEST_CASE("canonical facet order is size then lex") {
    SimplicialComplex c = SimplicialComplex::from_facets({{2, 3}, {5}, {1, 4}});
    CHECK(c.facets() == std::vector<Face>{{5}, {1, 4}, {2, 3}});
}

TEST_CASE("from_facets rejects labels beyond the 64-element universe") {
    CHECK_THROWS_AS(SimplicialComplex::from_facets({{64}}), CapacityError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({{-1}}), DomainError);
    CHECK_NOTHROW(SimplicialComplex::from_facets({{63}}));
}

TEST_CASE("link") {
    SimplicialComplex path = SimplicialComplex::from_facets({{1, 2}, {2, 3}});
    CHECK(link(path, Face{2}).facets() == std::vector<Face>{{1}, {3}});
    CHECK(link(path, Face{}) == path);

    SimplicialComplex tri = SimplicialComplex::from_facets({{1, 2, 3}});
    CHECK(link(tri, Face{1, 2, 3}).is_irrelevant());

    CHECK_THROWS_AS(link(path, Face{1, 3}), DomainError);
}

TEST_CASE("deletion") {
    SimplicialComplex path = SimplicialComplex::from_facets({{1, 2}, {2, 3}});
    CHECK(deletion(path, 2).facets() == std::vector<Face>{{1}, {3}});
    CHECK(deletion(SimplicialComplex::from_facets({{1, 2}}), 1).facets() ==
          std::vector<Face>{{2}});

    SimplicialComplex points = SimplicialComplex::from_facets({{1}, {2}});
    CHECK(deletion(deletion(points, 1), 2).is_irrelevant());

    CHECK_THROWS_AS(deletion(path, 7), DomainError);
}

TEST_CASE("star") {
    SimplicialComplex path = SimplicialComplex::from_facets({{1, 2}, {2, 3}});
    CHECK(star(path, 1).facets() == std::vector<Face>{{1, 2}});
    CHECK(star(path, 2) == path);
    CHECK(star(SimplicialComplex::from_facets({{1}, {2}}), 1).facets() ==
          std::vector<Face>{{1}});
}

TEST_CASE("suspension") {
    // Σ({∅}) = S^0
    SimplicialComplex s0 = suspension(SimplicialComplex::irrelevant_complex(), 8, 9);
    CHECK(s0.facets() == std::vector<Face>{{8}, {9}});

    // Σ(S^0) is a 4-cycle
    SimplicialComplex s1 = suspension(s0, 10, 11);
    CHECK(s1.facets() == std::vector<Face>{{8, 10}, {8, 11}, {9, 10}, {9, 11}});

    // suspension of a simplex
    SimplicialComplex edge = SimplicialComplex::from_facets({{1, 2}});
    CHECK(suspension(edge, 5, 6).facets() == std::vector<Face>{{1, 2, 5}, {1, 2, 6}});

    CHECK_THROWS_AS(suspension(SimplicialComplex::void_complex(), 1, 2), DomainError);
    CHECK_THROWS_AS(suspension(edge, 2, 5), DomainError);  // collision
    CHECK_THROWS_AS(suspension(edge, 5, 5), DomainError);
}

TEST_CASE("join basics") {
    SimplicialComplex a = SimplicialComplex::from_facets({{1}, {2}});
    SimplicialComplex b = SimplicialComplex::from_facets({{3}, {4}});
    CHECK(join(a, b).facets() ==
          std::vector<Face>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(join(SimplicialComplex::irrelevant_complex(), a) == a);
    CHECK_THROWS_AS(join(a, a), DomainError);
}

TEST_CASE("minimal nonfaces") {
    SimplicialComplex path = SimplicialComplex::from_facets({{1, 2}, {2, 3}});
    CHECK(minimal_nonfaces(path, interval_mask(1, 3)) == std::vector<Face>{{1, 3}});

    SimplicialComplex full = SimplicialComplex::from_facets({{1, 2, 3, 4}});
    CHECK(minimal_nonfaces(full, interval_mask(1, 4)).empty());

    // irrelevant complex over [n]: every singleton
    CHECK(minimal_nonfaces(SimplicialComplex::irrelevant_complex(), interval_mask(1, 3)) ==
          std::vector<Face>{{1}, {2}, {3}});

    // boundary of the 3-simplex: the unique minimal nonface is the universe
    SimplicialComplex boundary = SimplicialComplex::from_facets(
        {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(minimal_nonfaces(boundary, interval_mask(1, 4)) ==
          std::vector<Face>{{1, 2, 3, 4}});

    CHECK_THROWS_AS(minimal_nonfaces(SimplicialComplex::void_complex(), interval_mask(1, 2)),
                    DomainError);
}

TEST_CASE("alexander dual") {
    // complements of the minimal nonfaces become facets
    SimplicialComplex c = SimplicialComplex::from_facets({{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    REQUIRE(minimal_nonfaces(c, interval_mask(1, 4)) == std::vector<Face>{{1, 2}, {3, 4}});
    CHECK(alexander_dual(c, interval_mask(1, 4)).facets() ==
          std::vector<Face>{{1, 2}, {3, 4}});

    CHECK(alexander_dual(SimplicialComplex::from_facets({{1, 2, 3, 4}}), interval_mask(1, 4))
              .is_void());

    // dual of the boundary of the simplex is {∅}
    SimplicialComplex boundary = SimplicialComplex::from_facets(
        {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(alexander_dual(boundary, interval_mask(1, 4)).is_irrelevant());

    // involution
    SimplicialComplex path = SimplicialComplex::from_facets({{1, 2}, {2, 3}});
    CHECK(alexander_dual(alexander_dual(path, interval_mask(1, 3)), interval_mask(1, 3)) ==
          path);
}

TEST_CASE("induced subcomplex") {
    SimplicialComplex path = SimplicialComplex::from_facets({{1, 2}, {2, 3}});
    CHECK(induced_subcomplex(path, vertices_to_mask({1, 3})).facets() ==
          std::vector<Face>{{1}, {3}});

    SimplicialComplex tri = SimplicialComplex::from_facets({{1, 2, 3}});
    CHECK(induced_subcomplex(tri, vertices_to_mask({1, 2, 3})) == tri);
    CHECK(induced_subcomplex(SimplicialComplex::from_facets({{1, 2}}), 0).is_irrelevant());
    CHECK(induced_subcomplex(path, vertices_to_mask({7, 8})).is_irrelevant());
}

TEST_CASE("minimal transversals") {
    // edges of a triangle: minimal vertex covers are the three pairs
    std::vector<Mask> edges = {vertices_to_mask({1, 2}), vertices_to_mask({1, 3}),
                               vertices_to_mask({2, 3})};
    auto tr = minimal_transversals(edges);
    REQUIRE(tr.size() == 3);
    CHECK(tr[0] == vertices_to_mask({1, 2}));

    // an empty edge kills every transversal
    CHECK(minimal_transversals({vertices_to_mask({1}), Mask{0}}).empty());
    // no edges: the empty transversal
    CHECK(minimal_transversals({}) == std::vector<Mask>{0});
}

TEST_CASE("faces_by_dim counts") {
    SimplicialComplex tri = SimplicialComplex::from_facets({{1, 2, 3}});
    auto levels = tri.faces_by_dim();
    REQUIRE(levels.size() == 4);
    CHECK(levels[0].size() == 1);  // empty face
    CHECK(levels[1].size() == 3);
    CHECK(levels[2].size() == 3);
    CHECK(levels[3].size() == 1);

    CHECK(SimplicialComplex::void_complex().faces_by_dim().empty());
    CHECK(SimplicialComplex::irrelevant_complex().faces_by_dim().size() == 1);
}

TEST_CASE("dimension and purity") {
    CHECK(SimplicialComplex::void_complex().dim() == -2);
    CHECK(SimplicialComplex::irrelevant_complex().dim() == -1);
    CHECK(SimplicialComplex::from_facets({{1, 2}, {3}}).is_pure() == false);
    CHECK(SimplicialComplex::from_facets({{1, 2}, {2, 3}}).is_pure());
}
