#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polymut/mutation.hpp"

using namespace polymut;

namespace {

RationalPolytope from_int_vertices(size_t ambient, const std::vector<IntVec>& pts) {
    std::vector<RatVec> q;
    for (const auto& p : pts) q.push_back(to_rat(p));
    return RationalPolytope::from_vertices(ambient, q);
}

// the running example: w = (0,-1), F the unit segment in its perp
MutationDatum example_datum() {
    return make_datum({0, -1}, from_int_vertices(2, {{0, 0}, {1, 0}}));
}

RationalPolytope example_p() {
    return from_int_vertices(2, {{1, 1}, {0, 1}, {-1, -1}, {0, -1}});
}

}  // namespace

TEST_CASE("datum preconditions") {
    CHECK_THROWS_AS(make_datum({0, 2}, from_int_vertices(2, {{1, 0}})),
                    std::invalid_argument);  // w not primitive
    CHECK_THROWS_AS(make_datum({0, 0}, from_int_vertices(2, {{1, 0}})),
                    std::invalid_argument);  // w zero
    CHECK_THROWS_AS(make_datum({0, -1}, from_int_vertices(2, {{1, 1}})),
                    std::invalid_argument);  // F not in w-perp
    CHECK_THROWS_AS(
        make_datum({0, -1}, RationalPolytope::from_vertices(2, {{Rat(1) / 2, Rat(0)}})),
        std::invalid_argument);  // F not a lattice polytope
}

TEST_CASE("phi on points") {
    MutationDatum d = example_datum();
    // min over V(F) of <u,v> is min(0, u_x)
    CHECK(phi_point(d, RatVec{2, -1}) == RatVec{2, -1});
    CHECK(phi_point(d, RatVec{-2, 1}) == RatVec{-2, -1});
    CHECK(phi_point(d, RatVec{Rat(-1) / 2, 1}) == RatVec{Rat(-1) / 2, Rat(1) / 2});
    // inverse really inverts, also off the lattice
    for (const RatVec& u : {RatVec{3, 7}, RatVec{-5, 2}, RatVec{Rat(-1) / 3, Rat(2) / 5}})
        CHECK(phi_inverse(d, phi_point(d, u)) == u);
}

TEST_CASE("mutation of the running example") {
    MutationDatum d = example_datum();
    RationalPolytope p = example_p();

    auto r = mutate(d, p);
    REQUIRE(std::holds_alternative<RationalPolytope>(r));
    const auto& mut = std::get<RationalPolytope>(r);
    CHECK(mut == from_int_vertices(2, {{0, 1}, {-1, -1}, {1, -1}}));

    RationalPolytope dual = polar(p);
    CHECK(dual == from_int_vertices(2, {{0, -1}, {2, -1}, {0, 1}, {-2, 1}}));

    auto img = phi_polytope(d, dual);
    REQUIRE(std::holds_alternative<RationalPolytope>(img));
    CHECK(std::get<RationalPolytope>(img) == polar(mut));
    CHECK(polar(mut) == from_int_vertices(2, {{0, 1}, {-2, -1}, {2, -1}}));
    CHECK(duality_holds(d, p));
}

TEST_CASE("not well defined comes with a witness") {
    // same polytope, but F twice as long: the level -1 vertex cannot be
    // recovered from the eroded slice
    MutationDatum d = make_datum({0, -1}, from_int_vertices(2, {{0, 0}, {2, 0}}));
    auto r = mutate(d, example_p());
    REQUIRE(std::holds_alternative<NotWellDefined>(r));
    const auto& bad = std::get<NotWellDefined>(r);
    CHECK(bad.vertex == RatVec{0, 1});
    CHECK(bad.level == -1);
}

TEST_CASE("mutation needs a lattice polytope") {
    MutationDatum d = example_datum();
    RationalPolytope half =
        RationalPolytope::from_vertices(2, {{Rat(1) / 2, Rat(1)}, {Rat(0), Rat(0)}, {Rat(1), Rat(0)}});
    CHECK_THROWS_AS(mutate(d, half), std::invalid_argument);
}

TEST_CASE("nonconvex phi image is detected with measures") {
    // the symmetric box maps to a nonconvex union: its polar mutation fails
    MutationDatum d = example_datum();
    RationalPolytope box = from_int_vertices(2, {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});

    auto img = phi_polytope(d, box);
    REQUIRE(std::holds_alternative<NonConvexImage>(img));
    const auto& defect = std::get<NonConvexImage>(img);
    CHECK(defect.hull_volume > defect.piece_volume_sum);
    CHECK(defect.hull.contains(RatVec{0, 0}));

    // and the vertex-side mutation of the polar breaks in the same direction
    auto r = mutate(d, polar(box));
    CHECK(std::holds_alternative<NotWellDefined>(r));
}

TEST_CASE("g_slice erodes to the lattice hull") {
    MutationDatum d = example_datum();
    RationalPolytope p = example_p();
    // level -1 of the example: single point (0,1)
    auto g = g_slice(d, p, Int(-1));
    REQUIRE(g.has_value());
    CHECK(g->vertices() == std::vector<RatVec>{{0, 1}});
    // below the polytope there is nothing to erode
    CHECK(!g_slice(d, p, Int(-2)).has_value());
}

TEST_CASE("identity factor leaves everything fixed") {
    MutationDatum d = make_datum({0, -1}, from_int_vertices(2, {{0, 0}}));
    RationalPolytope p = example_p();
    auto r = mutate(d, p);
    REQUIRE(std::holds_alternative<RationalPolytope>(r));
    CHECK(std::get<RationalPolytope>(r) == p);
    auto img = phi_polytope(d, polar(p));
    REQUIRE(std::holds_alternative<RationalPolytope>(img));
    CHECK(std::get<RationalPolytope>(img) == polar(p));
}

TEST_CASE("mutation preserves the dual ehrhart counts") {
    MutationDatum d = example_datum();
    RationalPolytope p = example_p();
    auto mut = std::get<RationalPolytope>(mutate(d, p));
    CHECK(ehrhart_counts(polar(p), 4) == ehrhart_counts(polar(mut), 4));
    // while its own counts are merely coincidentally equal here
    CHECK(lattice_points(p).size() == 5);
    CHECK(lattice_points(mut).size() == 5);
}

TEST_CASE("traces compose translations and maps") {
    MutationDatum d = example_datum();
    RationalPolytope dual = polar(example_p());

    // map first, then shift the image away; shifting first would break the
    // convexity that phi only guarantees for duals anchored at the origin
    MutationTrace t;
    t.steps.push_back({std::nullopt, d});
    t.steps.push_back({RatVec{1, 0}, std::nullopt});
    auto r = apply_trace(t, dual);
    REQUIRE(std::holds_alternative<RationalPolytope>(r));
    auto manual = phi_polytope(d, dual);
    CHECK(std::get<RationalPolytope>(r) ==
          translate(std::get<RationalPolytope>(manual), RatVec{1, 0}));

    // a failing step reports its index and the defect
    RationalPolytope box = from_int_vertices(2, {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    MutationTrace bad;
    bad.steps.push_back({std::nullopt, d});
    auto f = apply_trace(bad, box);
    REQUIRE(std::holds_alternative<TraceFailure>(f));
    CHECK(std::get<TraceFailure>(f).step == 0);
}
