#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "toruscolor/alon_tarsi.hpp"
#include "toruscolor/errors.hpp"

using namespace toruscolor;
namespace fx = toruscolor::fixtures;

namespace {

Orientation orient(int n, std::vector<std::pair<int, int>> arcs) {
    Graph g(n);
    for (auto [u, v] : arcs) g.add_edge(u, v);
    return Orientation(std::move(g), std::move(arcs));
}

} // namespace

TEST_CASE("orientation wraps and validates arcs") {
    Orientation d = orient(3, {{0, 1}, {1, 2}});
    CHECK(d.out_degree(0) == 1);
    CHECK(d.out_degree(2) == 0);
    CHECK(d.max_out_degree() == 1);
    Graph p3 = fx::path_graph(3);
    CHECK_THROWS_AS(Orientation(p3, {{0, 1}}), input_error);                  // edge 1-2 uncovered
    CHECK_THROWS_AS(Orientation(p3, {{0, 1}, {1, 2}, {2, 1}}), input_error);  // doubled edge
    CHECK_THROWS_AS(Orientation(p3, {{0, 1}, {0, 2}}), input_error);          // 0-2 not an edge
}

TEST_CASE("census on frozen micro instances") {
    Orientation acyclic = orient(3, {{0, 1}, {0, 2}, {1, 2}});
    DiffResult a = eulerian_census(acyclic);
    CHECK(a.ee == 1);
    CHECK(a.oe == 0);
    CHECK(a.diff == 1);

    Orientation tri = orient(3, {{0, 1}, {1, 2}, {2, 0}});
    DiffResult t = eulerian_census(tri);
    CHECK(t.ee == 1);
    CHECK(t.oe == 1);
    CHECK(t.diff == 0);

    Orientation two_tri = orient(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    DiffResult tt = eulerian_census(two_tri);
    CHECK(tt.ee == 2);
    CHECK(tt.oe == 2);
    CHECK(tt.diff == 0);

    Orientation c4 = orient(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(eulerian_census(c4).diff == 2);

    CHECK(is_at_orientation(acyclic));
    CHECK(!is_at_orientation(tri));
    CHECK(!is_at_orientation(two_tri));
    CHECK(is_at_orientation(c4));
}

TEST_CASE("census matches the polynomial coefficient with sign") {
    std::mt19937 rng(20240815);
    for (int trial = 0; trial < 120; ++trial) {
        Orientation d = oracles::random_small_orientation(rng, 10);
        DiffResult res = eulerian_census(d);
        CHECK(res.diff == res.ee - res.oe);
        CHECK(res.diff == oracles::polynomial_diff(d));
        DiffResult plain = oracles::census_by_subsets(d);
        CHECK(res.ee == plain.ee);
        CHECK(res.oe == plain.oe);
    }
}

TEST_CASE("alon tarsi numbers of named graphs") {
    CHECK(alon_tarsi_number(fx::cycle_graph(4)) == 2);
    CHECK(alon_tarsi_number(fx::cycle_graph(5)) == 3);
    CHECK(alon_tarsi_number(fx::complete_graph(4)) == 4);
    CHECK(alon_tarsi_number(fx::path_graph(4)) == 2);

    auto [k, d] = alon_tarsi_number_witness(fx::cycle_graph(5));
    CHECK(k == 3);
    CHECK(d.max_out_degree() <= 2);
    CHECK(is_at_orientation(d));
    CHECK_THROWS_AS(alon_tarsi_number(fx::complete_graph(7)), bound_exceeded);
}

TEST_CASE("one way cut lemma") {
    // Both sides empty of x2 vertices: trivially consistent.
    Orientation acyclic = orient(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(lemma_L_check(acyclic, {0, 1, 2}, {}));

    // Two triangles joined one way: the whole and the parts are all non-AT.
    Orientation bridge = orient(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                                    {0, 3}, {1, 4}});
    CHECK(!is_at_orientation(bridge));
    CHECK(lemma_L_check(bridge, {0, 1, 2}, {3, 4, 5}));

    // Acyclic side feeding a directed 4-cycle: whole and parts are all AT.
    Orientation feed = orient(7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 3},
                                  {2, 3}, {1, 5}});
    CHECK(is_at_orientation(feed));
    CHECK(lemma_L_check(feed, {0, 1, 2}, {3, 4, 5, 6}));

    CHECK_THROWS_AS(lemma_L_check(bridge, {0, 1}, {3, 4, 5}), input_error);        // not a partition
    CHECK_THROWS_AS(lemma_L_check(bridge, {3, 4, 5}, {0, 1, 2}), input_error);     // cross arcs reversed
    std::mt19937 rng(20240816);
    for (int trial = 0; trial < 60; ++trial) {
        oracles::OneWayCut cut = oracles::random_one_way_cut(rng);
        CHECK(lemma_L_check(cut.d, cut.x1, cut.x2));
    }
}

TEST_CASE("shipped reducible orientations") {
    ReducibleOrientation r1 = reducible_orientation(ConfigurationId::FIG1_K5MM);
    CHECK(r1.stubs == std::vector<int>{0, 2, 0, 1, 1});
    Orientation d1(configuration_graph(ConfigurationId::FIG1_K5MM), r1.arcs);
    CHECK(d1.out_degree(0) == 2);
    CHECK(d1.out_degree(1) == 1);
    CHECK(d1.out_degree(2) == 3);
    CHECK(d1.out_degree(3) == 2);
    CHECK(d1.out_degree(4) == 0);
    DiffResult c1 = eulerian_census(d1);
    CHECK(c1.diff == 1);
    CHECK(verify_reducible_orientation(r1));

    ReducibleOrientation r2 = reducible_orientation(ConfigurationId::FIG2_KITE);
    CHECK(r2.stubs == std::vector<int>{1, 2, 1, 2});
    Orientation d2(configuration_graph(ConfigurationId::FIG2_KITE), r2.arcs);
    CHECK(eulerian_census(d2).diff == 1);
    CHECK(verify_reducible_orientation(r2));

    ReducibleOrientation r3 = reducible_orientation(ConfigurationId::FIG3_HOUSE);
    CHECK(r3.stubs == std::vector<int>{1, 1, 2, 2, 2});
    Orientation d3(configuration_graph(ConfigurationId::FIG3_HOUSE), r3.arcs);
    CHECK(eulerian_census(d3).diff == -1);
    CHECK(verify_reducible_orientation(r3));

    for (auto id : {ConfigurationId::FIG1_K5MM, ConfigurationId::FIG2_KITE, ConfigurationId::FIG3_HOUSE}) {
        ReducibleOrientation r = reducible_orientation(id);
        Orientation d(configuration_graph(id), r.arcs);
        for (int v : d.graph().vertices()) CHECK(d.out_degree(v) + r.stubs[v] <= 3);
    }
}

TEST_CASE("flipping one interior arc changes the census") {
    ReducibleOrientation r1 = reducible_orientation(ConfigurationId::FIG1_K5MM);
    std::vector<std::pair<int, int>> arcs = r1.arcs;
    for (auto& a : arcs)
        if (a == std::pair<int, int>{0, 4}) a = {4, 0};
    Orientation flipped(configuration_graph(ConfigurationId::FIG1_K5MM), arcs);
    DiffResult c = eulerian_census(flipped);
    CHECK(c.ee == 3);
    CHECK(c.oe == 2);
    CHECK(c.diff == 1);
}

TEST_CASE("reducible verification fails on a spoiled candidate") {
    ReducibleOrientation bad = reducible_orientation(ConfigurationId::FIG2_KITE);
    for (auto& a : bad.arcs)
        if (a == std::pair<int, int>{3, 0}) a = {0, 3}; // out(0) + stub(0) is now 4
    CHECK(!verify_reducible_orientation(bad));
    ReducibleOrientation mismatched = reducible_orientation(ConfigurationId::FIG2_KITE);
    mismatched.stubs = {3, 2, 1, 2}; // stub count no longer matches 4 - degree
    CHECK_THROWS_AS(verify_reducible_orientation(mismatched), input_error);
    ReducibleOrientation zero = reducible_orientation(ConfigurationId::FIG2_KITE);
    for (auto& a : zero.arcs) std::swap(a.first, a.second);
    zero.stubs = {0, 0, 0, 0};
    Orientation rev(configuration_graph(ConfigurationId::FIG2_KITE), zero.arcs);
    CHECK(eulerian_census(rev).diff != 0); // reversal keeps |diff|
}

TEST_CASE("extending a reducible orientation over a host") {
    // gamma is the whole host: extension carries the interior arcs verbatim.
    Graph kite = fx::kite_graph();
    ReducibleOrientation r2 = reducible_orientation(ConfigurationId::FIG2_KITE);
    Orientation whole = extend_at_orientation(kite, {0, 1, 2, 3}, Orientation(Graph(0), {}), r2);
    CHECK(whole.arcs() == Orientation(kite, r2.arcs).arcs());
    CHECK(is_at_orientation(whole));

    // Kite plus an acyclic far side, joined only through gamma.
    Graph host(7);
    for (auto [u, v] : kite.edges()) host.add_edge(u, v);
    host.add_edge(4, 5);
    host.add_edge(4, 6);
    host.add_edge(5, 6);
    host.add_edge(0, 4);
    host.add_edge(2, 5);
    Orientation rest(host.induced({4, 5, 6}), {{4, 5}, {4, 6}, {5, 6}});
    Orientation ext = extend_at_orientation(host, {0, 1, 2, 3}, rest, r2);
    CHECK(is_at_orientation(ext));
    for (auto [u, v] : ext.arcs()) {
        bool u_in = u <= 3, v_in = v <= 3;
        if (u_in != v_in) CHECK(u_in); // every cross arc leaves gamma
    }
    CHECK(lemma_L_check(ext, {0, 1, 2, 3}, {4, 5, 6}));

    CHECK_THROWS_AS(extend_at_orientation(host, {0, 1, 2, 4}, rest, r2), input_error);
}

TEST_CASE("census bound") {
    Graph g(13);
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i + 1 < 13; ++i) {
        g.add_edge(i, i + 1);
        arcs.push_back({i, i + 1});
    }
    for (int i = 0; i + 2 < 13; ++i) {
        g.add_edge(i, i + 2);
        arcs.push_back({i, i + 2});
    }
    g.add_edge(0, 3);
    arcs.push_back({0, 3});
    Orientation d(g, arcs); // 24 arcs: at the default bound
    CHECK(eulerian_census(d).ee >= 1);
    g.add_edge(1, 4);
    arcs.push_back({1, 4});
    Orientation d2(g, arcs); // 25 arcs: past it
    CHECK_THROWS_AS(eulerian_census(d2), bound_exceeded);
    CHECK(eulerian_census(d2, 30).ee >= 1);
}
