#include <doctest.h>

#include "alckit/strata.hpp"

using namespace alckit;

TEST_CASE("orbit enumeration: 2^{r+1} labels in canonical order") {
    RootSystem a1 = build_root_system(LieType::parse("A1"));
    std::vector<OrbitLabel> labs = enumerate_orbits(a1);
    REQUIRE(labs.size() == 4);
    CHECK(labs[0].indices.empty());
    CHECK(labs[1].indices == std::vector<int>{0});
    CHECK(labs[2].indices == std::vector<int>{1});
    CHECK(labs[3].indices == std::vector<int>{0, 1});

    CHECK(enumerate_orbits(build_root_system(LieType::parse("A2"))).size() == 8);
    for (const LieType& t : all_types_up_to_rank(8)) {
        RootSystem rs = build_root_system(t);
        CHECK(enumerate_orbits(rs).size() == (1ull << (rs.rank + 1)));
    }
}

TEST_CASE("closure poset: covering edges and the terminal stratum") {
    for (const LieType& t : all_types_up_to_rank(8)) {
        RootSystem rs = build_root_system(t);
        auto edges = closure_poset(rs);
        long long r1 = rs.rank + 1;
        CHECK((long long)edges.size() == r1 * (1ll << rs.rank));
        // maximal element {0..r}: no outgoing edge
        std::vector<int> full;
        for (int i = 0; i <= rs.rank; ++i)
            full.push_back(i);
        for (const auto& [a, b] : edges) {
            CHECK(a.indices.size() + 1 == b.indices.size());
            CHECK(!(a.indices == full));
        }
    }
    // the open stratum has r+1 outgoing edges
    RootSystem a2 = build_root_system(LieType::parse("A2"));
    int from_empty = 0;
    for (const auto& [a, b] : closure_poset(a2))
        if (a.indices.empty())
            ++from_empty;
    CHECK(from_empty == 3);
}

TEST_CASE("orbit reports") {
    RootSystem a2 = build_root_system(LieType::parse("A2"));

    OrbitReport open = orbit_report(a2, OrbitLabel{{}});
    CHECK(!open.fin_levi.has_value());
    CHECK(open.chain_length == -1);

    OrbitReport zero = orbit_report(a2, OrbitLabel{{0}});
    REQUIRE(zero.fin_levi.has_value());
    CHECK(zero.fin_levi->dim_l == 8); // all of G
    CHECK(zero.chain_length == 0);
    CHECK(zero.z0_trivial);
    CHECK(zero.exotic_flags == std::vector<bool>{false});

    OrbitReport edge = orbit_report(a2, OrbitLabel{{1, 2}});
    REQUIRE(edge.fin_levi.has_value());
    CHECK(edge.fin_levi->dim_l == 2);
    CHECK(edge.fin_levi->dim_z == 2);
    CHECK(edge.dim_levi_ad_fin == 0);
    CHECK(edge.chain_length == 1);
    CHECK(!edge.z0_trivial);
    CHECK(edge.exotic_flags == std::vector<bool>{true, true});
}

TEST_CASE("singleton orbits carry exactly the singleton Levi data") {
    for (const LieType& t : all_types_up_to_rank(4)) {
        RootSystem rs = build_root_system(t);
        for (int i = 0; i <= rs.rank; ++i) {
            OrbitReport r = orbit_report(rs, OrbitLabel{{i}});
            FiniteLeviData d = finite_levi_data(rs, FaceLabel::make({i}, rs.rank));
            REQUIRE(r.fin_levi.has_value());
            CHECK(r.fin_levi->dim_l == d.dim_l);
            CHECK(r.fin_levi->dim_u == d.dim_u);
            CHECK(r.z0_trivial);
            CHECK(r.chain_length == 0);
        }
    }
}

TEST_CASE("dim_levi_ad_fin is monotone non-increasing along inclusions") {
    for (const LieType& t : all_types_up_to_rank(4)) {
        RootSystem rs = build_root_system(t);
        for (const auto& [a, b] : closure_poset(rs)) {
            if (a.indices.empty())
                continue;
            OrbitReport ra = orbit_report(rs, a);
            OrbitReport rb = orbit_report(rs, b);
            CHECK(rb.dim_levi_ad_fin <= ra.dim_levi_ad_fin);
        }
    }
}

TEST_CASE("DOT emission is deterministic with the right shape") {
    RootSystem a1 = build_root_system(LieType::parse("A1"));
    std::string dot = emit_poset_dot(a1);
    CHECK(dot == emit_poset_dot(a1));
    // 4 node declarations, 4 edges
    std::size_t nodes = 0, arrows = 0, pos = 0;
    while ((pos = dot.find("];", pos)) != std::string::npos) {
        ++nodes;
        pos += 2;
    }
    pos = 0;
    while ((pos = dot.find("->", pos)) != std::string::npos) {
        ++arrows;
        pos += 2;
    }
    CHECK(nodes == 4);
    CHECK(arrows == 4);
    CHECK(dot.find("digraph strata_A1") != std::string::npos);
    CHECK(dot.find("chain_length=1") != std::string::npos);
}
