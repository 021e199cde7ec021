#include "dcb/topology.hpp"

#include "dcb/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace dcb;

namespace {
ClusterLayout default_layout() { return ClusterLayout::build(7, 3, 1000.0); }
} // namespace

TEST_CASE("cluster geometry matches reuse-3 constants") {
    const ClusterLayout layout = default_layout();
    CHECK(layout.co_channel_distance() == doctest::Approx(3000.0));
    CHECK(layout.cells().size() == 7);
    CHECK(layout.cell(1).center.x == doctest::Approx(0.0));
    CHECK(layout.cell(1).center.y == doctest::Approx(0.0));

    const double spacing = std::sqrt(3.0) * 1000.0;
    CHECK(spacing == doctest::Approx(1732.0508).epsilon(1e-6));
    for (int k = 2; k <= 7; ++k)
        CHECK(distance(layout.cell(1).center, layout.cell(k).center) ==
              doctest::Approx(spacing).epsilon(1e-12));
}

TEST_CASE("frequency groups follow the cluster pattern") {
    const ClusterLayout layout = default_layout();
    CHECK(layout.cell(1).group == Group::A);
    CHECK(layout.cell(2).group == layout.cell(4).group);
    CHECK(layout.cell(4).group == layout.cell(6).group);
    CHECK(layout.cell(3).group == layout.cell(5).group);
    CHECK(layout.cell(2).group != layout.cell(3).group);

    // No adjacent pair shares a group.
    for (const Cell& a : layout.cells())
        for (const Cell& b : layout.cells())
            if (layout.adjacent(a.id, b.id))
                CHECK(a.group != b.group);
}

TEST_CASE("co-group cell centers keep the reuse distance") {
    const ClusterLayout layout = default_layout();
    for (const Cell& a : layout.cells())
        for (const Cell& b : layout.cells())
            if (a.id != b.id && a.group == b.group)
                CHECK(distance(a.center, b.center) >= layout.co_channel_distance() - 1e-6);
}

TEST_CASE("unsupported cluster parameters are rejected") {
    CHECK_THROWS_AS(ClusterLayout::build(8, 3, 1000.0), ConfigError);
    CHECK_THROWS_AS(ClusterLayout::build(7, 4, 1000.0), ConfigError);
    CHECK_THROWS_AS(ClusterLayout::build(7, 3, 0.0), ConfigError);
}

TEST_CASE("donor groups of the reference cell") {
    const ClusterLayout layout = default_layout();
    auto groups = layout.donor_groups(1);
    REQUIRE(groups.size() == 2);

    std::set<std::set<int>> sets;
    for (const auto& g : groups)
        sets.insert(std::set<int>(g.begin(), g.end()));
    CHECK(sets == std::set<std::set<int>>{{2, 4, 6}, {3, 5, 7}});

    for (const auto& g : groups) {
        const Group fg = layout.cell(g.front()).group;
        for (int id : g) {
            CHECK(id != 1);
            CHECK(layout.cell(id).group == fg);
        }
    }
}

TEST_CASE("donor groups of a ring cell") {
    const ClusterLayout layout = default_layout();
    auto groups = layout.donor_groups(2);
    REQUIRE(groups.size() == 2);
    std::set<std::set<int>> sets;
    for (const auto& g : groups)
        sets.insert(std::set<int>(g.begin(), g.end()));
    CHECK(sets == std::set<std::set<int>>{{1}, {3, 7}});
}

TEST_CASE("tier-1 co-channel interferers sit on the first reuse ring") {
    const ClusterLayout layout = default_layout();
    const auto tier1 = layout.co_channel_interferers(1, Group::A, 1);
    REQUIRE(tier1.size() == 6);
    for (const auto& it : tier1) {
        CHECK(it.tier == 1);
        CHECK(distance(it.position, layout.cell(1).center) == doctest::Approx(3000.0));
    }
}

TEST_CASE("two-tier interferer set buckets by lattice ring") {
    // Oracle: a triangular lattice of spacing D has 6 points at D, then
    // 6 at sqrt(3)*D and 6 at 2*D within norm 2*D.
    const ClusterLayout layout = default_layout();
    const auto both = layout.co_channel_interferers(1, Group::A, 2);
    REQUIRE(both.size() == 18);

    int at_d = 0, at_sqrt3d = 0, at_2d = 0;
    double max_t1 = 0.0, min_t2 = 1e18;
    for (const auto& it : both) {
        const double d = distance(it.position, layout.cell(1).center);
        if (std::abs(d - 3000.0) < 1e-6) {
            ++at_d;
            CHECK(it.tier == 1);
            max_t1 = std::max(max_t1, d);
        } else if (std::abs(d - 3000.0 * std::sqrt(3.0)) < 1e-6) {
            ++at_sqrt3d;
            CHECK(it.tier == 2);
            min_t2 = std::min(min_t2, d);
        } else if (std::abs(d - 6000.0) < 1e-6) {
            ++at_2d;
            CHECK(it.tier == 2);
            min_t2 = std::min(min_t2, d);
        } else {
            FAIL("interferer at unexpected distance ", d);
        }
    }
    CHECK(at_d == 6);
    CHECK(at_sqrt3d == 6);
    CHECK(at_2d == 6);
    CHECK(min_t2 > max_t1);
}

TEST_CASE("cross-group lattice includes the adjacent donor cells") {
    const ClusterLayout layout = default_layout();
    const auto entries = layout.co_channel_interferers(1, Group::B, 2);

    // Anchor (cell 2) plus its two rings.
    CHECK(entries.size() == 19);
    for (int donor : {2, 4, 6}) {
        const Point p = layout.cell(donor).center;
        const bool found = std::any_of(entries.begin(), entries.end(), [&](const Interferer& it) {
            return distance(it.position, p) < 1e-6 && it.tier == 1;
        });
        CHECK_MESSAGE(found, "donor cell ", donor, " missing from interferer set");
    }
}

TEST_CASE("interferer enumeration is deterministic") {
    const ClusterLayout layout = default_layout();
    const auto a = layout.co_channel_interferers(1, Group::A, 2);
    const auto b = layout.co_channel_interferers(1, Group::A, 2);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].position.x == b[i].position.x);
        CHECK(a[i].position.y == b[i].position.y);
        CHECK(a[i].tier == b[i].tier);
    }
    CHECK_THROWS_AS(layout.co_channel_interferers(1, Group::A, 3), ConfigError);
    CHECK_THROWS_AS(layout.co_channel_interferers(1, Group::A, 0), ConfigError);
}
