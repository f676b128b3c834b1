#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "trackgrid/track_components.hpp"

using namespace trackgrid;

namespace {

std::vector<AreaRef> cells_from_codes(const GridParams& g, const std::vector<std::int64_t>& codes) {
    std::vector<AreaRef> out;
    for (std::int64_t c : codes) out.push_back(decode(g, CellCode{c}));
    return out;
}

TrackComponents letter_d_components(const GridParams& g) {
    return components_from_cells(g, cells_from_codes(g, fixtures::letter_d_codes()));
}

double polyline_area(const Polyline& p) {
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        acc += cross(p[i], p[(i + 1) % p.size()]);
    return 0.5 * acc;
}

}  // namespace

TEST_CASE("run merging on one track") {
    const GridParams g = fixtures::standard_grid();

    SUBCASE("one blank area does not separate") {
        const auto comps = components_on_track(g, 2, {1, 2, 4, 5, 6, 7});
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].lo == 1);
        CHECK(comps[0].hi == 7);
        CHECK(comps[0].occupied == std::vector<std::int64_t>{1, 2, 4, 5, 6, 7});
    }
    SUBCASE("four blank areas separate") {
        const auto comps = components_on_track(g, 3, {0, 3, 4, 5, 6, 7, 12, 13, 14});
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].lo == 0);
        CHECK(comps[0].hi == 7);
        CHECK(comps[1].lo == 12);
        CHECK(comps[1].hi == 14);
    }
    SUBCASE("gap boundary is exactly four blanks") {
        // runs [0,4] and [5+gap, 9+gap] on ring 60
        for (std::int64_t gap = 0; gap <= 6; ++gap) {
            std::vector<std::int64_t> occupied{0, 1, 2, 3, 4};
            for (std::int64_t j = 5 + gap; j <= 9 + gap; ++j) occupied.push_back(j);
            const auto comps = components_on_track(g, 3, occupied);
            CAPTURE(gap);
            if (gap < 4)
                CHECK(comps.size() == 1);
            else
                CHECK(comps.size() == 2);
        }
    }
    SUBCASE("wrap-around component") {
        const auto comps = components_on_track(g, 3, {0, 1, 58, 59});
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].lo == 58);
        CHECK(comps[0].hi == 1);
        CHECK(comps[0].occupied == std::vector<std::int64_t>{58, 59, 0, 1});
    }
    SUBCASE("merging everything closes the ring") {
        std::vector<std::int64_t> occupied;
        for (std::int64_t j = 0; j < 60; j += 3) occupied.push_back(j);
        const auto comps = components_on_track(g, 3, occupied);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].lo == 0);
        CHECK(comps[0].hi == 59);
    }
    SUBCASE("fully occupied ring") {
        std::vector<std::int64_t> occupied;
        for (std::int64_t j = 0; j < 36; ++j) occupied.push_back(j);
        const auto comps = components_on_track(g, 2, occupied);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].lo == 0);
        CHECK(comps[0].hi == 35);
    }
    SUBCASE("empty and invalid input") {
        CHECK(components_on_track(g, 2, {}).empty());
        CHECK_THROWS_AS(components_on_track(g, 2, {36}), std::domain_error);
        CHECK_THROWS_AS(components_on_track(g, 2, {3, 3}), std::domain_error);
        CHECK_THROWS_AS(components_on_track(g, 0, {0}), std::domain_error);
    }
    SUBCASE("components are ordered by lo and cover the occupied set") {
        const auto comps = components_on_track(g, 4, {2, 3, 30, 31, 60, 61, 80});
        REQUIRE(comps.size() == 4);
        for (std::size_t i = 1; i < comps.size(); ++i) CHECK(comps[i - 1].lo < comps[i].lo);
        std::set<std::int64_t> covered;
        for (const auto& c : comps) covered.insert(c.occupied.begin(), c.occupied.end());
        CHECK(covered == std::set<std::int64_t>{2, 3, 30, 31, 60, 61, 80});
    }
}

TEST_CASE("boundary points") {
    const GridParams g = fixtures::standard_grid();

    SUBCASE("six-cell component starting a track") {
        const ComponentInterval c{4, 0, 5, {0, 1, 2, 3, 4, 5}};
        const BoundaryPoints bp = boundary_points(g, c);
        CHECK(bp.us == DividingPointRef{4, 0});
        CHECK(bp.ue == DividingPointRef{4, 3});
        CHECK(bp.ls == DividingPointRef{3, 0});
        CHECK(bp.le == DividingPointRef{3, 3});
    }
    SUBCASE("single even cell") {
        const ComponentInterval c{4, 0, 0, {0}};
        const BoundaryPoints bp = boundary_points(g, c);
        CHECK(bp.us == DividingPointRef{4, 0});
        CHECK(bp.ue == DividingPointRef{4, 1});
        CHECK(bp.ls == DividingPointRef{3, 0});
        CHECK(bp.le == DividingPointRef{3, 0});
    }
    SUBCASE("single odd cell") {
        const ComponentInterval c{4, 1, 1, {1}};
        const BoundaryPoints bp = boundary_points(g, c);
        CHECK(bp.us == DividingPointRef{4, 1});
        CHECK(bp.ue == DividingPointRef{4, 1});
        CHECK(bp.ls == DividingPointRef{3, 0});
        CHECK(bp.le == DividingPointRef{3, 1});
    }
    SUBCASE("track-1 components rest on the center") {
        const ComponentInterval c{1, 0, 2, {0, 1, 2}};
        const BoundaryPoints bp = boundary_points(g, c);
        CHECK(bp.us == DividingPointRef{1, 0});
        CHECK(bp.ue == DividingPointRef{1, 3});
        CHECK(bp.ls == DividingPointRef{0, 0});
        CHECK(bp.le == DividingPointRef{0, 0});
    }
    SUBCASE("wrap-around component") {
        const ComponentInterval c{3, 58, 1, {58, 59, 0, 1}};
        const BoundaryPoints bp = boundary_points(g, c);
        CHECK(bp.us == DividingPointRef{3, 35});
        CHECK(bp.ue == DividingPointRef{3, 1});
        CHECK(bp.ls == DividingPointRef{2, 23});
        CHECK(bp.le == DividingPointRef{2, 1});
    }
}

TEST_CASE("adjacency between consecutive tracks") {
    const GridParams g = fixtures::standard_grid();

    SUBCASE("overlapping arcs touch") {
        const ComponentInterval lower{2, 0, 5, {0, 1, 2, 3, 4, 5}};
        const ComponentInterval upper{3, 1, 1, {1}};
        CHECK(components_adjacent(g, lower, upper));
    }
    SUBCASE("a wide angular gap exceeds the chord bound") {
        const ComponentInterval lower{2, 0, 0, {0}};   // outer arc [0, 15] deg
        const ComponentInterval upper{3, 10, 10, {10}};  // inner arc at 60 deg
        // gap 45 deg on circle 2r: chord 16 sin(22.5) > 4
        CHECK_FALSE(components_adjacent(g, lower, upper));
    }
    SUBCASE("chord bound calibration") {
        // on the circle of radius 2r the bound allows gaps up to
        // 2 asin(r / (4r)) in half-angle terms
        const double limit = 2.0 * rad_to_deg(std::asin(0.25));
        const ComponentInterval lower{2, 0, 0, {0}};  // outer arc [0, 15]
        // upper cells sit one per 6 degrees on track 3
        for (std::int64_t j : {3, 4, 5, 6, 7, 8}) {
            const ComponentInterval upper{3, j, j, {j}};
            const BoundaryPoints bp = boundary_points(g, upper);
            const double gap = 360.0 * static_cast<double>(bp.ls.k) / 24.0 - 15.0;
            CAPTURE(j);
            if (gap <= limit + 1e-9)
                CHECK(components_adjacent(g, lower, upper));
            else
                CHECK_FALSE(components_adjacent(g, lower, upper));
        }
    }
    CHECK_THROWS_AS(components_adjacent(g, ComponentInterval{2, 0, 0, {0}},
                                        ComponentInterval{4, 0, 0, {0}}),
                    std::domain_error);
}

TEST_CASE("branches of the letter-d dataset") {
    const GridParams g = fixtures::standard_grid();
    const TrackComponents tc = letter_d_components(g);

    REQUIRE(tc.per_track[2].size() == 1);
    REQUIRE(tc.per_track[3].size() == 2);
    REQUIRE(tc.per_track[4].size() == 1);
    REQUIRE(tc.per_track[5].size() == 1);

    const auto branches = build_branches(g, tc);
    REQUIRE(branches.size() == 2);
    const std::vector<ComponentRef> via_first{{2, 0}, {3, 0}, {4, 0}, {5, 0}};
    const std::vector<ComponentRef> via_second{{2, 0}, {3, 1}, {4, 0}, {5, 0}};
    CHECK(branches[0].chain == via_first);
    CHECK(branches[1].chain == via_second);
}

TEST_CASE("branch construction corner cases") {
    const GridParams g = fixtures::standard_grid();

    SUBCASE("an isolated component forms no branch") {
        const TrackComponents tc =
            components_from_cells(g, cells_from_codes(g, {13, 14}));
        CHECK(build_branches(g, tc).empty());
    }
    SUBCASE("two components with a wide gap form no branch") {
        TrackComponents tc;
        tc.per_track.resize(4);
        tc.per_track[2] = {ComponentInterval{2, 0, 0, {0}}};
        tc.per_track[3] = {ComponentInterval{3, 30, 30, {30}}};
        CHECK(build_branches(g, tc).empty());
    }
}

TEST_CASE("branch boundaries") {
    const GridParams g = fixtures::standard_grid();
    const TrackComponents tc = letter_d_components(g);
    const auto branches = build_branches(g, tc);
    REQUIRE(branches.size() == 2);

    const auto [lb, ub] = branch_boundaries(g, tc, branches[0]);
    REQUIRE(lb.size() == 8);  // two points per level
    REQUIRE(ub.size() == 8);

    // two boundary points per circle of radius 2r, 4r; shared circles carry
    // the upper point of one level and the lower point of the next
    const auto count_radius = [&](const Polyline& poly, double radius) {
        int n = 0;
        for (const Vec2& p : poly)
            if (std::abs(norm(p) - radius) <= 1e-9) ++n;
        return n;
    };
    CHECK(count_radius(lb, 8.0) == 2);
    CHECK(count_radius(lb, 16.0) == 2);
    CHECK(count_radius(ub, 8.0) == 2);
    CHECK(count_radius(ub, 16.0) == 2);
    CHECK(count_radius(lb, 20.0) == 1);

    SUBCASE("single-component branch degenerates to two points") {
        const Branch single{{ComponentRef{2, 0}}};
        const auto [lb1, ub1] = branch_boundaries(g, tc, single);
        CHECK(lb1.size() == 2);
        CHECK(ub1.size() == 2);
    }
    SUBCASE("boundaries meet where the branch narrows to a single odd cell") {
        TrackComponents narrow;
        narrow.per_track.resize(4);
        narrow.per_track[2] = {ComponentInterval{2, 0, 2, {0, 1, 2}}};
        narrow.per_track[3] = {ComponentInterval{3, 1, 1, {1}}};
        const auto chains = build_branches(g, narrow);
        REQUIRE(chains.size() == 1);
        const auto [lb2, ub2] = branch_boundaries(g, narrow, chains[0]);
        CHECK(lb2.back() == ub2.back());  // us == ue on the top level
    }
}

TEST_CASE("holes") {
    const GridParams g = fixtures::standard_grid();

    SUBCASE("the letter-d dataset enc encloses one hole inside track 3") {
        const TrackComponents tc = letter_d_components(g);
        const auto branches = build_branches(g, tc);
        const auto holes = find_holes(g, tc, branches);
        REQUIRE(holes.size() == 1);
        CHECK(holes[0].start == ComponentRef{2, 0});
        CHECK(holes[0].end == ComponentRef{4, 0});
        CHECK(holes[0].side_a == std::vector<ComponentRef>{{3, 0}});
        CHECK(holes[0].side_b == std::vector<ComponentRef>{{3, 1}});
        REQUIRE(holes[0].boundary.size() >= 3);
        CHECK(polyline_area(holes[0].boundary) > 0.0);  // counterclockwise
    }
    SUBCASE("a single branch or disjoint branches yield no hole") {
        const TrackComponents tc =
            components_from_cells(g, cells_from_codes(g, {13, 49}));
        const auto branches = build_branches(g, tc);
        CHECK(branches.size() == 1);
        CHECK(find_holes(g, tc, branches).empty());
    }
}

TEST_CASE("anomalies") {
    const GridParams g = fixtures::standard_grid();

    SUBCASE("isolated components on different tracks") {
        // three angularly spread singles plus one stacked pair near 0 deg
        const TrackComponents tc = components_from_cells(
            g, cells_from_codes(g, {6, 42, 63, 13, 49}));
        const auto branches = build_branches(g, tc);
        const auto anomalies = find_anomalies(tc, branches);
        std::set<ComponentRef> in_branch;
        for (const Branch& b : branches) in_branch.insert(b.chain.begin(), b.chain.end());
        int total = 0;
        for (int t = 1; t <= tc.max_track(); ++t)
            total += static_cast<int>(tc.per_track[static_cast<std::size_t>(t)].size());
        CHECK(static_cast<int>(anomalies.size() + in_branch.size()) == total);
        for (const ComponentRef& a : anomalies) CHECK_FALSE(in_branch.count(a));
        CHECK(anomalies.size() == 3);
    }
    SUBCASE("a fully connected dataset has none") {
        const TrackComponents tc = letter_d_components(g);
        const auto branches = build_branches(g, tc);
        CHECK(find_anomalies(tc, branches).empty());
    }
}

TEST_CASE("hull boundary") {
    const GridParams g = fixtures::standard_grid();

    SUBCASE("a single even cell exposes its two outer vertices") {
        const Polyline hull = hull_boundary(g, {AreaRef{2, 0}});
        REQUIRE(hull.size() == 2);
        CHECK(norm(hull[0]) == doctest::Approx(8.0));
        CHECK(norm(hull[1]) == doctest::Approx(8.0));
    }
    SUBCASE("a dense disk of radius 2.5r is wrapped by the track-3 circle") {
        std::vector<Vec2> pts;
        for (int i = -10; i <= 10; ++i)
            for (int j = -10; j <= 10; ++j) {
                const Vec2 p{i * 1.0, j * 1.0};
                if (norm(p) <= 2.5 * g.r) pts.push_back(p);
            }
        const MappedDataset mapped = map_dataset(g, pts);
        const Polyline hull = hull_boundary(g, mapped.cells);
        REQUIRE(hull.size() == 36);  // every dividing point of circle 3r
        for (const Vec2& v : hull) CHECK(norm(v) == doctest::Approx(12.0));
    }
    SUBCASE("letter-d hull rides the outermost occupied arcs") {
        const auto cells = cells_from_codes(g, fixtures::letter_d_codes());
        const Polyline hull = hull_boundary(g, cells);
        REQUIRE(!hull.empty());
        double max_radius = 0.0;
        for (const Vec2& v : hull) max_radius = std::max(max_radius, norm(v));
        CHECK(max_radius == doctest::Approx(20.0));  // circle 5r appears
        // every hull vertex is close to the dataset
        const auto points = fixtures::letter_d_points();
        for (const Vec2& v : hull) {
            double best = 1e9;
            for (const Vec2& p : points) best = std::min(best, distance(v, p));
            CHECK(best <= g.r + 1e-9);
        }
    }
    SUBCASE("empty dataset is rejected") {
        CHECK_THROWS_AS(hull_boundary(g, {}), std::domain_error);
    }
}
