#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "trackgrid/typed_core.hpp"

using namespace trackgrid;

namespace {

IndexSet indices_of(const FinitePointSpace& space, const std::vector<Vec2>& pts) {
    IndexSet out;
    for (const Vec2& p : pts) out.push_back(*space.find(p));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vec2> points_of(const FinitePointSpace& space, const IndexSet& set) {
    std::vector<Vec2> out;
    for (std::size_t i : set) out.push_back(space.points()[i]);
    return out;
}

// Centered square grid with 2*half_steps+1 points per axis; the origin is an
// exact grid point.
FinitePointSpace unit_grid(int half_steps, double spacing) {
    std::vector<Vec2> pts;
    for (int i = -half_steps; i <= half_steps; ++i)
        for (int j = -half_steps; j <= half_steps; ++j)
            pts.push_back({i * spacing, j * spacing});
    return FinitePointSpace(std::move(pts));
}

// Literal exhaustive check: some per-point type choice makes every two-block
// split of A overlap. Feasible only for small |A| and |Q|.
bool oracle_connected(const FinitePointSpace& space, const IndexSet& a, const TypeSet& q) {
    const std::size_t n = a.size();
    const std::size_t m = q.tags.size();
    REQUIRE(n >= 1);
    REQUIRE(n <= 12);

    // precomputed overlap[(i*m+ti)*n*m + j*m+tj]
    std::vector<char> table(n * m * n * m, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t ti = 0; ti < m; ++ti)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t tj = 0; tj < m; ++tj)
                    table[((i * m + ti) * n + j) * m + tj] =
                        neighborhoods_overlap(q.tags[ti], space.points()[a[i]], q.tags[tj],
                                              space.points()[a[j]])
                            ? 1
                            : 0;
    const auto overlap = [&](std::size_t i, std::size_t ti, std::size_t j, std::size_t tj) {
        return table[((i * m + ti) * n + j) * m + tj] != 0;
    };

    std::vector<std::size_t> choice(n, 0);
    for (;;) {
        // crossing masks for this assignment
        std::vector<std::uint32_t> link(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && overlap(i, choice[i], j, choice[j]))
                    link[i] |= (1u << j);

        bool all_partitions_touch = true;
        const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
        for (std::uint32_t part = 1; part < full && all_partitions_touch; ++part) {
            if ((part & 1u) == 0) continue;  // fix point 0 on one side
            std::uint32_t reachable = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (part & (1u << i)) reachable |= link[i];
            if ((reachable & ~part & full) == 0) all_partitions_touch = false;
        }
        if (all_partitions_touch) return true;

        // next assignment
        std::size_t pos = 0;
        while (pos < n && ++choice[pos] == m) choice[pos++] = 0;
        if (pos == n) return false;
    }
}

}  // namespace

TEST_CASE("space construction") {
    CHECK_THROWS_AS(FinitePointSpace({}), std::invalid_argument);
    CHECK_THROWS_AS(FinitePointSpace({{0, 0}, {0, 0}}), std::invalid_argument);
    const FinitePointSpace space({{0, 0}, {1, 0}});
    CHECK(space.size() == 2);
    CHECK(space.find({1, 0}) == 1);
    CHECK_FALSE(space.find({2, 0}).has_value());
}

TEST_CASE("type tag validation") {
    CHECK_THROWS_AS(TypeTag::disk(0.0), std::invalid_argument);
    CHECK_THROWS_AS(TypeTag::dir(1.0, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(TypeTag::dir(1.0, -1, 4), std::invalid_argument);
    CHECK_THROWS_AS(TypeSet({}), std::invalid_argument);
    CHECK(TypeSet::all_directions(1.0, 12).tags.size() == 12);
}

TEST_CASE("neighborhoods") {
    const FinitePointSpace space({{0, 0}, {1, 0}, {-1, 0}});

    SUBCASE("left half-disk") {
        const IndexSet u = neighborhood(space, TypeTag::left(1.0), {0, 0});
        CHECK(points_of(space, u) == std::vector<Vec2>{{0, 0}, {-1, 0}});
    }
    SUBCASE("tight disk isolates the anchor") {
        const IndexSet u = neighborhood(space, TypeTag::disk(0.5), {0, 0});
        CHECK(points_of(space, u) == std::vector<Vec2>{{0, 0}});
    }
    SUBCASE("anchor must be a space point") {
        CHECK_THROWS_AS(neighborhood(space, TypeTag::disk(1.0), {5, 5}), std::domain_error);
    }
    SUBCASE("sector neighborhood on a grid") {
        const FinitePointSpace grid = unit_grid(5, 1.0);
        const TypeTag wedge = TypeTag::dir(4.0, 7, 12);  // 210..240 degrees
        const IndexSet u = neighborhood(grid, wedge, {0, 0});
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Vec2 p = grid.points()[i];
            bool expected = p == Vec2{0, 0};
            if (!expected && norm(p) <= 4.0 + kEps) {
                const double ang = angle_deg(p);
                expected = ang >= 210.0 - kEps && ang <= 240.0 + kEps;
            }
            const bool got = std::binary_search(u.begin(), u.end(), i);
            REQUIRE(got == expected);
        }
    }
}

TEST_CASE("direct closure") {
    SUBCASE("empty set stays empty") {
        const FinitePointSpace space({{0, 0}, {1, 0}});
        CHECK(direct_closure(space, {}, TypeSet({TypeTag::disk(1.0)})).empty());
    }
    SUBCASE("collinear points under a unit disk") {
        const FinitePointSpace space({{0, 0}, {1, 0}, {2, 0}});
        const IndexSet out = direct_closure(space, {0}, TypeSet({TypeTag::disk(1.0)}));
        CHECK(points_of(space, out) == std::vector<Vec2>{{0, 0}, {1, 0}});
    }
    SUBCASE("closure of the center under one direction is the reflected sector") {
        const FinitePointSpace grid = unit_grid(10, 0.5);
        const TypeSet q({TypeTag::dir(4.0, 7, 12)});
        const IndexSet out = direct_closure(grid, {*grid.find({0, 0})}, q);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Vec2 p = grid.points()[i];
            bool expected = p == Vec2{0, 0};
            if (!expected && norm(p) <= 4.0 + kEps) {
                const double ang = angle_deg(p);
                expected = ang >= 30.0 - kEps && ang <= 60.0 + kEps;
            }
            REQUIRE(std::binary_search(out.begin(), out.end(), i) == expected);
        }
    }
    SUBCASE("monotone and extensive") {
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> coord(-3.0, 3.0);
        std::vector<Vec2> pts;
        for (int i = 0; i < 40; ++i) {
            Vec2 p{coord(rng), coord(rng)};
            if (std::none_of(pts.begin(), pts.end(), [&](Vec2 q_) { return q_ == p; }))
                pts.push_back(p);
        }
        const FinitePointSpace space(pts);
        const TypeSet q({TypeTag::disk(1.0), TypeTag::left(1.5), TypeTag::dir(2.0, 1, 4)});
        for (int iter = 0; iter < 20; ++iter) {
            IndexSet a, b;
            for (std::size_t i = 0; i < space.size(); ++i) {
                const auto roll = rng() % 4;
                if (roll == 0) a.push_back(i);
                if (roll <= 1) b.push_back(i);  // a ⊆ b on average; enforce below
            }
            std::sort(a.begin(), a.end());
            b.insert(b.end(), a.begin(), a.end());
            std::sort(b.begin(), b.end());
            b.erase(std::unique(b.begin(), b.end()), b.end());
            const IndexSet ca = direct_closure(space, a, q);
            const IndexSet cb = direct_closure(space, b, q);
            CHECK(std::includes(ca.begin(), ca.end(), a.begin(), a.end()));
            CHECK(std::includes(cb.begin(), cb.end(), ca.begin(), ca.end()));
        }
    }
    SUBCASE("set must live in the space") {
        const FinitePointSpace space({{0, 0}});
        CHECK_THROWS_AS(direct_closure(space, {4}, TypeSet({TypeTag::disk(1.0)})),
                        std::domain_error);
    }
}

TEST_CASE("trails") {
    const TypeSet q({TypeTag::disk(1.0)});

    SUBCASE("isolated singleton") {
        const FinitePointSpace space({{0, 0}, {10, 0}});
        CHECK(trail(space, {0}, q) == IndexSet{0});
    }
    SUBCASE("a 0.9-spaced chain is swallowed whole") {
        std::vector<Vec2> pts;
        for (int i = 0; i < 8; ++i) pts.push_back({0.9 * i, 0.0});
        const FinitePointSpace space(pts);
        CHECK(trail(space, {0}, q).size() == 8);
    }
    SUBCASE("the whole space is a fixpoint") {
        const FinitePointSpace space({{0, 0}, {1, 0}, {5, 5}});
        IndexSet all{0, 1, 2};
        CHECK(trail(space, all, q) == all);
    }
    SUBCASE("idempotence on random sets") {
        std::mt19937 rng(9);
        std::uniform_real_distribution<double> coord(-2.5, 2.5);
        std::vector<Vec2> pts;
        while (pts.size() < 30) {
            Vec2 p{coord(rng), coord(rng)};
            if (std::none_of(pts.begin(), pts.end(), [&](Vec2 q_) { return q_ == p; }))
                pts.push_back(p);
        }
        const FinitePointSpace space(pts);
        const TypeSet mixed({TypeTag::disk(0.8), TypeTag::right(1.2)});
        for (int iter = 0; iter < 25; ++iter) {
            IndexSet a;
            for (std::size_t i = 0; i < space.size(); ++i)
                if (rng() % 3 == 0) a.push_back(i);
            const IndexSet t1 = trail(space, a, mixed);
            CHECK(trail(space, t1, mixed) == t1);
        }
    }
}

TEST_CASE("track layers") {
    SUBCASE("unit chain peels one point per layer") {
        const FinitePointSpace space({{0, 0}, {1, 0}, {2, 0}, {3, 0}});
        const auto layers = tracks(space, {0}, TypeSet({TypeTag::disk(1.0)}));
        REQUIRE(layers.size() == 4);
        for (std::size_t k = 0; k < 4; ++k) CHECK(layers[k] == IndexSet{k});
    }
    SUBCASE("no reachable points leaves just the seed") {
        const FinitePointSpace space({{0, 0}, {9, 9}});
        const auto layers = tracks(space, {0}, TypeSet({TypeTag::disk(1.0)}));
        CHECK(layers == std::vector<IndexSet>{{0}});
    }
    SUBCASE("layers partition the trail") {
        const FinitePointSpace grid = unit_grid(3, 0.9);
        const TypeSet q({TypeTag::disk(1.0), TypeTag::dir(1.5, 0, 4)});
        const IndexSet seed{*grid.find({0, 0})};
        const auto layers = tracks(grid, seed, q);
        IndexSet u;
        for (const IndexSet& layer : layers) {
            for (std::size_t i : layer) CHECK(!std::binary_search(u.begin(), u.end(), i));
            u.insert(u.end(), layer.begin(), layer.end());
            std::sort(u.begin(), u.end());
        }
        CHECK(u == trail(grid, seed, q));
    }
    SUBCASE("padded lattice layers grow one track width per step") {
        const double r = 1.0;
        const FinitePointSpace lattice = unit_grid(4, r);
        const TypeSet q = TypeSet::all_directions(r, 12);
        const auto layers = tracks(lattice, {*lattice.find({0, 0})}, q);
        REQUIRE(layers.size() >= 4);
        for (std::size_t t = 1; t < layers.size(); ++t) {
            for (std::size_t i : layers[t]) {
                // each closure step reaches at most one track width further
                CHECK(norm(lattice.points()[i]) <= static_cast<double>(t) * r + kEps);
            }
        }
        // along the axes the layers are exact annulus slices
        for (int k = 1; k <= 4; ++k) {
            const std::size_t idx = *lattice.find({k * r, 0.0});
            const IndexSet& layer = layers[static_cast<std::size_t>(k)];
            CHECK(std::binary_search(layer.begin(), layer.end(), idx));
        }
    }
}

TEST_CASE("type-Q connectivity") {
    const TypeSet disk1({TypeTag::disk(1.0)});

    SUBCASE("singletons are connected, empty sets rejected") {
        const FinitePointSpace space({{0, 0}, {3, 0}});
        CHECK(is_type_q_connected(space, {0}, disk1));
        CHECK_THROWS_AS(is_type_q_connected(space, {}, disk1), std::domain_error);
    }
    SUBCASE("two points near and far") {
        const FinitePointSpace space({{0, 0}, {1.5, 0}, {10, 0}});
        CHECK(is_type_q_connected(space, {0, 1}, disk1));
        CHECK_FALSE(is_type_q_connected(space, {0, 2}, disk1));
    }
    SUBCASE("left/right chain whose middle point cannot serve both sides") {
        const FinitePointSpace space({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
        const TypeSet q({TypeTag::left(1.0), TypeTag::right(1.0)});
        const IndexSet a{0, 2, 4};
        CHECK_FALSE(is_type_q_connected(space, a, q));
        CHECK(oracle_connected(space, a, q) == false);
        // the full chain is fine
        CHECK(is_type_q_connected(space, {0, 1, 2, 3, 4}, q));
    }
    SUBCASE("single-type connectivity implies set connectivity") {
        std::mt19937 rng(13);
        std::uniform_real_distribution<double> coord(-2.0, 2.0);
        for (int iter = 0; iter < 30; ++iter) {
            std::vector<Vec2> pts;
            while (pts.size() < 7) {
                Vec2 p{coord(rng), coord(rng)};
                if (std::none_of(pts.begin(), pts.end(), [&](Vec2 q_) { return q_ == p; }))
                    pts.push_back(p);
            }
            const FinitePointSpace space(pts);
            IndexSet a;
            for (std::size_t i = 0; i < space.size(); ++i)
                if (rng() % 2 == 0) a.push_back(i);
            if (a.empty()) a.push_back(0);
            const TypeTag p = TypeTag::disk(1.3);
            const TypeSet just_p({p});
            const TypeSet q({p, TypeTag::dir(1.0, 0, 4), TypeTag::left(0.7)});
            if (is_type_q_connected(space, a, just_p))
                CHECK(is_type_q_connected(space, a, q));
        }
    }
    SUBCASE("agreement with the exhaustive oracle") {
        std::mt19937 rng(17);
        std::uniform_real_distribution<double> coord(-2.0, 2.0);
        const std::vector<TypeSet> type_sets = {
            TypeSet({TypeTag::disk(1.0)}),
            TypeSet({TypeTag::left(1.2), TypeTag::right(1.2)}),
            TypeSet({TypeTag::disk(0.8), TypeTag::dir(1.6, 0, 4), TypeTag::dir(1.6, 2, 4)}),
        };
        for (int iter = 0; iter < 40; ++iter) {
            std::vector<Vec2> pts;
            while (pts.size() < 8) {
                Vec2 p{coord(rng), coord(rng)};
                if (std::none_of(pts.begin(), pts.end(), [&](Vec2 q_) { return q_ == p; }))
                    pts.push_back(p);
            }
            const FinitePointSpace space(pts);
            IndexSet a;
            for (std::size_t i = 0; i < space.size(); ++i)
                if (rng() % 2 == 0) a.push_back(i);
            if (a.empty()) a.push_back(0);
            const TypeSet& q = type_sets[iter % type_sets.size()];
            CAPTURE(iter);
            REQUIRE(is_type_q_connected(space, a, q) == oracle_connected(space, a, q));
        }
    }
}

TEST_CASE("connected components") {
    const TypeSet disk1({TypeTag::disk(1.0)});

    SUBCASE("empty input") {
        const FinitePointSpace space({{0, 0}});
        CHECK(connected_components(space, {}, disk1).empty());
    }
    SUBCASE("two far clusters") {
        const FinitePointSpace space(
            {{0, 0}, {0.5, 0}, {0.5, 0.5}, {10, 10}, {10.5, 10}, {10, 10.5}});
        const auto comps = connected_components(space, {0, 1, 2, 3, 4, 5}, disk1);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0] == IndexSet{0, 1, 2});  // smaller lexicographic minimum first
        CHECK(comps[1] == IndexSet{3, 4, 5});
    }
    SUBCASE("a chain stays whole") {
        std::vector<Vec2> pts;
        for (int i = 0; i < 6; ++i) pts.push_back({0.9 * i, 0.0});
        const FinitePointSpace space(pts);
        const auto comps = connected_components(space, {0, 1, 2, 3, 4, 5}, disk1);
        CHECK(comps.size() == 1);
    }
    SUBCASE("partition invariants") {
        std::mt19937 rng(29);
        std::uniform_real_distribution<double> coord(-3.0, 3.0);
        std::vector<Vec2> pts;
        while (pts.size() < 10) {
            Vec2 p{coord(rng), coord(rng)};
            if (std::none_of(pts.begin(), pts.end(), [&](Vec2 q_) { return q_ == p; }))
                pts.push_back(p);
        }
        const FinitePointSpace space(pts);
        IndexSet a;
        for (std::size_t i = 0; i < space.size(); ++i) a.push_back(i);
        const auto comps = connected_components(space, a, disk1);
        IndexSet seen;
        for (const IndexSet& c : comps) {
            CHECK(is_type_q_connected(space, c, disk1));
            for (std::size_t i : c) CHECK(!std::binary_search(seen.begin(), seen.end(), i));
            seen.insert(seen.end(), c.begin(), c.end());
            std::sort(seen.begin(), seen.end());
        }
        CHECK(seen == a);
        for (std::size_t i = 0; i < comps.size(); ++i) {
            for (std::size_t j = i + 1; j < comps.size(); ++j) {
                IndexSet merged = comps[i];
                merged.insert(merged.end(), comps[j].begin(), comps[j].end());
                std::sort(merged.begin(), merged.end());
                CHECK_FALSE(is_type_q_connected(space, merged, disk1));
            }
        }
    }
}
