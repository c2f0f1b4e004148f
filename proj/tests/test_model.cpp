#include <doctest.h>

#include <algorithm>
#include <random>

#include "urd/model.hpp"

using namespace urd;

namespace {

std::vector<Edge> sorted_edges(const Block& b) {
    auto e = block_edges(b);
    std::sort(e.begin(), e.end());
    return e;
}

std::vector<Edge> edges(std::initializer_list<std::pair<Point, Point>> list) {
    std::vector<Edge> out;
    for (auto [x, y] : list) out.push_back(Edge::make(x, y));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("block edges follow the definitions") {
    CHECK(sorted_edges(Block::star(0, 1, 2, 3)) == edges({{0, 1}, {0, 2}, {0, 3}}));
    CHECK(sorted_edges(Block::cycle(0, 1, 2, 3)) == edges({{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    CHECK(sorted_edges(Block::cycle(0, 2, 1, 3)) == edges({{0, 2}, {2, 1}, {1, 3}, {3, 0}}));
    CHECK(block_edges(Block::k4(0, 1, 2, 3)).size() == 6);
    CHECK(block_edges(Block::edge(4, 2)).size() == 1);
    CHECK_THROWS_AS(block_edges(Block::cycle(0, 1, 1, 3)), MalformedBlock);
    CHECK_THROWS_AS(Edge::make(2, 2), MalformedBlock);
}

TEST_CASE("canonical blocks") {
    CHECK(canonical_block(Block::cycle(3, 2, 1, 0)) == Block::cycle(0, 1, 2, 3));
    CHECK(canonical_block(Block::star(0, 3, 1, 2)) == Block::star(0, 1, 2, 3));
    std::mt19937 rng(7);
    for (int i = 0; i < 2000; ++i) {
        std::array<Point, 4> v{0, 1, 2, 3};
        for (auto& x : v) x += 4 * (rng() % 5);
        std::shuffle(v.begin(), v.end(), rng);
        for (auto kind : {BlockKind::Cycle4, BlockKind::Star3, BlockKind::Complete4}) {
            const Block b{kind, v};
            const Block c = canonical_block(b);
            CHECK(canonical_block(c) == c);
            CHECK(sorted_edges(c) == sorted_edges(b));
        }
    }
    // All 8 rotations and reflections of one cycle share a representative.
    const Block base = Block::cycle(5, 9, 2, 7);
    std::array<Point, 4> v = base.v;
    for (int flip = 0; flip < 2; ++flip) {
        for (int rot = 0; rot < 4; ++rot) {
            std::rotate(v.begin(), v.begin() + 1, v.end());
            CHECK(canonical_block(Block{BlockKind::Cycle4, v}) == canonical_block(base));
        }
        std::reverse(v.begin(), v.end());
    }
}

TEST_CASE("target edge multisets") {
    const auto k4 = target_edge_multiset(TargetGraph::complete(4, 2));
    CHECK(k4.total() == 12);
    for (Point x = 0; x < 4; ++x)
        for (Point y = x + 1; y < 4; ++y) CHECK(k4.get(x, y) == 2);
    CHECK(target_edge_multiset(TargetGraph::uniform_multipartite(12, 2, 2)).total() == 288);
    std::vector<Point> hole{0, 1, 2, 3, 4, 5, 6, 7};
    const auto h = target_edge_multiset(TargetGraph::complete_minus_hole(20, hole, 2));
    CHECK(h.total() == 324);
    CHECK(h.get(0, 7) == 0);
    CHECK(h.get(7, 8) == 2);
}

TEST_CASE("target malformations") {
    CHECK_FALSE(TargetGraph::complete(8).malformation());
    CHECK(TargetGraph::multipartite({{0, 1}, {1, 2}}).malformation());
    CHECK(TargetGraph::multipartite({{0, 1}, {3, 4}}).malformation());
    CHECK(TargetGraph::complete_minus_hole(4, {0, 1, 2, 3}).malformation());
    CHECK(TargetGraph::complete_minus_hole(4, {0, 9}).malformation());
}

TEST_CASE("tally and relabel") {
    BlockClass c1{BlockKind::Cycle4, {Block::cycle(0, 1, 2, 3)}, std::nullopt};
    BlockClass s1{BlockKind::Star3, {Block::star(0, 1, 2, 3)}, std::nullopt};
    BlockClass p1{BlockKind::Star3, {Block::star(4, 5, 6, 7)}, std::vector<Point>{0, 1, 2, 3}};
    const Claimed t = tally({c1, s1, s1, p1});
    CHECK(t == Claimed{1, 2, 0, 1});
    CHECK(p1.covered_points() == 4);

    const std::vector<Point> map{7, 6, 5, 4, 3, 2, 1, 0};
    const BlockClass q = relabel(p1, map);
    CHECK(q.blocks[0] == Block::star(3, 2, 1, 0));
    CHECK(*q.missing == std::vector<Point>{4, 5, 6, 7});
}
