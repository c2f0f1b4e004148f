#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "urd/spectrum.hpp"

namespace urd {

// Points are dense labels 0..n-1. Group and hole structure lives in
// TargetGraph, never in the labels themselves.
using Point = std::uint32_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedBlock : public Error {
public:
    using Error::Error;
};

// Cycle4 and Star3 are the design blocks. Complete4 and Edge2 only occur in
// auxiliary designs (4-RGDDs, near-one-factorizations).
enum class BlockKind : std::uint8_t { Cycle4, Star3, Complete4, Edge2 };

constexpr std::size_t arity(BlockKind k) { return k == BlockKind::Edge2 ? 2 : 4; }
const char* kind_name(BlockKind k);  // "C4", "K13", "K4", "K2"
std::optional<BlockKind> kind_from_name(std::string_view name);

struct Edge {
    Point a = 0;
    Point b = 0;

    // Canonical: smaller label first. Throws MalformedBlock on a loop.
    static Edge make(Point x, Point y);
    auto operator<=>(const Edge&) const = default;
};

struct Block {
    BlockKind kind = BlockKind::Cycle4;
    // Cycle4: cyclic order. Star3: center first. Unused tail slots are zero.
    std::array<Point, 4> v{};

    static Block cycle(Point a, Point b, Point c, Point d) { return {BlockKind::Cycle4, {a, b, c, d}}; }
    static Block star(Point center, Point x, Point y, Point z) { return {BlockKind::Star3, {center, x, y, z}}; }
    static Block k4(Point a, Point b, Point c, Point d) { return {BlockKind::Complete4, {a, b, c, d}}; }
    static Block edge(Point a, Point b) { return {BlockKind::Edge2, {a, b, 0, 0}}; }

    std::size_t size() const { return arity(kind); }
    const Point* begin() const { return v.data(); }
    const Point* end() const { return v.data() + size(); }
    bool contains(Point p) const;
    bool well_formed() const;  // distinct vertices

    auto operator<=>(const Block&) const = default;
};

// Edge multiset of a block per the definitional edge sets.
// Throws MalformedBlock when two vertices coincide.
std::vector<Edge> block_edges(const Block& b);

// Representative under cycle rotation/reflection (Cycle4), leaf order (Star3)
// or vertex order (Complete4, Edge2). Idempotent; preserves block_edges.
Block canonical_block(const Block& b);

// Applies a point relabeling. map[p] is the new label of p.
Block relabel(const Block& b, const std::vector<Point>& map);

struct BlockClass {
    BlockKind kind = BlockKind::Cycle4;
    std::vector<Block> blocks;
    // nullopt for a full class; otherwise the points the class leaves out.
    std::optional<std::vector<Point>> missing;

    bool full() const { return !missing.has_value(); }
    std::size_t covered_points() const;
};

BlockClass relabel(const BlockClass& c, const std::vector<Point>& map);

enum class GraphVariant : std::uint8_t { Complete, Multipartite, CompleteMinusHole };

struct TargetGraph {
    GraphVariant variant = GraphVariant::Complete;
    std::uint32_t v = 0;
    std::uint32_t lambda = 2;
    std::vector<std::vector<Point>> groups;  // Multipartite only
    std::vector<Point> hole;                 // CompleteMinusHole only

    static TargetGraph complete(std::uint32_t v, std::uint32_t lambda = 2);
    static TargetGraph multipartite(std::vector<std::vector<Point>> groups, std::uint32_t lambda = 2);
    // u groups of size g with contiguous labels: group j = {j*g, ..., j*g + g - 1}.
    static TargetGraph uniform_multipartite(std::uint32_t g, std::uint32_t u, std::uint32_t lambda = 2);
    static TargetGraph complete_minus_hole(std::uint32_t v, std::vector<Point> hole, std::uint32_t lambda = 2);

    // Groups partition the point set, hole is a proper subset, labels in range.
    // Returns an explanation on failure.
    std::optional<std::string> malformation() const;

    bool operator==(const TargetGraph&) const = default;
};

// Dense symmetric pair-count table. Only cells (a,b) with a < b are used, so
// two tables compare equal iff their edge multisets agree.
class PairCounts {
public:
    PairCounts() = default;
    explicit PairCounts(std::uint32_t n) : n_(n), cells_(std::size_t(n) * n, 0) {}

    std::uint32_t points() const { return n_; }
    std::uint8_t get(Point x, Point y) const { return cells_[index(x, y)]; }
    void set(Point x, Point y, std::uint8_t c) { cells_[index(x, y)] = c; }
    // Saturates at 255 so over-coverage is never hidden by wraparound.
    void add(const Edge& e, int delta = 1);
    void add_block(const Block& b, int delta = 1);

    const std::vector<std::uint8_t>& raw() const { return cells_; }
    std::vector<std::uint8_t>& raw() { return cells_; }
    std::uint64_t total() const;

    bool operator==(const PairCounts&) const = default;

private:
    std::size_t index(Point x, Point y) const {
        return x < y ? std::size_t(x) * n_ + y : std::size_t(y) * n_ + x;
    }
    std::uint32_t n_ = 0;
    std::vector<std::uint8_t> cells_;
};

// lambda copies of every edge of the underlying simple graph.
PairCounts target_edge_multiset(const TargetGraph& t);

struct Claimed {
    std::uint32_t r = 0;
    std::uint32_t s = 0;
    std::uint32_t partial_r = 0;
    std::uint32_t partial_s = 0;

    ClassPair full() const { return {r, s}; }
    ClassPair partial() const { return {partial_r, partial_s}; }
    bool operator==(const Claimed&) const = default;
};

Claimed tally(const std::vector<BlockClass>& classes);

struct Certificate {
    TargetGraph target;
    std::vector<BlockClass> classes;
    Claimed claimed;
    std::vector<std::string> provenance;

    // Recomputes `claimed` from the classes.
    void retally() { claimed = tally(classes); }
};

// Builds a certificate and fills `claimed` from the class list.
Certificate make_certificate(TargetGraph target, std::vector<BlockClass> classes,
                             std::vector<std::string> provenance = {});

}  // namespace urd
