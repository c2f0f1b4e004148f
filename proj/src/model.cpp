#include "urd/model.hpp"

#include <algorithm>
#include <numeric>

namespace urd {

const char* kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::Cycle4: return "C4";
        case BlockKind::Star3: return "K13";
        case BlockKind::Complete4: return "K4";
        case BlockKind::Edge2: return "K2";
    }
    return "?";
}

std::optional<BlockKind> kind_from_name(std::string_view name) {
    if (name == "C4") return BlockKind::Cycle4;
    if (name == "K13") return BlockKind::Star3;
    if (name == "K4") return BlockKind::Complete4;
    if (name == "K2") return BlockKind::Edge2;
    return std::nullopt;
}

Edge Edge::make(Point x, Point y) {
    if (x == y) throw MalformedBlock("edge joins point " + std::to_string(x) + " to itself");
    return x < y ? Edge{x, y} : Edge{y, x};
}

bool Block::contains(Point p) const { return std::find(begin(), end(), p) != end(); }

bool Block::well_formed() const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (v[i] == v[j]) return false;
    return true;
}

std::vector<Edge> block_edges(const Block& b) {
    if (!b.well_formed()) throw MalformedBlock("block has a repeated vertex");
    const auto& v = b.v;
    switch (b.kind) {
        case BlockKind::Cycle4:
            return {Edge::make(v[0], v[1]), Edge::make(v[1], v[2]), Edge::make(v[2], v[3]),
                    Edge::make(v[3], v[0])};
        case BlockKind::Star3:
            return {Edge::make(v[0], v[1]), Edge::make(v[0], v[2]), Edge::make(v[0], v[3])};
        case BlockKind::Complete4:
            return {Edge::make(v[0], v[1]), Edge::make(v[0], v[2]), Edge::make(v[0], v[3]),
                    Edge::make(v[1], v[2]), Edge::make(v[1], v[3]), Edge::make(v[2], v[3])};
        case BlockKind::Edge2:
            return {Edge::make(v[0], v[1])};
    }
    return {};
}

Block canonical_block(const Block& b) {
    Block out = b;
    switch (b.kind) {
        case BlockKind::Cycle4: {
            const auto& v = b.v;
            const auto lo = static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
            const Point next = v[(lo + 1) % 4];
            const Point prev = v[(lo + 3) % 4];
            // Walk from the minimum toward its smaller neighbour.
            const int step = next < prev ? 1 : 3;
            for (std::size_t i = 0; i < 4; ++i) out.v[i] = v[(lo + i * step) % 4];
            break;
        }
        case BlockKind::Star3:
            std::sort(out.v.begin() + 1, out.v.end());
            break;
        case BlockKind::Complete4:
            std::sort(out.v.begin(), out.v.end());
            break;
        case BlockKind::Edge2:
            if (out.v[1] < out.v[0]) std::swap(out.v[0], out.v[1]);
            out.v[2] = out.v[3] = 0;
            break;
    }
    return out;
}

Block relabel(const Block& b, const std::vector<Point>& map) {
    Block out = b;
    for (std::size_t i = 0; i < b.size(); ++i) out.v[i] = map.at(b.v[i]);
    return out;
}

std::size_t BlockClass::covered_points() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    return n;
}

BlockClass relabel(const BlockClass& c, const std::vector<Point>& map) {
    BlockClass out;
    out.kind = c.kind;
    out.blocks.reserve(c.blocks.size());
    for (const auto& b : c.blocks) out.blocks.push_back(relabel(b, map));
    if (c.missing) {
        std::vector<Point> miss;
        for (Point p : *c.missing) miss.push_back(map.at(p));
        std::sort(miss.begin(), miss.end());
        out.missing = std::move(miss);
    }
    return out;
}

TargetGraph TargetGraph::complete(std::uint32_t v, std::uint32_t lambda) {
    TargetGraph t;
    t.variant = GraphVariant::Complete;
    t.v = v;
    t.lambda = lambda;
    return t;
}

TargetGraph TargetGraph::multipartite(std::vector<std::vector<Point>> groups, std::uint32_t lambda) {
    TargetGraph t;
    t.variant = GraphVariant::Multipartite;
    t.lambda = lambda;
    for (auto& g : groups) {
        std::sort(g.begin(), g.end());
        t.v += static_cast<std::uint32_t>(g.size());
    }
    std::sort(groups.begin(), groups.end());
    t.groups = std::move(groups);
    return t;
}

TargetGraph TargetGraph::uniform_multipartite(std::uint32_t g, std::uint32_t u, std::uint32_t lambda) {
    std::vector<std::vector<Point>> groups(u);
    for (std::uint32_t j = 0; j < u; ++j) {
        groups[j].resize(g);
        std::iota(groups[j].begin(), groups[j].end(), j * g);
    }
    return multipartite(std::move(groups), lambda);
}

TargetGraph TargetGraph::complete_minus_hole(std::uint32_t v, std::vector<Point> hole, std::uint32_t lambda) {
    TargetGraph t;
    t.variant = GraphVariant::CompleteMinusHole;
    t.v = v;
    t.lambda = lambda;
    std::sort(hole.begin(), hole.end());
    t.hole = std::move(hole);
    return t;
}

std::optional<std::string> TargetGraph::malformation() const {
    if (lambda == 0 || lambda > 255) return "lambda out of range";
    switch (variant) {
        case GraphVariant::Complete:
            if (!groups.empty() || !hole.empty()) return "complete graph carries groups or hole";
            break;
        case GraphVariant::Multipartite: {
            if (!hole.empty()) return "multipartite graph carries a hole";
            std::vector<int> seen(v, 0);
            std::size_t total = 0;
            for (const auto& g : groups) {
                if (g.empty()) return "empty group";
                for (Point p : g) {
                    if (p >= v) return "group point " + std::to_string(p) + " out of range";
                    if (seen[p]++) return "point " + std::to_string(p) + " in two groups";
                }
                total += g.size();
            }
            if (total != v) return "groups do not partition the point set";
            break;
        }
        case GraphVariant::CompleteMinusHole: {
            if (!groups.empty()) return "holed graph carries groups";
            if (hole.size() >= v) return "hole is not a proper subset";
            for (std::size_t i = 0; i < hole.size(); ++i) {
                if (hole[i] >= v) return "hole point out of range";
                if (i && hole[i] == hole[i - 1]) return "repeated hole point";
            }
            break;
        }
    }
    return std::nullopt;
}

void PairCounts::add(const Edge& e, int delta) {
    auto& c = cells_[index(e.a, e.b)];
    const int next = std::clamp(int(c) + delta, 0, 255);
    c = static_cast<std::uint8_t>(next);
}

void PairCounts::add_block(const Block& b, int delta) {
    for (const auto& e : block_edges(b)) add(e, delta);
}

std::uint64_t PairCounts::total() const {
    return std::accumulate(cells_.begin(), cells_.end(), std::uint64_t{0});
}

PairCounts target_edge_multiset(const TargetGraph& t) {
    PairCounts pc(t.v);
    const auto lam = static_cast<std::uint8_t>(t.lambda);
    std::vector<std::uint32_t> part(t.v, 0);
    if (t.variant == GraphVariant::Multipartite) {
        for (std::uint32_t gi = 0; gi < t.groups.size(); ++gi)
            for (Point p : t.groups[gi]) part[p] = gi;
    } else if (t.variant == GraphVariant::CompleteMinusHole) {
        // Hole points share one part; everything else is a singleton.
        for (Point p = 0; p < t.v; ++p) part[p] = p + 1;
        for (Point p : t.hole) part[p] = 0;
    } else {
        std::iota(part.begin(), part.end(), 0u);
    }
    for (Point a = 0; a < t.v; ++a)
        for (Point b = a + 1; b < t.v; ++b)
            if (part[a] != part[b]) pc.set(a, b, lam);
    return pc;
}

Claimed tally(const std::vector<BlockClass>& classes) {
    Claimed c;
    for (const auto& cl : classes) {
        const bool cyc = cl.kind == BlockKind::Cycle4;
        const bool star = cl.kind == BlockKind::Star3;
        if (cl.full()) {
            c.r += cyc;
            c.s += star;
        } else {
            c.partial_r += cyc;
            c.partial_s += star;
        }
    }
    return c;
}

Certificate make_certificate(TargetGraph target, std::vector<BlockClass> classes,
                             std::vector<std::string> provenance) {
    Certificate c;
    c.target = std::move(target);
    c.classes = std::move(classes);
    c.provenance = std::move(provenance);
    c.retally();
    return c;
}

}  // namespace urd
