#include "urd/verifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "urd/kernels.hpp"

namespace urd {

const char* check_name(Check c) {
    switch (c) {
        case Check::WellFormed: return "well-formedness";
        case Check::Uniformity: return "class uniformity";
        case Check::Resolvability: return "class resolvability";
        case Check::EdgeCoverage: return "edge coverage";
        case Check::ClaimedCounts: return "claimed counts";
        case Check::PartialStructure: return "partial-class structure";
    }
    return "?";
}

std::string VerificationReport::text() const {
    std::ostringstream os;
    if (passed) {
        os << "PASS: " << classes << " classes, " << blocks << " blocks";
        return os.str();
    }
    os << "FAIL at check (" << int(*failed) << ") " << check_name(*failed);
    if (class_index) os << " [class " << *class_index;
    if (class_index && block_index) os << ", block " << *block_index;
    if (class_index) os << "]";
    os << ": " << detail;
    return os.str();
}

std::string VerificationReport::json() const {
    nlohmann::ordered_json j;
    j["passed"] = passed;
    j["check"] = failed ? nlohmann::ordered_json(int(*failed)) : nlohmann::ordered_json(nullptr);
    j["check_name"] = failed ? check_name(*failed) : "";
    j["class"] = class_index ? nlohmann::ordered_json(*class_index) : nlohmann::ordered_json(nullptr);
    j["block"] = block_index ? nlohmann::ordered_json(*block_index) : nlohmann::ordered_json(nullptr);
    j["detail"] = detail;
    j["uncovered"] = uncovered;
    j["overcovered"] = overcovered;
    j["classes"] = classes;
    j["blocks"] = blocks;
    return j.dump();
}

namespace {

struct Failure {
    Check check;
    std::string detail;
    std::optional<std::size_t> cls;
    std::optional<std::size_t> blk;
};

VerificationReport fail(VerificationReport r, Failure f) {
    r.passed = false;
    r.failed = f.check;
    r.detail = std::move(f.detail);
    r.class_index = f.cls;
    r.block_index = f.blk;
    return r;
}

std::optional<Failure> check_well_formed(const Certificate& c) {
    if (auto why = c.target.malformation()) return Failure{Check::WellFormed, "target: " + *why, {}, {}};
    const auto n = c.target.v;
    for (std::size_t ci = 0; ci < c.classes.size(); ++ci) {
        const auto& cl = c.classes[ci];
        for (std::size_t bi = 0; bi < cl.blocks.size(); ++bi) {
            const auto& b = cl.blocks[bi];
            for (Point p : b)
                if (p >= n)
                    return Failure{Check::WellFormed, "point " + std::to_string(p) + " out of range", ci, bi};
            if (!b.well_formed()) return Failure{Check::WellFormed, "repeated vertex in block", ci, bi};
        }
    }
    return std::nullopt;
}

std::optional<Failure> check_uniformity(const Certificate& c) {
    for (std::size_t ci = 0; ci < c.classes.size(); ++ci) {
        const auto& cl = c.classes[ci];
        for (std::size_t bi = 0; bi < cl.blocks.size(); ++bi)
            if (cl.blocks[bi].kind != cl.kind)
                return Failure{Check::Uniformity,
                               std::string("block kind ") + kind_name(cl.blocks[bi].kind) + " in " +
                                   kind_name(cl.kind) + " class",
                               ci, bi};
    }
    return std::nullopt;
}

std::optional<Failure> check_resolvability(const Certificate& c) {
    const auto n = c.target.v;
    std::vector<std::uint32_t> stamp(n, 0);  // stamp[p] == ci+1 when p is used by class ci
    for (std::size_t ci = 0; ci < c.classes.size(); ++ci) {
        const auto& cl = c.classes[ci];
        const auto tag = static_cast<std::uint32_t>(ci + 1);
        std::size_t expect = n;
        if (cl.missing) {
            for (Point p : *cl.missing) {
                if (p >= n) return Failure{Check::Resolvability, "missing point out of range", ci, {}};
                if (stamp[p] == tag) return Failure{Check::Resolvability, "missing point listed twice", ci, {}};
                stamp[p] = tag;
            }
            expect = n - cl.missing->size();
        }
        for (std::size_t bi = 0; bi < cl.blocks.size(); ++bi)
            for (Point p : cl.blocks[bi]) {
                if (stamp[p] == tag) {
                    const bool was_missing =
                        cl.missing && std::find(cl.missing->begin(), cl.missing->end(), p) != cl.missing->end();
                    return Failure{Check::Resolvability,
                                   "point " + std::to_string(p) +
                                       (was_missing ? " is declared missing but covered" : " covered twice"),
                                   ci, bi};
                }
                stamp[p] = tag;
            }
        if (cl.covered_points() != expect)
            return Failure{Check::Resolvability,
                           "class covers " + std::to_string(cl.covered_points()) + " points, expected " +
                               std::to_string(expect),
                           ci, {}};
    }
    return std::nullopt;
}

std::optional<Failure> check_claimed(const Certificate& c) {
    const Claimed t = tally(c.classes);
    if (t == c.claimed) return std::nullopt;
    std::ostringstream os;
    os << "claimed r=" << c.claimed.r << " s=" << c.claimed.s << " partial_r=" << c.claimed.partial_r
       << " partial_s=" << c.claimed.partial_s << " but classes give r=" << t.r << " s=" << t.s
       << " partial_r=" << t.partial_r << " partial_s=" << t.partial_s;
    return Failure{Check::ClaimedCounts, os.str(), {}, {}};
}

std::optional<Failure> check_partial_structure(const Certificate& c) {
    const auto& t = c.target;
    std::map<std::size_t, std::size_t> misses_per_group;
    for (std::size_t ci = 0; ci < c.classes.size(); ++ci) {
        const auto& cl = c.classes[ci];
        if (cl.full()) continue;
        std::vector<Point> miss = *cl.missing;
        std::sort(miss.begin(), miss.end());
        switch (t.variant) {
            case GraphVariant::Complete:
                return Failure{Check::PartialStructure, "complete target admits no partial classes", ci, {}};
            case GraphVariant::CompleteMinusHole:
                if (miss != t.hole)
                    return Failure{Check::PartialStructure, "partial class does not miss exactly the hole", ci, {}};
                break;
            case GraphVariant::Multipartite: {
                auto it = std::find(t.groups.begin(), t.groups.end(), miss);
                if (it == t.groups.end())
                    return Failure{Check::PartialStructure, "partial class does not miss exactly one group", ci,
                                   {}};
                ++misses_per_group[static_cast<std::size_t>(it - t.groups.begin())];
                break;
            }
        }
    }
    // Frame count rule |G|/(n-1) for complete blocks K_n.
    if (t.variant == GraphVariant::Multipartite && !misses_per_group.empty()) {
        std::optional<std::size_t> n;
        for (const auto& cl : c.classes) {
            if (cl.full()) continue;
            if (cl.kind == BlockKind::Edge2) n = 2;
            if (cl.kind == BlockKind::Complete4) n = 4;
        }
        if (n) {
            for (std::size_t gi = 0; gi < t.groups.size(); ++gi) {
                const std::size_t gsize = t.groups[gi].size();
                const std::size_t want = gsize % (*n - 1) == 0 ? gsize / (*n - 1) : std::size_t(-1);
                const std::size_t got = misses_per_group.count(gi) ? misses_per_group[gi] : 0;
                if (got != want)
                    return Failure{Check::PartialStructure,
                                   "group " + std::to_string(gi) + " is missed by " + std::to_string(got) +
                                       " partial classes, frame rule needs " +
                                       (want == std::size_t(-1) ? std::string("an integer") : std::to_string(want)),
                                   {}, {}};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

VerificationReport verify(const Certificate& c) {
    VerificationReport r;
    r.classes = c.classes.size();
    for (const auto& cl : c.classes) r.blocks += cl.blocks.size();

    if (auto f = check_well_formed(c)) return fail(r, *f);
    if (auto f = check_uniformity(c)) return fail(r, *f);
    if (auto f = check_resolvability(c)) return fail(r, *f);

    PairCounts got(c.target.v);
    for (const auto& cl : c.classes)
        for (const auto& b : cl.blocks) got.add_block(b);
    const PairCounts want = target_edge_multiset(c.target);
    const auto diff = kernels::compare_counts(got.raw(), want.raw());
    r.uncovered = diff.deficit;
    r.overcovered = diff.excess;
    if (!diff.equal()) {
        const auto a = static_cast<Point>(diff.first_mismatch / c.target.v);
        const auto b = static_cast<Point>(diff.first_mismatch % c.target.v);
        std::ostringstream os;
        os << diff.deficit << " edge copies uncovered, " << diff.excess << " over-covered; first at pair {" << a
           << "," << b << "}: covered " << int(got.get(a, b)) << " times, target " << int(want.get(a, b));
        return fail(r, {Check::EdgeCoverage, os.str(), {}, {}});
    }

    if (auto f = check_claimed(c)) return fail(r, *f);
    if (auto f = check_partial_structure(c)) return fail(r, *f);
    return r;
}

bool verify_equal_partial_coverage(std::span<const Certificate> certs) {
    if (certs.empty()) return true;
    const auto& t0 = certs.front().target;
    std::optional<PairCounts> ref;
    for (const auto& c : certs) {
        if (!(c.target == t0)) throw std::invalid_argument("verify_equal_partial_coverage: targets differ");
        PairCounts pc(t0.v);
        for (const auto& cl : c.classes)
            if (!cl.full())
                for (const auto& b : cl.blocks) pc.add_block(b);
        if (!ref)
            ref = std::move(pc);
        else if (!kernels::compare_counts(pc.raw(), ref->raw()).equal())
            return false;
    }
    return true;
}

}  // namespace urd
