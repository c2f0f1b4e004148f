#include <doctest.h>

#include <random>

#include "urd/catalog.hpp"
#include "urd/format.hpp"
#include "urd/search.hpp"
#include "urd/verifier.hpp"

using namespace urd;
namespace search = urd::search;

namespace {

std::vector<search::ClassSpec> full_specs(std::uint32_t r, std::uint32_t s) {
    std::vector<search::ClassSpec> out(r, {BlockKind::Cycle4, std::nullopt});
    out.insert(out.end(), s, {BlockKind::Star3, std::nullopt});
    return out;
}

search::Options with_nodes(std::uint64_t nodes, bool pruning = true) {
    search::Options o;
    o.budget.max_nodes = nodes;
    o.budget.max_seconds = 60;
    o.pruning = pruning;
    return o;
}

}  // namespace

TEST_CASE("small URDs from scratch") {
    const auto cap = target_edge_multiset(TargetGraph::complete(8, 2));
    for (const auto& p : spectrum_set(8).pairs) {
        const auto specs = full_specs(p.r, p.s);
        const auto res = search::find_classes(cap, specs);
        REQUIRE(res.found());
        const auto c = make_certificate(TargetGraph::complete(8, 2), *res.value);
        CHECK(verify(c).passed);
        CHECK(c.claimed.full() == p);
    }
}

TEST_CASE("pruning keeps satisfiability (randomized small instances)") {
    // Residual capacities of catalog designs after removing a few random
    // classes. The removed kinds are feasible by construction; trading three
    // cycle classes for four star classes (same edge count) may or may not be.
    std::mt19937 rng(31337);
    const char* sources[] = {"URD(8;1,8)", "URD(12;5,8)", "URD(12;2,12)", "URD(4;3,0)", "URD(4;0,4)"};
    int compared = 0, feasible = 0;
    for (int iter = 0; iter < 80; ++iter) {
        const auto& design = lookup(sources[rng() % std::size(sources)]);
        auto classes = design.classes;
        std::shuffle(classes.begin(), classes.end(), rng);
        const std::size_t take = std::min<std::size_t>(classes.size(), 2 + rng() % 4);
        PairCounts cap(design.target.v);
        std::vector<search::ClassSpec> specs;
        std::size_t cycles = 0;
        for (std::size_t i = 0; i < take; ++i) {
            for (const auto& b : classes[i].blocks) cap.add_block(b);
            cycles += classes[i].kind == BlockKind::Cycle4;
        }
        std::size_t stars = take - cycles;
        if (rng() % 2 && cycles >= 3) {
            cycles -= 3;
            stars += 4;
        } else if (rng() % 2 && stars >= 4) {
            stars -= 4;
            cycles += 3;
        }
        specs = full_specs(static_cast<std::uint32_t>(cycles), static_cast<std::uint32_t>(stars));
        std::shuffle(specs.begin(), specs.end(), rng);

        const auto on = search::find_classes(cap, specs, with_nodes(300'000, true));
        const auto off = search::find_classes(cap, specs, with_nodes(300'000, false));
        const bool on_done = on.found() || on.stats.tree_exhausted;
        const bool off_done = off.found() || off.stats.tree_exhausted;
        if (!on_done || !off_done) continue;
        ++compared;
        feasible += on.found();
        CHECK(on.found() == off.found());
        for (const auto* r : {&on, &off}) {
            if (!r->found()) continue;
            PairCounts used(design.target.v);
            for (const auto& cl : *r->value)
                for (const auto& b : cl.blocks) used.add_block(b);
            CHECK(used == cap);
        }
    }
    MESSAGE("compared " << compared << " instances, " << feasible << " feasible");
    CHECK(compared >= 20);
    CHECK(feasible < compared);
}

TEST_CASE("pruning never loses a known design") {
    const auto cap = target_edge_multiset(TargetGraph::complete(8, 2));
    for (const auto& p : spectrum_set(8).pairs) {
        const auto specs = full_specs(p.r, p.s);
        CHECK(search::find_classes(cap, specs, with_nodes(50'000'000, false)).found());
    }
}

TEST_CASE("determinism under fixed seed and budget") {
    for (std::uint64_t seed : {0u, 5u}) {
        search::Options o;
        o.seed = seed;
        const auto a = search::find_resolvable_gdd(4, 7, 1, o);
        const auto b = search::find_resolvable_gdd(4, 7, 1, o);
        REQUIRE(a.found());
        REQUIRE(b.found());
        CHECK(write_certificate(*a.value) == write_certificate(*b.value));
        CHECK(a.stats.nodes == b.stats.nodes);
    }
}

TEST_CASE("completing the printed (1,8) design on 8 points") {
    const auto& entry = catalog_entry("URD(8;1,8)");
    REQUIRE(entry.as_printed);
    const auto& printed = *entry.as_printed;
    auto cap = target_edge_multiset(printed.target);
    for (const auto& cl : printed.classes)
        for (const auto& b : cl.blocks) cap.add_block(b, -1);
    const std::uint32_t missing_stars = 8 - printed.claimed.s;
    CHECK(missing_stars == 2);
    const auto specs = full_specs(0, missing_stars);
    const auto res = search::find_classes(cap, specs);
    REQUIRE(res.found());
    auto classes = printed.classes;
    classes.insert(classes.end(), res.value->begin(), res.value->end());
    const auto done = make_certificate(printed.target, classes);
    CHECK(verify(done).passed);
    CHECK(done.claimed.full() == ClassPair{1, 8});
}

TEST_CASE("resolvable GDDs") {
    auto r = search::find_resolvable_gdd(4, 4, 1);
    REQUIRE(r.found());
    CHECK(r.value->classes.size() == 4);
    CHECK(verify(*r.value).passed);
    CHECK(r.value->target == search::residue_groups(4, 4, 1));

    r = search::find_resolvable_gdd(12, 4, 1);
    REQUIRE(r.found());
    CHECK(r.value->classes.size() == 12);
    CHECK(verify(*r.value).passed);

    r = search::find_resolvable_gdd(4, 4, 2);
    REQUIRE(r.found());
    CHECK(r.value->classes.size() == 8);
    CHECK(verify(*r.value).passed);

    CHECK_FALSE(search::find_resolvable_gdd(4, 3, 1).found());
    CHECK_FALSE(search::find_resolvable_gdd(4, 5, 1).found());  // g(u-1)/3 not integral
}

TEST_CASE("each GDD mode yields verified designs") {
    struct Case {
        search::GddMode mode;
        std::uint32_t g, u;
    };
    const Case cases[] = {{search::GddMode::Plain, 4, 4}, {search::GddMode::Cyclic, 4, 7},
                          {search::GddMode::DifferenceMatrix, 8, 4},
                          {search::GddMode::DifferenceMatrix, 12, 4}};
    for (const auto& c : cases) {
        const auto r = search::find_resolvable_gdd(c.g, c.u, 1, {}, c.mode);
        INFO(c.g << "^" << c.u << " mode " << int(c.mode));
        REQUIRE(r.found());
        CHECK(r.value->classes.size() == c.g * (c.u - 1) / 3);
        CHECK(verify(*r.value).passed);
    }
}

TEST_CASE("difference matrices") {
    const auto check_dm = [](std::uint32_t g, const std::vector<std::vector<std::uint32_t>>& m) {
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                // Independent check only for cyclic groups (odd g).
                std::vector<int> seen(g, 0);
                for (std::size_t c = 0; c < g; ++c) ++seen[(m[i][c] + g - m[j][c]) % g];
                for (int s : seen) CHECK(s == 1);
            }
    };
    auto d = search::find_difference_matrix(3, 3);
    REQUIRE(d.found());
    check_dm(3, *d.value);
    d = search::find_difference_matrix(5, 5);
    REQUIRE(d.found());
    check_dm(5, *d.value);
    CHECK(search::find_difference_matrix(4, 4).found());
    // A (g,k,1) difference matrix needs k <= g; a cyclic Sylow 2-subgroup rules out g = 2.
    d = search::find_difference_matrix(4, 5);
    CHECK_FALSE(d.found());
    CHECK(d.stats.tree_exhausted);
    d = search::find_difference_matrix(2, 3);
    CHECK_FALSE(d.found());
    CHECK(d.stats.tree_exhausted);
}

TEST_CASE("uniform factorization of 2K_{4,4,4} into cycles") {
    const std::vector<BlockKind> kinds(8, BlockKind::Cycle4);
    const auto r = search::find_uniform_factorization(search::residue_groups(4, 3, 2), kinds);
    REQUIRE(r.found());
    CHECK(r.value->claimed.full() == ClassPair{8, 0});
    CHECK(verify(*r.value).passed);
}

TEST_CASE("developed classes under a point permutation") {
    // K_{4,4} on even / odd points: two cycle classes, the second the image of the first under p -> p+4.
    const auto t = search::residue_groups(4, 2, 1);
    std::vector<Point> sigma(8);
    for (Point p = 0; p < 8; ++p) sigma[p] = (p + 4) % 8;
    const std::vector<search::ClassSpec> base{{BlockKind::Cycle4, std::nullopt}};
    const auto r = search::find_developed_classes(target_edge_multiset(t), base, sigma);
    REQUIRE(r.found());
    REQUIRE(r.value->size() == 2);
    for (const auto& b : (*r.value)[0].blocks) {
        Block img = b;
        for (auto& x : img.v) x = sigma[x];
        const auto& next = (*r.value)[1].blocks;
        CHECK(std::find_if(next.begin(), next.end(), [&](const Block& y) {
                  return canonical_block(y) == canonical_block(img);
              }) != next.end());
    }
    CHECK(verify(make_certificate(t, *r.value)).passed);
}

TEST_CASE("budget exhaustion is reported as not found") {
    const auto r = search::find_resolvable_gdd(4, 7, 1, with_nodes(5), search::GddMode::Plain);
    CHECK_FALSE(r.found());
    CHECK_FALSE(r.stats.tree_exhausted);
}
