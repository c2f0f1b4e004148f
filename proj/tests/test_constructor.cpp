#include <doctest.h>

#include "urd/catalog.hpp"
#include "urd/constructor.hpp"
#include "urd/format.hpp"
#include "urd/verifier.hpp"

using namespace urd;

namespace {

Ingredients& shared_ingredients() {
    static Ingredients ing(nullptr);
    return ing;
}

Certificate build(std::uint32_t v, ClassPair p) { return Engine(shared_ingredients()).construct_urd(v, p); }

}  // namespace

TEST_CASE("plans for worked examples") {
    auto plan = solve_plan(48, {2, 60});
    CHECK(plan.route == Route::GroupFill);
    CHECK(plan.g == 12);
    CHECK(plan.u == 4);
    CHECK(plan.t == 12);
    CHECK(plan.group_fill == ClassPair{2, 12});
    CHECK(plan.a == 0);

    plan = solve_plan(16, {15, 0});
    CHECK(plan.route == Route::GroupFill);
    CHECK(plan.a == 4);
    CHECK(plan.group_fill == ClassPair{3, 0});

    plan = solve_plan(20, {19, 0});
    CHECK(plan.route == Route::HoleFill);
    CHECK(plan.partial == ClassPair{7, 0});
    CHECK(plan.full == ClassPair{12, 0});

    plan = solve_plan(24, {23, 0});
    CHECK(plan.route == Route::GroupReplace);
    CHECK(plan.urgdd_profile == ClassPair{12, 0});
    CHECK(plan.group_fill == ClassPair{11, 0});

    plan = solve_plan(12, {5, 8});
    CHECK(plan.route == Route::Direct);
    CHECK(plan.designator == "URD(12;5,8)");

    plan = solve_plan(44, {22, 28});
    CHECK(plan.route == Route::FrameExpand);
    CHECK(plan.n == 3);
    CHECK(plan.partial == ClassPair{4, 4});
    CHECK(plan.per_point == std::vector<ClassPair>{{12, 0}, {6, 8}, {0, 16}});

    plan = solve_plan(44, {43, 0});
    CHECK(plan.partial == ClassPair{7, 0});
    CHECK(plan.per_point == std::vector<ClassPair>(3, {12, 0}));

    plan = solve_plan(44, {1, 56});
    CHECK(plan.partial == ClassPair{1, 8});
    CHECK(plan.per_point == std::vector<ClassPair>(3, {0, 16}));

    CHECK_THROWS_AS(solve_plan(24, {18, 8}), Inadmissible);
    CHECK_THROWS_AS(solve_plan(10, {9, 0}), Inadmissible);
    CHECK_FALSE(plan.describe().empty());
}

TEST_CASE("plan choices add up to the target") {
    for (std::uint32_t v = 4; v <= 200; v += 4)
        for (const auto& p : spectrum_set(v).pairs) {
            const Plan plan = solve_plan(v, p);
            INFO(plan.describe());
            switch (plan.route) {
                case Route::Direct: CHECK(lookup(plan.designator).claimed.full() == p); break;
                case Route::GroupReplace: CHECK(plan.urgdd_profile + plan.group_fill == p); break;
                case Route::HoleFill: CHECK(plan.partial + plan.full == p); break;
                case Route::GroupFill:
                    CHECK(plan.g * plan.u == v);
                    CHECK(plan.t == plan.g * (plan.u - 1) / 3);
                    CHECK(plan.group_fill.r + 3 * plan.a == p.r);
                    CHECK(plan.group_fill.s + 4 * (plan.t - plan.a) == p.s);
                    CHECK(admissible(plan.g, plan.group_fill));
                    break;
                case Route::FrameExpand: {
                    CHECK(plan.n == (v - 8) / 12);
                    ClassPair sum = plan.partial;
                    for (const auto& q : plan.per_point) sum = sum + q;
                    CHECK(sum == p);
                    break;
                }
            }
        }
}

TEST_CASE("inflate_rgdd") {
    const auto rgdd = shared_ingredients().provide(IngredientKey::rgdd4(4, 4));
    const auto& c30 = lookup("URD(4;3,0)");
    const auto& c04 = lookup("URD(4;0,4)");
    const std::vector<Certificate> blocks{c30, c30, c04, c04};
    const std::vector<Certificate> group{c04};
    const auto c = inflate_rgdd(rgdd, blocks, group);
    CHECK(verify(c).passed);
    CHECK(c.claimed.full() == ClassPair{6, 12});

    const std::vector<Certificate> mixed{c30, c04, c04, c04};
    CHECK_THROWS_AS(inflate_rgdd(rgdd, blocks, mixed), Error);
    const std::vector<Certificate> short_blocks{c30, c30, c04};
    CHECK_THROWS_AS(inflate_rgdd(rgdd, short_blocks, group), Error);
}

TEST_CASE("replace_groups rejects differing group fills") {
    const auto& urgdd = lookup("URGDD(12^2;12,0)");
    const std::vector<Certificate> same{lookup("URD(12;5,8)")};
    const auto c = replace_groups(urgdd, same);
    CHECK(verify(c).passed);
    CHECK(c.claimed.full() == ClassPair{17, 8});
    const std::vector<Certificate> differ{lookup("URD(12;5,8)"), lookup("URD(12;2,12)")};
    CHECK_THROWS_AS(replace_groups(urgdd, differ), Error);
}

TEST_CASE("fill_hole over every partial / full pair") {
    for (const auto& p : kIurd20Partials) {
        const auto hole = build(8, p);
        for (const auto& f : kIurd20Fulls) {
            const auto c = fill_hole(lookup(iurd20_designator(p, f)), hole);
            INFO(iurd20_designator(p, f));
            CHECK(verify(c).passed);
            CHECK(c.claimed.full() == p + f);
            CHECK(c.claimed.partial() == ClassPair{0, 0});
        }
    }
    CHECK(fill_hole(lookup(iurd20_designator({1, 8}, {12, 0})), lookup("URD(8;1,8)")).claimed.full() ==
          ClassPair{13, 8});
    CHECK_THROWS_AS(fill_hole(lookup(iurd20_designator({7, 0}, {12, 0})), build(8, {4, 4})), Error);
}

TEST_CASE("frame expansion at v = 44") {
    const std::vector<ClassPair> all_cycles(3, {12, 0});
    const auto a = frame_expand(3, {7, 0}, all_cycles, build(8, {7, 0}));
    CHECK(verify(a).passed);
    CHECK(a.claimed.full() == ClassPair{43, 0});

    const std::vector<ClassPair> mixed{{12, 0}, {6, 8}, {0, 16}};
    const auto b = frame_expand(3, {4, 4}, mixed, build(8, {4, 4}));
    CHECK(verify(b).passed);
    CHECK(b.claimed.full() == ClassPair{22, 28});
    for (const auto& cl : b.classes) CHECK(cl.full());

    CHECK_THROWS_AS(frame_expand(3, {4, 4}, mixed, build(8, {7, 0})), Error);
    const std::vector<ClassPair> odd{{12, 0}, {9, 4}, {0, 16}};
    CHECK_THROWS_AS(frame_expand(3, {4, 4}, odd, build(8, {4, 4})), Error);
}

TEST_CASE("end to end through v = 32") {
    for (std::uint32_t v : {4u, 8u, 12u, 16u, 20u, 24u, 28u, 32u})
        for (const auto& p : spectrum_set(v).pairs) {
            const auto c = build(v, p);
            INFO("v=" << v << " " << p.str());
            const auto r = verify(c);
            CHECK(r.passed);
            CHECK(c.claimed == Claimed{p.r, p.s, 0, 0});
            CHECK(c.target == TargetGraph::complete(v, 2));
        }
}

TEST_CASE("direct route returns the catalog design") {
    const auto c = build(12, {5, 8});
    CHECK(c.classes.size() == lookup("URD(12;5,8)").classes.size());
    CHECK(write_certificate(make_certificate(c.target, c.classes)) ==
          write_certificate(make_certificate(c.target, lookup("URD(12;5,8)").classes)));
}

TEST_CASE("construction is deterministic") {
    CHECK(write_certificate(build(28, {18, 12})) == write_certificate(build(28, {18, 12})));
}

TEST_CASE("inadmissible requests are refused before any work") {
    CHECK_THROWS_AS(build(24, {18, 8}), Inadmissible);
    CHECK_THROWS_AS(build(6, {5, 0}), Inadmissible);
}
