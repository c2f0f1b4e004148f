#include "urd/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "urd/format.hpp"
#include "urd/ingredients.hpp"
#include "urd/verifier.hpp"

namespace urd {

namespace {

Block C(Point a, Point b, Point c, Point d) { return Block::cycle(a, b, c, d); }
Block S(Point c, Point x, Point y, Point z) { return Block::star(c, x, y, z); }

using Rows = std::vector<std::vector<Block>>;

std::vector<BlockClass> full_classes(const Rows& rows) {
    std::vector<BlockClass> out;
    for (const auto& r : rows) {
        BlockClass c;
        c.kind = r.front().kind;
        c.blocks = r;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<BlockClass> concat(std::vector<BlockClass> a, const std::vector<BlockClass>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// ---- 2K_4 ------------------------------------------------------------------

std::vector<BlockClass> urd4_cycles() { return full_classes({{C(0, 1, 2, 3)}, {C(0, 2, 3, 1)}, {C(0, 2, 1, 3)}}); }

std::vector<BlockClass> urd4_stars() { return develop({{S(0, 1, 2, 3)}, 4}); }

// ---- 2K_8, (1,8) -------------------------------------------------------------

Rows urd8_printed() {
    return {
        {S(0, 2, 4, 6), S(1, 3, 5, 7)}, {S(2, 4, 1, 6), S(3, 5, 0, 7)}, {S(5, 2, 0, 7), S(4, 1, 3, 6)},
        {S(0, 2, 1, 3), S(4, 6, 5, 7)}, {S(2, 4, 1, 3), S(6, 5, 0, 7)}, {S(5, 2, 0, 7), S(1, 4, 3, 6)},
        {C(1, 5, 4, 0), C(2, 6, 7, 3)},
    };
}

// The two star classes the printed list lacks; found by exact cover over the residual.
Rows urd8_missing() { return {{S(7, 0, 2, 4), S(6, 1, 3, 5)}, {S(7, 0, 2, 1), S(3, 4, 5, 6)}}; }

// ---- 2K_12 -------------------------------------------------------------------

Rows urd12_5_8() {
    return {
        {C(0, 1, 4, 7), C(2, 3, 6, 5), C(8, 11, 9, 10)},
        {C(0, 11, 10, 3), C(1, 2, 9, 8), C(4, 6, 7, 5)},
        {C(3, 1, 4, 8), C(2, 0, 6, 10), C(7, 11, 9, 5)},
        {C(3, 11, 5, 0), C(1, 2, 9, 7), C(4, 6, 8, 10)},
        {C(1, 3, 2, 0), C(4, 8, 11, 7), C(6, 10, 9, 5)},
        {S(0, 4, 5, 6), S(7, 8, 9, 10), S(11, 1, 2, 3)},
        {S(1, 5, 6, 7), S(4, 9, 10, 11), S(8, 0, 2, 3)},
        {S(2, 4, 6, 7), S(5, 8, 10, 11), S(9, 0, 1, 3)},
        {S(3, 4, 5, 7), S(6, 8, 9, 11), S(10, 0, 1, 2)},
        {S(3, 4, 10, 6), S(8, 7, 9, 5), S(11, 1, 2, 0)},
        {S(1, 10, 6, 8), S(4, 9, 5, 11), S(7, 0, 2, 3)},
        {S(2, 4, 6, 8), S(10, 7, 5, 11), S(9, 0, 1, 3)},
        {S(0, 4, 10, 8), S(6, 7, 9, 11), S(5, 3, 1, 2)},
    };
}

std::vector<BlockClass> urd12_2_12() {
    auto cycles = full_classes({{C(0, 5, 6, 1), C(2, 7, 8, 3), C(4, 9, 10, 11)},
                                {C(0, 7, 6, 11), C(1, 8, 9, 2), C(3, 4, 5, 10)}});
    return concat(cycles, develop({{S(4, 10, 1, 6), S(9, 2, 5, 7), S(11, 3, 8, 0)}, 12}));
}

// ---- 2K_{12,12} --------------------------------------------------------------

// a_i -> i-1 and b_i -> 11+i, subscripts reduced into 1..12.
Point a(int i) { return Point(((i - 1) % 12 + 12) % 12); }
Point b(int i) { return Point(12 + ((i - 1) % 12 + 12) % 12); }

TargetGraph target_12x2() {
    std::vector<std::vector<Point>> groups(2);
    for (Point p = 0; p < 12; ++p) {
        groups[0].push_back(p);
        groups[1].push_back(12 + p);
    }
    return TargetGraph::multipartite(std::move(groups), 2);
}

Rows urgdd12_stars() {
    Rows out;
    for (int i : {1, 4, 7, 10}) {
        out.push_back({S(a(i), b(i), b(i + 1), b(i + 2)), S(a(i + 1), b(i + 3), b(i + 4), b(i + 5)),
                       S(a(i + 2), b(i + 6), b(i + 7), b(i + 8)), S(b(i + 9), a(i + 3), a(i + 4), a(i + 5)),
                       S(b(i + 10), a(i + 6), a(i + 7), a(i + 8)), S(b(i + 11), a(i + 9), a(i + 10), a(i + 11))});
        out.push_back({S(a(i), b(i + 3), b(i + 4), b(i + 5)), S(a(i + 1), b(i + 6), b(i + 7), b(i + 8)),
                       S(a(i + 2), b(i + 9), b(i + 10), b(i + 11)), S(b(i), a(i + 3), a(i + 4), a(i + 5)),
                       S(b(i + 1), a(i + 6), a(i + 7), a(i + 8)), S(b(i + 2), a(i + 9), a(i + 10), a(i + 11))});
        out.push_back({S(a(i), b(i + 6), b(i + 7), b(i + 8)), S(a(i + 1), b(i + 9), b(i + 10), b(i + 11)),
                       S(a(i + 2), b(i), b(i + 1), b(i + 2)), S(b(i + 3), a(i + 3), a(i + 4), a(i + 5)),
                       S(b(i + 4), a(i + 6), a(i + 7), a(i + 8)), S(b(i + 5), a(i + 9), a(i + 10), a(i + 11))});
        out.push_back({S(a(i), b(i + 9), b(i + 10), b(i + 11)), S(a(i + 1), b(i), b(i + 1), b(i + 2)),
                       S(a(i + 2), b(i + 3), b(i + 4), b(i + 5)), S(b(i + 6), a(i + 3), a(i + 4), a(i + 5)),
                       S(b(i + 7), a(i + 6), a(i + 7), a(i + 8)), S(b(i + 8), a(i + 9), a(i + 10), a(i + 11))});
    }
    return out;
}

Rows urgdd12_printed_cycles() {
    static const int rows[6][6][4] = {
        {{12, 12, 5, 1}, {1, 2, 7, 3}, {2, 4, 8, 5}, {3, 7, 4, 8}, {6, 9, 9, 10}, {10, 6, 11, 11}},
        {{12, 2, 8, 3}, {1, 4, 3, 5}, {2, 6, 11, 7}, {4, 8, 6, 11}, {5, 9, 7, 10}, {9, 12, 10, 1}},
        {{12, 2, 2, 7}, {1, 4, 9, 6}, {3, 5, 4, 9}, {5, 12, 7, 10}, {6, 8, 8, 11}, {10, 1, 11, 3}},
        {{12, 4, 10, 5}, {1, 6, 6, 7}, {2, 9, 4, 10}, {3, 3, 11, 8}, {5, 2, 9, 11}, {7, 12, 8, 1}},
        {{12, 4, 11, 5}, {1, 7, 5, 9}, {2, 8, 7, 11}, {3, 12, 4, 6}, {6, 1, 8, 10}, {9, 2, 10, 3}},
        {{12, 6, 2, 9}, {1, 5, 5, 8}, {3, 7, 4, 10}, {6, 12, 8, 3}, {7, 1, 9, 11}, {10, 2, 11, 4}},
    };
    Rows out;
    for (const auto& row : rows) {
        std::vector<Block> cls;
        for (const auto& c : row) cls.push_back(C(a(c[0]), b(c[1]), a(c[2]), b(c[3])));
        out.push_back(std::move(cls));
    }
    return out;
}

// Generator output uses even/odd groups; move it onto a_i/b_i labels.
Certificate onto_12x2(const Certificate& c) {
    std::vector<Point> map(24);
    for (Point p = 0; p < 24; ++p) map[p] = (p % 2) * 12 + p / 2;
    std::vector<BlockClass> classes;
    for (const auto& cl : c.classes) classes.push_back(relabel(cl, map));
    auto prov = c.provenance;
    prov.push_back("relabeled: 2x -> a_{x+1} = x, 2x+1 -> b_{x+1} = 12+x");
    return make_certificate(target_12x2(), std::move(classes), std::move(prov));
}

// ---- 2K_20 - 2K_8 -------------------------------------------------------------

Rows iurd_cycles70() {
    return {
        {C(8, 9, 11, 10), C(12, 13, 15, 14), C(16, 17, 19, 18)},
        {C(8, 11, 15, 12), C(9, 10, 19, 16), C(13, 14, 18, 17)},
        {C(8, 13, 10, 15), C(9, 18, 11, 19), C(12, 16, 14, 17)},
        {C(8, 14, 16, 10), C(12, 18, 15, 9), C(11, 17, 19, 13)},
        {C(8, 16, 15, 12), C(14, 10, 19, 11), C(18, 9, 13, 17)},
        {C(8, 18, 10, 15), C(14, 13, 16, 19), C(12, 11, 9, 17)},
        {C(8, 9, 15, 14), C(10, 11, 17, 16), C(12, 13, 19, 18)},
    };
}

Rows iurd_stars44() {
    return {
        {S(8, 9, 10, 11), S(14, 12, 13, 15), S(19, 16, 17, 18)},
        {S(9, 10, 11, 19), S(15, 8, 12, 13), S(17, 14, 16, 18)},
        {S(10, 11, 15, 19), S(12, 8, 13, 17), S(18, 9, 14, 16)},
        {S(11, 15, 18, 19), S(13, 8, 10, 17), S(16, 9, 12, 14)},
    };
}

Rows iurd_stars18() {
    return {
        {S(8, 9, 10, 11), S(12, 13, 14, 15), S(16, 17, 18, 19)},
        {S(8, 10, 12, 13), S(9, 11, 15, 16), S(14, 17, 18, 19)},
        {S(9, 10, 11, 12), S(13, 14, 17, 19), S(15, 8, 16, 18)},
        {S(10, 11, 13, 19), S(14, 8, 15, 16), S(17, 9, 12, 18)},
        {S(10, 14, 15, 16), S(17, 11, 12, 13), S(18, 8, 9, 19)},
        {S(11, 12, 14, 18), S(15, 8, 10, 13), S(19, 9, 16, 17)},
        {S(11, 13, 15, 19), S(16, 8, 12, 14), S(18, 9, 10, 17)},
        {S(12, 8, 15, 18), S(13, 9, 14, 16), S(19, 10, 11, 17)},
    };
}

Rows iurd_full120() {
    return {
        {C(0, 8, 1, 9), C(2, 10, 3, 11), C(4, 12, 5, 13), C(6, 14, 18, 16), C(7, 17, 15, 19)},
        {C(0, 8, 1, 9), C(2, 10, 3, 11), C(4, 12, 5, 13), C(6, 16, 7, 18), C(14, 17, 15, 19)},
        {C(0, 10, 1, 11), C(2, 8, 3, 9), C(4, 14, 12, 16), C(5, 15, 13, 18), C(6, 17, 7, 19)},
        {C(0, 10, 1, 11), C(2, 8, 3, 9), C(4, 17, 5, 19), C(6, 12, 7, 14), C(13, 16, 15, 18)},
        {C(0, 12, 1, 13), C(2, 14, 3, 15), C(4, 8, 16, 9), C(5, 17, 6, 19), C(7, 10, 18, 11)},
        {C(0, 12, 1, 13), C(2, 14, 11, 16), C(3, 15, 4, 17), C(5, 8, 19, 9), C(6, 10, 7, 18)},
        {C(0, 14, 1, 15), C(2, 18, 3, 19), C(4, 9, 7, 16), C(5, 8, 17, 10), C(6, 12, 11, 13)},
        {C(0, 14, 1, 15), C(2, 13, 8, 17), C(3, 16, 5, 18), C(4, 10, 12, 19), C(6, 9, 7, 11)},
        {C(0, 16, 1, 17), C(2, 15, 4, 18), C(3, 13, 10, 14), C(5, 9, 6, 11), C(7, 8, 19, 12)},
        {C(0, 16, 1, 17), C(2, 12, 3, 19), C(4, 11, 8, 18), C(5, 10, 9, 14), C(6, 13, 7, 15)},
        {C(0, 18, 1, 19), C(2, 13, 3, 16), C(4, 11, 5, 14), C(6, 8, 7, 15), C(9, 12, 10, 17)},
        {C(0, 18, 1, 19), C(2, 12, 3, 17), C(4, 8, 6, 10), C(5, 15, 11, 16), C(7, 13, 9, 14)},
    };
}

// C_1..C_9
Rows iurd_named_cycles() {
    return {
        {C(0, 10, 1, 11), C(2, 8, 3, 9), C(4, 17, 5, 19), C(6, 12, 7, 14), C(13, 16, 15, 18)},
        {C(0, 12, 1, 13), C(2, 14, 3, 15), C(4, 8, 16, 9), C(5, 17, 6, 19), C(7, 10, 18, 11)},
        {C(0, 14, 1, 15), C(2, 12, 11, 16), C(3, 13, 6, 18), C(4, 17, 8, 19), C(5, 9, 7, 10)},
        {C(0, 10, 1, 11), C(2, 8, 3, 9), C(4, 14, 12, 16), C(5, 15, 13, 18), C(6, 17, 7, 19)},
        {C(0, 18, 1, 19), C(2, 13, 3, 17), C(4, 8, 11, 16), C(5, 10, 6, 15), C(7, 12, 9, 14)},
        {C(0, 8, 1, 9), C(2, 10, 3, 11), C(4, 12, 5, 13), C(6, 14, 18, 16), C(7, 17, 15, 19)},
        {C(0, 8, 1, 9), C(2, 10, 3, 11), C(4, 12, 5, 13), C(6, 16, 7, 18), C(14, 17, 15, 19)},
        {C(0, 12, 1, 13), C(2, 14, 3, 15), C(4, 10, 6, 11), C(5, 16, 7, 18), C(8, 17, 9, 19)},
        {C(0, 14, 4, 18), C(1, 16, 2, 19), C(3, 12, 10, 17), C(5, 8, 13, 11), C(6, 9, 7, 15)},
    };
}

// S_1..S_12
Rows iurd_named_stars() {
    return {
        {S(0, 15, 16, 17), S(7, 8, 11, 13), S(12, 6, 10, 19), S(14, 1, 5, 9), S(18, 2, 3, 4)},
        {S(1, 16, 17, 18), S(4, 9, 10, 15), S(5, 8, 11, 14), S(13, 2, 6, 7), S(19, 0, 3, 12)},
        {S(2, 12, 18, 19), S(6, 8, 9, 11), S(10, 13, 14, 17), S(15, 1, 4, 7), S(16, 0, 3, 5)},
        {S(3, 12, 16, 19), S(8, 6, 7, 18), S(9, 5, 10, 13), S(11, 4, 14, 15), S(17, 0, 1, 2)},
        {S(0, 9, 14, 18), S(5, 11, 12, 13), S(10, 3, 4, 17), S(16, 1, 2, 6), S(19, 7, 8, 15)},
        {S(1, 8, 9, 19), S(7, 15, 16, 18), S(11, 2, 3, 13), S(12, 0, 5, 10), S(14, 4, 6, 17)},
        {S(2, 10, 14, 19), S(4, 11, 12, 13), S(6, 9, 16, 18), S(8, 0, 1, 5), S(17, 3, 7, 15)},
        {S(3, 10, 11, 12), S(9, 1, 7, 19), S(13, 0, 5, 8), S(15, 2, 6, 17), S(18, 4, 14, 16)},
        {S(0, 9, 10, 18), S(1, 11, 12, 13), S(4, 8, 14, 16), S(15, 3, 5, 19), S(17, 2, 6, 7)},
        {S(2, 9, 10, 11), S(3, 8, 13, 17), S(5, 15, 16, 18), S(12, 4, 7, 14), S(19, 0, 1, 6)},
        {S(6, 10, 11, 15), S(8, 0, 2, 17), S(14, 3, 9, 19), S(16, 4, 7, 12), S(18, 1, 5, 13)},
        {S(7, 14, 18, 19), S(9, 3, 12, 17), S(10, 1, 5, 6), S(11, 0, 8, 16), S(13, 2, 4, 15)},
    };
}

Rows slice(const Rows& r, std::size_t from, std::size_t to) { return Rows(r.begin() + from, r.begin() + to); }

Rows join(Rows x, const Rows& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
}

std::vector<Point> hole8() { return {0, 1, 2, 3, 4, 5, 6, 7}; }

TargetGraph target_20_8() { return TargetGraph::complete_minus_hole(20, hole8(), 2); }

// ---- assembly ----------------------------------------------------------------

CatalogEntry entry(std::string designator, TargetGraph t, std::vector<BlockClass> classes,
                   std::vector<std::string> provenance) {
    CatalogEntry e;
    e.designator = designator;
    provenance.insert(provenance.begin(), "catalog " + designator);
    e.certificate = make_certificate(std::move(t), std::move(classes), std::move(provenance));
    return e;
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> out;
    const std::string verbatim = "printed class list, transcribed verbatim";

    out.push_back(entry("URD(4;3,0)", TargetGraph::complete(4, 2), urd4_cycles(), {verbatim}));
    out.push_back(entry("URD(4;0,4)", TargetGraph::complete(4, 2), urd4_stars(),
                        {"base block {(0;1,2,3)} developed mod 4"}));

    {
        auto e = entry("URD(8;1,8)", TargetGraph::complete(8, 2),
                       full_classes(join(urd8_printed(), urd8_missing())),
                       {verbatim, "two star classes added: {(7;0,2,4),(6;1,3,5)} and {(7;0,2,1),(3;4,5,6)}"});
        e.as_printed = make_certificate(TargetGraph::complete(8, 2), full_classes(urd8_printed()), {verbatim});
        e.erratum = "the printed list has 6 star classes, not 8; the two missing classes were found by "
                    "exact cover over the uncovered edges";
        out.push_back(std::move(e));
    }

    out.push_back(entry("URD(12;5,8)", TargetGraph::complete(12, 2), full_classes(urd12_5_8()), {verbatim}));
    out.push_back(entry("URD(12;2,12)", TargetGraph::complete(12, 2), urd12_2_12(),
                        {verbatim + " (2 cycle classes)",
                         "base blocks {(4;10,1,6),(9;2,5,7),(11;3,8,0)} developed mod 12"}));

    {
        auto gen = onto_12x2(c4_factorization_bipartite(12, 2));
        auto e = entry("URGDD(12^2;12,0)", target_12x2(), gen.classes, gen.provenance);
        e.printed = false;
        out.push_back(std::move(e));
    }
    {
        Certificate c = c4_factorization_bipartite(12, 1);
        Certificate s = star_factorization_12x2();
        auto classes = concat(c.classes, s.classes);
        auto prov = c.provenance;
        prov.insert(prov.end(), s.provenance.begin(), s.provenance.end());
        auto gen = onto_12x2(make_certificate(search::residue_groups(12, 2, 2), classes, prov));
        auto e = entry("URGDD(12^2;6,8)", target_12x2(), gen.classes, gen.provenance);
        const auto stars = urgdd12_stars();
        e.as_printed = make_certificate(target_12x2(), full_classes(join(urgdd12_printed_cycles(), slice(stars, 8, 16))),
                                        {verbatim + " (6 cycle classes)", "star classes: the last 8 of the (0,16) design"});
        e.erratum = "the printed cycle classes cover 40 pairs twice and miss 40 pairs, so with the last 8 star "
                    "classes of the (0,16) design they do not decompose 2K_{12,12}; a budgeted search found no other "
                    "star classes completing them (not a nonexistence proof); replaced by a C4-factorization of "
                    "K_{12,12} plus a K13-factorization of K_{12,12}";
        out.push_back(std::move(e));
    }
    out.push_back(entry("URGDD(12^2;0,16)", target_12x2(), full_classes(urgdd12_stars()),
                        {verbatim + " from the template for i = 1, 4, 7, 10",
                         "subscripts reduced into 1..12; a_i -> i-1, b_i -> 11+i"}));

    for (const auto& p : kIurd20Partials)
        for (const auto& f : kIurd20Fulls)
            out.push_back(entry(iurd20_designator(p, f), target_20_8(), concat(iurd20_partial(p), iurd20_full(f)),
                                {verbatim, "partial resolution " + p.str() + ", full resolution " + f.str()}));
    return out;
}

}  // namespace

std::vector<BlockClass> develop(const BaseBlockOrbit& orbit) {
    const auto m = orbit.modulus;
    if (m == 0 || orbit.base.empty()) throw std::invalid_argument("develop: empty base");
    std::vector<int> seen(m, 0);
    for (const auto& b : orbit.base) {
        if (b.kind != orbit.base.front().kind) throw std::invalid_argument("develop: mixed block kinds");
        for (Point p : b) {
            if (p >= m) throw std::invalid_argument("develop: vertex outside Z_m");
            ++seen[p];
        }
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
        throw std::invalid_argument("develop: base blocks are not a parallel class of Z_m");
    std::vector<BlockClass> out;
    for (Point i = 0; i < m; ++i) {
        BlockClass c;
        c.kind = orbit.base.front().kind;
        for (const auto& b : orbit.base) {
            Block t = b;
            for (std::size_t k = 0; k < t.size(); ++k) t.v[k] = (b.v[k] + i) % m;
            c.blocks.push_back(t);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<BlockClass> iurd20_partial(const ClassPair& p) {
    Rows rows;
    if (p == ClassPair{7, 0})
        rows = iurd_cycles70();
    else if (p == ClassPair{4, 4})
        rows = join(slice(iurd_cycles70(), 3, 7), iurd_stars44());
    else if (p == ClassPair{1, 8})
        rows = join(slice(iurd_cycles70(), 6, 7), iurd_stars18());
    else
        throw UnknownDesignator("no partial resolution " + p.str() + " of 2K_20 - 2K_8");
    auto classes = full_classes(rows);
    for (auto& c : classes) c.missing = hole8();
    return classes;
}

std::vector<BlockClass> iurd20_full(const ClassPair& p) {
    const Rows cyc = iurd_named_cycles();
    const Rows st = iurd_named_stars();
    const Rows extra_cycle{{C(0, 8, 17, 9), C(1, 12, 4, 13), C(2, 10, 6, 11), C(3, 14, 19, 15), C(5, 16, 7, 18)}};
    const Rows extra_stars{
        {S(0, 10, 11, 17), S(2, 8, 12, 15), S(13, 7, 16, 18), S(14, 1, 3, 9), S(19, 4, 5, 6)},
        {S(0, 13, 15, 16), S(5, 14, 17, 19), S(7, 8, 9, 10), S(12, 1, 6, 11), S(18, 2, 3, 4)},
        {S(1, 10, 13, 14), S(12, 0, 7, 19), S(16, 2, 8, 9), S(17, 4, 5, 6), S(18, 3, 11, 15)},
        {S(3, 8, 13, 15), S(4, 9, 17, 19), S(10, 5, 12, 18), S(11, 1, 7, 16), S(14, 0, 2, 6)},
        {S(6, 12, 13, 18), S(7, 10, 11, 14), S(8, 4, 17, 19), S(9, 2, 3, 5), S(15, 0, 1, 16)},
    };
    Rows rows;
    if (p == ClassPair{12, 0})
        rows = iurd_full120();
    else if (p == ClassPair{9, 4})
        rows = join(cyc, slice(st, 0, 4));
    else if (p == ClassPair{6, 8})
        rows = join(join(slice(cyc, 0, 5), extra_cycle), slice(st, 0, 8));
    else if (p == ClassPair{3, 12})
        rows = join(slice(cyc, 0, 3), st);
    else if (p == ClassPair{0, 16})
        rows = join(slice(st, 1, 12), extra_stars);
    else
        throw UnknownDesignator("no full resolution " + p.str() + " of 2K_20 - 2K_8");
    return full_classes(rows);
}

std::string urd_designator(std::uint32_t v, const ClassPair& p) {
    return "URD(" + std::to_string(v) + ";" + std::to_string(p.r) + "," + std::to_string(p.s) + ")";
}

std::string urgdd12_designator(const ClassPair& p) {
    return "URGDD(12^2;" + std::to_string(p.r) + "," + std::to_string(p.s) + ")";
}

std::string iurd20_designator(const ClassPair& partial, const ClassPair& full) {
    return "IURD(20-8;" + std::to_string(partial.r) + "," + std::to_string(partial.s) + ";" +
           std::to_string(full.r) + "," + std::to_string(full.s) + ")";
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const CatalogEntry& catalog_entry(std::string_view designator) {
    for (const auto& e : catalog())
        if (e.designator == designator) return e;
    throw UnknownDesignator("unknown catalog designator '" + std::string(designator) + "'");
}

const Certificate& lookup(std::string_view designator) { return catalog_entry(designator).certificate; }

std::vector<std::string> designators() {
    std::vector<std::string> out;
    for (const auto& e : catalog()) out.push_back(e.designator);
    return out;
}

std::optional<std::string> frozen_hash(std::string_view designator) {
    static const std::map<std::string, std::string, std::less<>> hashes{
        {"URD(4;3,0)", "0d4f621a44e66ba1"},
        {"URD(4;0,4)", "9a1d0e0f906fb326"},
        {"URD(8;1,8)", "c7991dea64a91942"},
        {"URD(12;5,8)", "b5a03fe26053f1c3"},
        {"URD(12;2,12)", "0aa86ec362efb6fc"},
        {"URGDD(12^2;12,0)", "57a2225c971bbc7c"},
        {"URGDD(12^2;6,8)", "94a1b305c2822e2e"},
        {"URGDD(12^2;0,16)", "6ad5294bab2e3b66"},
        {"IURD(20-8;7,0;12,0)", "4c2f3b0326757e71"},
        {"IURD(20-8;7,0;9,4)", "d26d33fa7725a1cd"},
        {"IURD(20-8;7,0;6,8)", "bf0396b7f81cbb2a"},
        {"IURD(20-8;7,0;3,12)", "128b1210301357f2"},
        {"IURD(20-8;7,0;0,16)", "733a67e2b670e771"},
        {"IURD(20-8;4,4;12,0)", "6f13db5a1e76f8cf"},
        {"IURD(20-8;4,4;9,4)", "3d488779e33f6b09"},
        {"IURD(20-8;4,4;6,8)", "f6acefb7d4e50228"},
        {"IURD(20-8;4,4;3,12)", "1a3dce49cd4727de"},
        {"IURD(20-8;4,4;0,16)", "5a7295895064eea3"},
        {"IURD(20-8;1,8;12,0)", "6d2538bb45d4dfa7"},
        {"IURD(20-8;1,8;9,4)", "7dc5b8a5c829b6af"},
        {"IURD(20-8;1,8;6,8)", "053c5b1a2834fbe4"},
        {"IURD(20-8;1,8;3,12)", "e5181c0225b68ff4"},
        {"IURD(20-8;1,8;0,16)", "002f86ab2f382da7"},
    };
    auto it = hashes.find(designator);
    if (it == hashes.end()) return std::nullopt;
    return it->second;
}

}  // namespace urd
