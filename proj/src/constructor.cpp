#include "urd/constructor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "urd/catalog.hpp"
#include "urd/verifier.hpp"

namespace urd {

namespace {

// Unions classes over pairwise disjoint point sets into one class.
class Assembler {
public:
    explicit Assembler(Point v) : stamp_(v, 0) {}

    BlockClass merge(const std::vector<BlockClass>& parts) {
        if (parts.empty()) throw std::logic_error("merge of no classes");
        ++tag_;
        BlockClass out;
        out.kind = parts.front().kind;
        for (const auto& part : parts) {
            if (part.kind != out.kind) throw std::logic_error("merging classes of different kinds");
            for (const auto& b : part.blocks) {
                for (Point p : b) {
                    if (stamp_.at(p) == tag_) throw std::logic_error("merged classes share a point");
                    stamp_[p] = tag_;
                }
                out.blocks.push_back(b);
            }
        }
        return out;
    }

private:
    std::vector<std::uint32_t> stamp_;
    std::uint32_t tag_ = 0;
};

// Class indices of a design ordered cycles first, then stars (stable).
std::vector<std::size_t> by_kind(const std::vector<BlockClass>& classes, bool full) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].full() == full) idx.push_back(i);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t x, std::size_t y) { return classes[x].kind < classes[y].kind; });
    return idx;
}

std::vector<Point> sorted(std::vector<Point> p) {
    std::sort(p.begin(), p.end());
    return p;
}

void nest(std::vector<std::string>& prov, const std::string& label, const Certificate& c) {
    for (const auto& line : c.provenance) prov.push_back("  " + label + ": " + line);
}

// Relabels one URD per group (positionally aligned by kind) and merges them.
std::vector<BlockClass> fill_each_group(const std::vector<std::vector<Point>>& groups,
                                        std::span<const Certificate> fills, Assembler& as) {
    if (fills.size() != 1 && fills.size() != groups.size())
        throw Error("need one group fill, or one per group");
    const auto& first = fills.front();
    for (const auto& f : fills) {
        if (f.target.variant != GraphVariant::Complete || f.target.lambda != 2)
            throw Error("a group fill must decompose 2K_g");
        if (!(f.claimed == first.claimed)) throw Error("group fills have different profiles");
    }
    for (std::size_t i = 0; i < groups.size(); ++i)
        if (fills[fills.size() == 1 ? 0 : i].target.v != groups[i].size())
            throw Error("group fill order differs from the group size");

    std::vector<std::vector<std::size_t>> order;
    for (const auto& f : fills) order.push_back(by_kind(f.classes, true));
    std::vector<BlockClass> out;
    for (std::size_t k = 0; k < order.front().size(); ++k) {
        std::vector<BlockClass> parts;
        for (std::size_t i = 0; i < groups.size(); ++i) {
            const std::size_t fi = fills.size() == 1 ? 0 : i;
            parts.push_back(relabel(fills[fi].classes[order[fi][k]], sorted(groups[i])));
        }
        out.push_back(as.merge(parts));
    }
    return out;
}

Certificate finish(TargetGraph t, std::vector<BlockClass> classes, std::vector<std::string> prov) {
    Certificate c = make_certificate(std::move(t), std::move(classes), std::move(prov));
    if (auto r = verify(c); !r.passed) throw std::logic_error("assembled design fails verification: " + r.text());
    return c;
}

bool contains(const std::vector<ClassPair>& xs, const ClassPair& p) {
    return std::find(xs.begin(), xs.end(), p) != xs.end();
}

const std::vector<ClassPair> kBlowUp{{12, 0}, {6, 8}, {0, 16}};

// Profiles of URD(g) with catalog designs first.
std::vector<ClassPair> fills_catalog_first(std::uint32_t g) {
    std::vector<ClassPair> direct, built;
    for (const auto& p : spectrum_set(g).pairs) {
        const auto d = urd_designator(g, p);
        const auto names = designators();
        (std::find(names.begin(), names.end(), d) != names.end() ? direct : built).push_back(p);
    }
    direct.insert(direct.end(), built.begin(), built.end());
    return direct;
}

std::optional<ClassPair> minus(const ClassPair& x, const ClassPair& y) {
    if (x.r < y.r || x.s < y.s) return std::nullopt;
    return ClassPair{x.r - y.r, x.s - y.s};
}

}  // namespace

const char* route_name(Route r) {
    switch (r) {
        case Route::Direct: return "Direct";
        case Route::GroupReplace: return "GroupReplace";
        case Route::HoleFill: return "HoleFill";
        case Route::GroupFill: return "GroupFill";
        case Route::FrameExpand: return "FrameExpand";
    }
    return "?";
}

std::string Plan::describe() const {
    std::ostringstream os;
    os << "URD(" << v << ";" << target.r << "," << target.s << ") by " << route_name(route);
    switch (route) {
        case Route::Direct: os << " " << designator; break;
        case Route::GroupReplace:
            os << ": URGDD type " << g << "^" << u << " " << urgdd_profile.str() << ", every group URD(" << g << ";"
               << group_fill.r << "," << group_fill.s << ")";
            break;
        case Route::HoleFill:
            os << ": IURD(20-8) partial " << partial.str() << " full " << full.str() << ", hole URD(8;" << partial.r
               << "," << partial.s << ")";
            break;
        case Route::GroupFill:
            os << ": 4-RGDD type " << g << "^" << u << " (t=" << t << "), " << a << " classes -> (3,0), " << t - a
               << " classes -> (0,4), every group URD(" << g << ";" << group_fill.r << "," << group_fill.s << ")";
            break;
        case Route::FrameExpand:
            os << ": frame of type 1^" << n << ", partial " << partial.str() << ", points";
            for (const auto& p : per_point) os << " " << p.str();
            break;
    }
    return os.str();
}

Plan solve_plan(std::uint32_t v, const ClassPair& p) {
    if (!admissible(v, p)) throw Inadmissible(p.str() + " is not in I(" + std::to_string(v) + ")");
    Plan plan;
    plan.v = v;
    plan.target = p;
    const auto direct = [&](const std::string& d) {
        plan.route = Route::Direct;
        plan.designator = d;
        return plan;
    };
    const auto names = designators();
    if (std::find(names.begin(), names.end(), urd_designator(v, p)) != names.end()) return direct(urd_designator(v, p));

    const auto replace = [&](std::uint32_t g, std::uint32_t u, const std::vector<ClassPair>& profiles) {
        for (const auto& prof : profiles)
            for (const auto& fill : fills_catalog_first(g))
                if (prof + fill == p) {
                    plan.route = Route::GroupReplace;
                    plan.g = g;
                    plan.u = u;
                    plan.urgdd_profile = prof;
                    plan.group_fill = fill;
                    return plan;
                }
        throw Error("no group replacement reaches " + p.str() + " at v=" + std::to_string(v));
    };

    if (v == 8) return replace(4, 2, {{4, 0}});
    if (v == 12) return replace(4, 3, {{8, 0}});
    if (v == 24) return replace(12, 2, {{12, 0}, {0, 16}, {6, 8}});
    if (v == 36) return replace(12, 3, {{24, 0}, {0, 32}, {15, 12}, {6, 24}});
    if (v == 20) {
        for (const auto& part : {ClassPair{1, 8}, ClassPair{7, 0}, ClassPair{4, 4}})
            if (auto f = minus(p, part); f && contains({kIurd20Fulls.begin(), kIurd20Fulls.end()}, *f)) {
                plan.route = Route::HoleFill;
                plan.partial = part;
                plan.full = *f;
                return plan;
            }
        throw Error("no hole filling reaches " + p.str());
    }

    std::uint32_t g = 0;
    if (v % 12 == 0 && v >= 48) g = 12;
    if (v % 12 == 4 && v >= 16) g = 4;
    if (v % 24 == 8 && v >= 32) g = 8;
    if (g != 0) {
        plan.route = Route::GroupFill;
        plan.g = g;
        plan.u = v / g;
        plan.t = g * (plan.u - 1) / 3;
        for (const auto& fill : fills_catalog_first(g)) {
            if (p.r < fill.r || (p.r - fill.r) % 3 != 0) continue;
            const std::uint32_t a = (p.r - fill.r) / 3;
            if (a > plan.t || fill.s + 4 * (plan.t - a) != p.s) continue;
            plan.group_fill = fill;
            plan.a = a;
            return plan;
        }
        throw Error("no group fill reaches " + p.str() + " at v=" + std::to_string(v));
    }

    if (v % 24 == 20 && v >= 44) {
        plan.route = Route::FrameExpand;
        plan.n = (v - 8) / 12;
        const std::uint32_t n = plan.n;
        // Fewest (6,8) points first, then the hole profile with a catalog URD(8).
        for (std::uint32_t k1 = 0; k1 <= n; ++k1)
            for (const auto& part : {ClassPair{1, 8}, ClassPair{7, 0}, ClassPair{4, 4}})
                for (std::uint32_t k0 = n - k1 + 1; k0-- > 0;) {
                    const std::uint32_t k2 = n - k1 - k0;
                    const ClassPair sum{part.r + 12 * k0 + 6 * k1, part.s + 8 * k1 + 16 * k2};
                    if (!(sum == p)) continue;
                    plan.partial = part;
                    plan.per_point.assign(k0, kBlowUp[0]);
                    plan.per_point.insert(plan.per_point.end(), k1, kBlowUp[1]);
                    plan.per_point.insert(plan.per_point.end(), k2, kBlowUp[2]);
                    return plan;
                }
        throw Error("no frame expansion reaches " + p.str() + " at v=" + std::to_string(v));
    }
    throw Error("no construction route for v=" + std::to_string(v));
}

Certificate inflate_rgdd(const Certificate& rgdd, std::span<const Certificate> block_fills,
                         std::span<const Certificate> group_fills) {
    const auto& t = rgdd.target;
    if (t.variant != GraphVariant::Multipartite || t.lambda != 1 || t.groups.empty())
        throw Error("inflate_rgdd: needs a 4-RGDD of index 1");
    const std::uint32_t g = t.groups.front().size();
    const std::uint32_t u = t.groups.size();
    for (const auto& grp : t.groups)
        if (grp.size() != g) throw Error("inflate_rgdd: groups must have equal size");
    const std::size_t classes = g * (u - 1) / 3;
    if (rgdd.classes.size() != classes || g * (u - 1) % 3 != 0)
        throw Error("inflate_rgdd: a 4-RGDD of type " + std::to_string(g) + "^" + std::to_string(u) + " has " +
                    std::to_string(g * (u - 1) / 3) + " classes");
    if (block_fills.size() != classes) throw Error("inflate_rgdd: one block fill per RGDD class");

    Assembler as(t.v);
    std::vector<BlockClass> out;
    std::vector<std::string> prov{"4-RGDD of type " + std::to_string(g) + "^" + std::to_string(u) +
                                  ": each K4 block of class j replaced by the j-th block fill on its points"};
    for (std::size_t j = 0; j < classes; ++j) {
        const auto& cl = rgdd.classes[j];
        const auto& fill = block_fills[j];
        if (cl.kind != BlockKind::Complete4 || !cl.full()) throw Error("inflate_rgdd: RGDD classes must be full K4 classes");
        if (!(fill.target == TargetGraph::complete(4, 2))) throw Error("inflate_rgdd: block fills must decompose 2K_4");
        for (std::size_t k = 0; k < fill.classes.size(); ++k) {
            std::vector<BlockClass> parts;
            for (const auto& b : cl.blocks) parts.push_back(relabel(fill.classes[k], {b.v[0], b.v[1], b.v[2], b.v[3]}));
            out.push_back(as.merge(parts));
        }
    }
    auto filled = fill_each_group(t.groups, group_fills, as);
    out.insert(out.end(), filled.begin(), filled.end());
    prov.push_back("every group <- URD(" + std::to_string(g) + ";" + std::to_string(group_fills[0].claimed.r) + "," +
                   std::to_string(group_fills[0].claimed.s) + "), vertex k -> k-th smallest point of the group");
    nest(prov, "rgdd", rgdd);
    nest(prov, "group", group_fills[0]);
    return finish(TargetGraph::complete(t.v, 2), std::move(out), std::move(prov));
}

Certificate replace_groups(const Certificate& urgdd, std::span<const Certificate> group_fills) {
    const auto& t = urgdd.target;
    if (t.variant != GraphVariant::Multipartite || t.lambda != 2) throw Error("replace_groups: needs a URGDD of index 2");
    for (const auto& cl : urgdd.classes)
        if (!cl.full() || (cl.kind != BlockKind::Cycle4 && cl.kind != BlockKind::Star3))
            throw Error("replace_groups: URGDD classes must be full C4 or K13 classes");
    Assembler as(t.v);
    std::vector<BlockClass> out = urgdd.classes;
    auto filled = fill_each_group(t.groups, group_fills, as);
    out.insert(out.end(), filled.begin(), filled.end());
    std::vector<std::string> prov{"URGDD " + ClassPair{urgdd.claimed.r, urgdd.claimed.s}.str() +
                                  " with every group <- URD(" + std::to_string(group_fills[0].target.v) + ";" +
                                  std::to_string(group_fills[0].claimed.r) + "," +
                                  std::to_string(group_fills[0].claimed.s) +
                                  "), vertex k -> k-th smallest point of the group"};
    nest(prov, "urgdd", urgdd);
    nest(prov, "group", group_fills[0]);
    return finish(TargetGraph::complete(t.v, 2), std::move(out), std::move(prov));
}

Certificate fill_hole(const Certificate& incomplete, const Certificate& hole_fill) {
    const auto& t = incomplete.target;
    if (t.variant != GraphVariant::CompleteMinusHole) throw Error("fill_hole: needs an incomplete design");
    if (!(hole_fill.target == TargetGraph::complete(t.hole.size(), 2)))
        throw Error("fill_hole: the filling must decompose 2K_h on the hole size");
    const ClassPair partial{incomplete.claimed.partial_r, incomplete.claimed.partial_s};
    const ClassPair fill{hole_fill.claimed.r, hole_fill.claimed.s};
    if (!(partial == fill)) throw Error("fill_hole: partial profile " + partial.str() + " but filling " + fill.str());
    const auto map = sorted(t.hole);

    Assembler as(t.v);
    std::vector<BlockClass> out;
    for (auto i : by_kind(incomplete.classes, true)) out.push_back(incomplete.classes[i]);
    const auto parts = by_kind(incomplete.classes, false);
    const auto holes = by_kind(hole_fill.classes, true);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        BlockClass pc = incomplete.classes[parts[k]];
        pc.missing.reset();
        out.push_back(as.merge({pc, relabel(hole_fill.classes[holes[k]], map)}));
    }
    std::vector<std::string> prov{"hole filled: partial class k merged with class k of URD(" +
                                  std::to_string(map.size()) + ";" + std::to_string(fill.r) + "," +
                                  std::to_string(fill.s) + ") on the hole"};
    nest(prov, "incomplete", incomplete);
    nest(prov, "hole", hole_fill);
    return finish(TargetGraph::complete(t.v, 2), std::move(out), std::move(prov));
}

Certificate frame_expand(std::uint32_t n, const ClassPair& partial, std::span<const ClassPair> per_point,
                         const Certificate& hole_fill) {
    if (n < 3 || n % 2 == 0) throw Error("frame_expand: n must be odd and at least 3");
    if (!contains({kIurd20Partials.begin(), kIurd20Partials.end()}, partial))
        throw Error("frame_expand: partial profile " + partial.str() + " unavailable");
    if (per_point.size() != n) throw Error("frame_expand: one profile per frame point");
    for (const auto& f : per_point)
        if (!contains(kBlowUp, f)) throw Error("frame_expand: point profile " + f.str() + " unavailable");
    if (!(hole_fill.target == TargetGraph::complete(8, 2)) ||
        !(ClassPair{hole_fill.claimed.r, hole_fill.claimed.s} == partial))
        throw Error("frame_expand: the hole needs a URD(8) with profile " + partial.str());

    const Point v = 12 * n + 8;
    const auto blk = [](std::uint32_t i) { return Point(8 + 12 * i); };
    const auto frame = near_one_factorization(n);
    Assembler as(v);
    std::vector<BlockClass> out;
    std::vector<std::vector<BlockClass>> partials(n);

    for (std::uint32_t i = 0; i < n; ++i) {
        const auto& iurd = lookup(iurd20_designator(partial, per_point[i]));
        std::vector<Point> map(20);
        for (Point x = 0; x < 20; ++x) map[x] = x < 8 ? x : blk(i) + (x - 8);
        const auto& ug = lookup(urgdd12_designator(per_point[i]));
        std::vector<std::vector<Point>> edge_maps;
        for (const auto& e : frame[i].blocks) {
            std::vector<Point> m(24);
            for (Point x = 0; x < 24; ++x) m[x] = x < 12 ? blk(e.v[0]) + x : blk(e.v[1]) + (x - 12);
            edge_maps.push_back(std::move(m));
        }
        const auto fulls = by_kind(iurd.classes, true);
        const auto ucls = by_kind(ug.classes, true);
        if (fulls.size() != ucls.size()) throw std::logic_error("frame_expand: class counts differ");
        for (std::size_t k = 0; k < fulls.size(); ++k) {
            std::vector<BlockClass> parts{relabel(iurd.classes[fulls[k]], map)};
            for (const auto& m : edge_maps) parts.push_back(relabel(ug.classes[ucls[k]], m));
            out.push_back(as.merge(parts));
        }
        for (auto k : by_kind(iurd.classes, false)) {
            BlockClass pc = relabel(iurd.classes[k], map);
            pc.missing.reset();
            partials[i].push_back(std::move(pc));
        }
    }
    const auto holes = by_kind(hole_fill.classes, true);
    for (std::size_t k = 0; k < holes.size(); ++k) {
        std::vector<BlockClass> parts{hole_fill.classes[holes[k]]};
        for (std::uint32_t i = 0; i < n; ++i) parts.push_back(partials[i].at(k));
        out.push_back(as.merge(parts));
    }

    std::vector<std::string> prov{"frame of type 1^" + std::to_string(n) +
                                  ": point i -> 8+12i..19+12i, hole 0..7; partial profile " + partial.str()};
    for (std::uint32_t i = 0; i < n; ++i)
        prov.push_back("  point " + std::to_string(i) + ": " + iurd20_designator(partial, per_point[i]) +
                       ", frame edges carry " + urgdd12_designator(per_point[i]));
    nest(prov, "hole", hole_fill);
    return finish(TargetGraph::complete(v, 2), std::move(out), std::move(prov));
}

Certificate Engine::construct_urd(std::uint32_t v, const ClassPair& p) { return build(solve_plan(v, p)); }

Certificate Engine::build(const Plan& plan) {
    Certificate c;
    switch (plan.route) {
        case Route::Direct: c = lookup(plan.designator); break;
        case Route::GroupReplace: {
            Certificate urgdd;
            if (plan.g == 12 && plan.u == 2)
                urgdd = lookup(urgdd12_designator(plan.urgdd_profile));
            else
                urgdd = ingredients_.provide(IngredientKey::urgdd(plan.g, plan.u, 2, plan.urgdd_profile));
            const Certificate fill = construct_urd(plan.g, plan.group_fill);
            c = replace_groups(urgdd, std::span<const Certificate>(&fill, 1));
            break;
        }
        case Route::HoleFill:
            c = fill_hole(lookup(iurd20_designator(plan.partial, plan.full)), construct_urd(8, plan.partial));
            break;
        case Route::GroupFill: {
            const Certificate rgdd = ingredients_.provide(IngredientKey::rgdd4(plan.g, plan.u, 1));
            const Certificate& cyc = lookup(urd_designator(4, {3, 0}));
            const Certificate& star = lookup(urd_designator(4, {0, 4}));
            std::vector<Certificate> blocks;
            for (std::uint32_t j = 0; j < plan.t; ++j) blocks.push_back(j < plan.a ? cyc : star);
            const Certificate fill = construct_urd(plan.g, plan.group_fill);
            c = inflate_rgdd(rgdd, blocks, std::span<const Certificate>(&fill, 1));
            break;
        }
        case Route::FrameExpand:
            c = frame_expand(plan.n, plan.partial, plan.per_point, construct_urd(8, plan.partial));
            break;
    }
    c.provenance.insert(c.provenance.begin(), plan.describe());
    if (auto r = verify(c); !r.passed) throw std::logic_error("constructed design fails verification: " + r.text());
    if (!(ClassPair{c.claimed.r, c.claimed.s} == plan.target) || c.claimed.partial_r != 0 || c.claimed.partial_s != 0)
        throw std::logic_error("constructed design has the wrong profile");
    return c;
}

}  // namespace urd
