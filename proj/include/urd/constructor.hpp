#pragma once

// Recursive constructions of URD(v,2;r,s) and the dispatch over v.
//
// Routes:
//   Direct        a catalog design
//   GroupReplace  a URGDD of type g^u with every group filled by the same URD(g)
//   HoleFill      IURD(2K_20 - 2K_8) with the hole filled by a URD(8)
//   GroupFill     a 4-RGDD of type g^u; every K4 block becomes a URD(4), every group a URD(g)
//   FrameExpand   near-one-factorization of K_n, each point blown up to 12 points plus a hole of 8

#include <span>
#include <string>
#include <vector>

#include "urd/ingredients.hpp"
#include "urd/model.hpp"
#include "urd/spectrum.hpp"

namespace urd {

class Inadmissible : public Error {
public:
    using Error::Error;
};

enum class Route { Direct, GroupReplace, HoleFill, GroupFill, FrameExpand };
const char* route_name(Route r);

struct Plan {
    std::uint32_t v = 0;
    ClassPair target;
    Route route = Route::Direct;

    std::string designator;  // Direct

    // GroupReplace and GroupFill: type g^u and the profile used in every group.
    std::uint32_t g = 0;
    std::uint32_t u = 0;
    ClassPair group_fill;
    ClassPair urgdd_profile;  // GroupReplace

    // GroupFill: the first a of the t RGDD classes become (3,0), the rest (0,4).
    std::uint32_t t = 0;
    std::uint32_t a = 0;

    // HoleFill and FrameExpand
    ClassPair partial;
    ClassPair full;                     // HoleFill
    std::uint32_t n = 0;                // FrameExpand
    std::vector<ClassPair> per_point;   // FrameExpand, one profile per frame point

    std::string describe() const;
};

// Deterministic plan for an admissible (v, p). Throws Inadmissible, or Error
// for an order this dispatch does not reach.
Plan solve_plan(std::uint32_t v, const ClassPair& p);

// Replaces every K4 block of RGDD class j by the classes of fill_block[j]
// relabeled onto its points, and every group by one of `group_fills`
// (a single design is reused for all groups; otherwise one per group, all
// with the same profile).
Certificate inflate_rgdd(const Certificate& rgdd, std::span<const Certificate> block_fills,
                         std::span<const Certificate> group_fills);

// Fills each group of a URGDD with a URD on that group (same rules as above).
Certificate replace_groups(const Certificate& urgdd, std::span<const Certificate> group_fills);

// Merges every partial class of an IURD with one class of the hole filling.
Certificate fill_hole(const Certificate& incomplete, const Certificate& hole_fill);

// Points: hole 0..7, frame point i owns 8+12i .. 19+12i. `hole_fill` is a
// URD(8) with profile `partial`.
Certificate frame_expand(std::uint32_t n, const ClassPair& partial, std::span<const ClassPair> per_point,
                         const Certificate& hole_fill);

class Engine {
public:
    explicit Engine(Ingredients& ingredients) : ingredients_(ingredients) {}

    // Throws Inadmissible, NotAvailable, or Error.
    Certificate construct_urd(std::uint32_t v, const ClassPair& p);
    Certificate build(const Plan& plan);

private:
    Ingredients& ingredients_;
};

}  // namespace urd
