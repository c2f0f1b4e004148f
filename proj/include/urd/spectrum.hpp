#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace urd {

// (r, s): r classes of 4-cycles and s classes of 3-stars.
struct ClassPair {
    std::uint32_t r = 0;
    std::uint32_t s = 0;

    ClassPair operator+(const ClassPair& o) const { return {r + o.r, s + o.s}; }
    auto operator<=>(const ClassPair&) const = default;
    std::string str() const;  // "(r,s)"
};

using PairSet = std::set<ClassPair>;

// The admissible spectrum I(v): empty unless v >= 4 and v = 0 (mod 4);
// otherwise {(v-1-3x, 4x)} with x from 0 up to (v-3)/3, (v-1)/3 or (v-2)/3
// for v = 0, 4, 8 (mod 12).
struct SpectrumSet {
    std::uint32_t v = 0;
    std::vector<ClassPair> pairs;  // decreasing r

    bool empty() const { return pairs.empty(); }
    bool contains(const ClassPair& p) const;
    PairSet as_set() const { return {pairs.begin(), pairs.end()}; }
};

SpectrumSet spectrum_set(std::uint32_t v);

// Largest x in I(v); -1 when I(v) is empty.
int spectrum_max_x(std::uint32_t v);

bool admissible(std::uint32_t v, const ClassPair& p);

// {x + y : x in X, y in Y}
PairSet sum_sets(const PairSet& x, const PairSet& y);

// All sums of h elements of X, repetition allowed. h >= 1.
PairSet multiple(std::uint32_t h, const PairSet& x);

}  // namespace urd
