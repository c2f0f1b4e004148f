#include "urd/spectrum.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace urd {

std::string ClassPair::str() const {
    return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

bool SpectrumSet::contains(const ClassPair& p) const {
    return std::find(pairs.begin(), pairs.end(), p) != pairs.end();
}

int spectrum_max_x(std::uint32_t v) {
    if (v < 4 || v % 4 != 0) return -1;
    // v-3, v-1, v-2 are exact multiples of 3 in their residue classes.
    std::uint32_t top = 0;
    switch (v % 12) {
        case 0: top = v - 3; break;
        case 4: top = v - 1; break;
        case 8: top = v - 2; break;
        default: return -1;
    }
    if (top % 3 != 0) throw std::logic_error("spectrum bound is not an integer");
    return static_cast<int>(top / 3);
}

SpectrumSet spectrum_set(std::uint32_t v) {
    SpectrumSet out;
    out.v = v;
    const int max_x = spectrum_max_x(v);
    for (int x = 0; x <= max_x; ++x) {
        const auto ux = static_cast<std::uint32_t>(x);
        assert(v - 1 >= 3 * ux);
        out.pairs.push_back({v - 1 - 3 * ux, 4 * ux});
    }
    return out;
}

bool admissible(std::uint32_t v, const ClassPair& p) {
    if (spectrum_max_x(v) < 0) return false;
    if (p.s % 4 != 0) return false;
    const std::uint32_t x = p.s / 4;
    if (x > static_cast<std::uint32_t>(spectrum_max_x(v))) return false;
    return p.r + 3 * x == v - 1;
}

PairSet sum_sets(const PairSet& x, const PairSet& y) {
    PairSet out;
    for (const auto& a : x)
        for (const auto& b : y) out.insert(a + b);
    return out;
}

PairSet multiple(std::uint32_t h, const PairSet& x) {
    if (h == 0) throw std::invalid_argument("multiple: h must be positive");
    PairSet acc = x;
    for (std::uint32_t i = 1; i < h; ++i) acc = sum_sets(acc, x);
    return acc;
}

}  // namespace urd
