#pragma once

// Explicit small designs, entered once from their printed class lists and
// exposed as certificates.
//
// Designators:
//   URD(4;3,0) URD(4;0,4) URD(8;1,8) URD(12;5,8) URD(12;2,12)
//   URGDD(12^2;12,0) URGDD(12^2;6,8) URGDD(12^2;0,16)
//   IURD(20-8;P;F) for P in {7,0 4,4 1,8} and F in {12,0 9,4 6,8 3,12 0,16}
//
// URD designs live on 0..v-1. The 12^2 designs use groups {0..11} (a_1..a_12)
// and {12..23} (b_1..b_12). The IURD designs live on 0..19 with hole 0..7.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "urd/model.hpp"
#include "urd/spectrum.hpp"

namespace urd {

// A starter parallel class on Z_m, developed by +1 (mod m).
struct BaseBlockOrbit {
    std::vector<Block> base;
    std::uint32_t modulus = 0;
};

// m classes; class i adds i (mod m) to every vertex. Throws
// std::invalid_argument unless the base is a parallel class of Z_m.
std::vector<BlockClass> develop(const BaseBlockOrbit& orbit);

class UnknownDesignator : public Error {
public:
    using Error::Error;
};

struct CatalogEntry {
    std::string designator;
    Certificate certificate;
    // Set when the printed list itself does not verify; `certificate` is then the repaired design.
    std::optional<Certificate> as_printed;
    std::string erratum;
    bool printed = true;  // false for designs supplied by a generator only
};

// All entries, built on first use.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(std::string_view designator);
const Certificate& lookup(std::string_view designator);
std::vector<std::string> designators();

// Content hashes recorded when the transcriptions were frozen.
std::optional<std::string> frozen_hash(std::string_view designator);

std::string urd_designator(std::uint32_t v, const ClassPair& p);
std::string urgdd12_designator(const ClassPair& p);
std::string iurd20_designator(const ClassPair& partial, const ClassPair& full);

// Pieces of the 2K_20 - 2K_8 designs: partial classes miss the hole 0..7.
std::vector<BlockClass> iurd20_partial(const ClassPair& p);
std::vector<BlockClass> iurd20_full(const ClassPair& p);
inline constexpr std::array<ClassPair, 3> kIurd20Partials{{{7, 0}, {4, 4}, {1, 8}}};
inline constexpr std::array<ClassPair, 5> kIurd20Fulls{{{12, 0}, {9, 4}, {6, 8}, {3, 12}, {0, 16}}};

}  // namespace urd
