#pragma once

// Certificate file format: compact UTF-8 JSON with a fixed key order.
//
//   {"version":1,
//    "target":{"variant":"complete"|"multipartite"|"complete_minus_hole",
//              "v":N,"lambda":L[,"groups":[[..],..]][,"hole":[..]]},
//    "classes":[{"kind":"C4"|"K13"|"K4"|"K2",
//                "coverage":"full"|{"missing":[..]},
//                "blocks":[[a,b,c,d],..]},..],
//    "claimed":{"r":R,"s":S,"partial_r":PR,"partial_s":PS},
//    "provenance":["..",..]}
//
// C4 blocks list the cycle order, K13 blocks the center first. In canonical
// form every block is in canonical_block order, blocks inside a class are
// sorted, and groups, hole and missing sets are sorted. Class order is kept.

#include <filesystem>
#include <string>
#include <string_view>

#include "urd/model.hpp"

namespace urd {

inline constexpr int kFormatVersion = 1;

class ParseError : public Error {
public:
    using Error::Error;
};

Certificate canonicalize(Certificate c);

// Serializes the canonical form of `c`.
std::string write_certificate(const Certificate& c);

// Throws ParseError on anything structurally unreadable. Content is not
// verified here; that is the verifier's job.
Certificate read_certificate(std::string_view text);

Certificate load_certificate(const std::filesystem::path& path);
void save_certificate(const Certificate& c, const std::filesystem::path& path);

// FNV-1a 64 of the canonical serialization, as 16 hex digits.
std::string content_hash(const Certificate& c);

}  // namespace urd
