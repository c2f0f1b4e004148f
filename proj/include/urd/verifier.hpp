#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "urd/model.hpp"

namespace urd {

// Checks run in this order; the first failure is reported.
enum class Check : std::uint8_t {
    WellFormed = 1,        // target descriptor and blocks: labels in range, distinct vertices
    Uniformity = 2,        // every block has its class's kind
    Resolvability = 3,     // blocks of a class are disjoint and cover points minus `missing`
    EdgeCoverage = 4,      // block edge multiset equals the target's, exactly
    ClaimedCounts = 5,     // claimed r, s and partial counts match the class tallies
    PartialStructure = 6,  // partial classes respect the hole / frame rules of the target
};

const char* check_name(Check c);

struct VerificationReport {
    bool passed = true;
    std::optional<Check> failed;
    std::string detail;
    std::optional<std::size_t> class_index;
    std::optional<std::size_t> block_index;
    std::uint64_t uncovered = 0;  // missing edge copies (check 4)
    std::uint64_t overcovered = 0;
    std::size_t classes = 0;
    std::size_t blocks = 0;

    std::string text() const;
    std::string json() const;  // single-line machine-readable form
};

// Pure function of the certificate; shares no state with any constructor.
VerificationReport verify(const Certificate& c);

// True iff the partial classes of every certificate cover the same edge
// multiset. Throws std::invalid_argument when the targets differ.
bool verify_equal_partial_coverage(std::span<const Certificate> certs);

}  // namespace urd
