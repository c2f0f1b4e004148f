#pragma once

// Byte-wise kernels over pair-count tables. Each entry point has a scalar
// reference and an AVX2 variant; the dispatched wrappers pick one at first
// use. URD_FORCE_SCALAR=1 in the environment pins the scalar path.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>

namespace urd::kernels {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct CountDiff {
    std::uint64_t deficit = 0;  // sum of max(want - got, 0)
    std::uint64_t excess = 0;   // sum of max(got - want, 0)
    std::size_t first_mismatch = npos;

    bool equal() const { return first_mismatch == npos; }
    bool operator==(const CountDiff&) const = default;
};

enum class Isa { Scalar, Avx2 };

bool avx2_available();
Isa active_isa();
void force_isa(Isa isa);  // throws if the ISA is unavailable
const char* isa_name(Isa isa);

CountDiff compare_counts(std::span<const std::uint8_t> got, std::span<const std::uint8_t> want);
// out[i] = max(want[i] - got[i], 0)
void saturating_residual(std::span<const std::uint8_t> want, std::span<const std::uint8_t> got,
                         std::span<std::uint8_t> out);
std::size_t count_nonzero(std::span<const std::uint8_t> data);

namespace scalar {
CountDiff compare_counts(std::span<const std::uint8_t> got, std::span<const std::uint8_t> want);
void saturating_residual(std::span<const std::uint8_t> want, std::span<const std::uint8_t> got,
                         std::span<std::uint8_t> out);
std::size_t count_nonzero(std::span<const std::uint8_t> data);
}  // namespace scalar

namespace avx2 {
CountDiff compare_counts(std::span<const std::uint8_t> got, std::span<const std::uint8_t> want);
void saturating_residual(std::span<const std::uint8_t> want, std::span<const std::uint8_t> got,
                         std::span<std::uint8_t> out);
std::size_t count_nonzero(std::span<const std::uint8_t> data);
}  // namespace avx2

}  // namespace urd::kernels
