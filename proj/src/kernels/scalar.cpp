#include "urd/kernels.hpp"

#include <stdexcept>

namespace urd::kernels::scalar {

CountDiff compare_counts(std::span<const std::uint8_t> got, std::span<const std::uint8_t> want) {
    if (got.size() != want.size()) throw std::invalid_argument("compare_counts: size mismatch");
    CountDiff d;
    for (std::size_t i = 0; i < got.size(); ++i) {
        const int g = got[i], w = want[i];
        if (g == w) continue;
        if (d.first_mismatch == npos) d.first_mismatch = i;
        if (g < w)
            d.deficit += std::uint64_t(w - g);
        else
            d.excess += std::uint64_t(g - w);
    }
    return d;
}

void saturating_residual(std::span<const std::uint8_t> want, std::span<const std::uint8_t> got,
                         std::span<std::uint8_t> out) {
    if (want.size() != got.size() || out.size() != got.size())
        throw std::invalid_argument("saturating_residual: size mismatch");
    for (std::size_t i = 0; i < want.size(); ++i)
        out[i] = want[i] > got[i] ? std::uint8_t(want[i] - got[i]) : std::uint8_t(0);
}

std::size_t count_nonzero(std::span<const std::uint8_t> data) {
    std::size_t n = 0;
    for (auto c : data) n += c != 0;
    return n;
}

}  // namespace urd::kernels::scalar
