#include "urd/kernels.hpp"

#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define URD_HAVE_X86 1
#endif

namespace urd::kernels::avx2 {

#ifdef URD_HAVE_X86

namespace {

__attribute__((target("avx2"))) inline std::uint64_t hsum_sad(__m256i bytes) {
    // sad against zero folds 32 bytes into four 64-bit lane sums.
    const __m256i s = _mm256_sad_epu8(bytes, _mm256_setzero_si256());
    return std::uint64_t(_mm256_extract_epi64(s, 0)) + std::uint64_t(_mm256_extract_epi64(s, 1)) +
           std::uint64_t(_mm256_extract_epi64(s, 2)) + std::uint64_t(_mm256_extract_epi64(s, 3));
}

}  // namespace

__attribute__((target("avx2"))) CountDiff compare_counts(std::span<const std::uint8_t> got,
                                                         std::span<const std::uint8_t> want) {
    if (got.size() != want.size()) throw std::invalid_argument("compare_counts: size mismatch");
    CountDiff d;
    const std::size_t n = got.size();
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i g = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(got.data() + i));
        const __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(want.data() + i));
        const auto eq = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(g, w)));
        if (eq == 0xFFFFFFFFu) continue;
        if (d.first_mismatch == npos) d.first_mismatch = i + std::size_t(__builtin_ctz(~eq));
        d.deficit += hsum_sad(_mm256_subs_epu8(w, g));
        d.excess += hsum_sad(_mm256_subs_epu8(g, w));
    }
    for (; i < n; ++i) {
        const int gv = got[i], wv = want[i];
        if (gv == wv) continue;
        if (d.first_mismatch == npos) d.first_mismatch = i;
        if (gv < wv)
            d.deficit += std::uint64_t(wv - gv);
        else
            d.excess += std::uint64_t(gv - wv);
    }
    return d;
}

__attribute__((target("avx2"))) void saturating_residual(std::span<const std::uint8_t> want,
                                                         std::span<const std::uint8_t> got,
                                                         std::span<std::uint8_t> out) {
    if (want.size() != got.size() || out.size() != got.size())
        throw std::invalid_argument("saturating_residual: size mismatch");
    const std::size_t n = want.size();
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(want.data() + i));
        const __m256i g = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(got.data() + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), _mm256_subs_epu8(w, g));
    }
    for (; i < n; ++i) out[i] = want[i] > got[i] ? std::uint8_t(want[i] - got[i]) : std::uint8_t(0);
}

__attribute__((target("avx2"))) std::size_t count_nonzero(std::span<const std::uint8_t> data) {
    const std::size_t n = data.size();
    std::size_t total = 0;
    std::size_t i = 0;
    const __m256i zero = _mm256_setzero_si256();
    for (; i + 32 <= n; i += 32) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data.data() + i));
        const auto z = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, zero)));
        total += 32 - std::size_t(__builtin_popcount(z));
    }
    for (; i < n; ++i) total += data[i] != 0;
    return total;
}

#else

CountDiff compare_counts(std::span<const std::uint8_t>, std::span<const std::uint8_t>) {
    throw std::runtime_error("AVX2 kernels are not built for this architecture");
}
void saturating_residual(std::span<const std::uint8_t>, std::span<const std::uint8_t>, std::span<std::uint8_t>) {
    throw std::runtime_error("AVX2 kernels are not built for this architecture");
}
std::size_t count_nonzero(std::span<const std::uint8_t>) {
    throw std::runtime_error("AVX2 kernels are not built for this architecture");
}

#endif

}  // namespace urd::kernels::avx2
