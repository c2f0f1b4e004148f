#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "urd/kernels.hpp"

namespace urd::kernels {

namespace {

Isa detect() {
    if (const char* env = std::getenv("URD_FORCE_SCALAR"); env && std::strcmp(env, "0") != 0)
        return Isa::Scalar;
    return avx2_available() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    static const bool ok = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") != 0;
    }();
    return ok;
#else
    return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    if (isa == Isa::Avx2 && !avx2_available()) throw std::runtime_error("AVX2 not available on this CPU");
    current().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

CountDiff compare_counts(std::span<const std::uint8_t> got, std::span<const std::uint8_t> want) {
    return active_isa() == Isa::Avx2 ? avx2::compare_counts(got, want) : scalar::compare_counts(got, want);
}

void saturating_residual(std::span<const std::uint8_t> want, std::span<const std::uint8_t> got,
                         std::span<std::uint8_t> out) {
    if (active_isa() == Isa::Avx2)
        avx2::saturating_residual(want, got, out);
    else
        scalar::saturating_residual(want, got, out);
}

std::size_t count_nonzero(std::span<const std::uint8_t> data) {
    return active_isa() == Isa::Avx2 ? avx2::count_nonzero(data) : scalar::count_nonzero(data);
}

}  // namespace urd::kernels
