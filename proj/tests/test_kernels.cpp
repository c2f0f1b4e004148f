#include <doctest.h>

#include <random>
#include <vector>

#include "urd/kernels.hpp"

namespace k = urd::kernels;

namespace {

std::vector<std::uint8_t> random_bytes(std::mt19937& rng, std::size_t n, int max) {
    std::vector<std::uint8_t> v(n);
    for (auto& x : v) x = static_cast<std::uint8_t>(rng() % (max + 1));
    return v;
}

}  // namespace

TEST_CASE("scalar reference on a hand case") {
    const std::vector<std::uint8_t> want{2, 2, 0, 2, 255};
    const std::vector<std::uint8_t> got{2, 1, 3, 2, 0};
    const auto d = k::scalar::compare_counts(got, want);
    CHECK(d.deficit == 1 + 255);
    CHECK(d.excess == 3);
    CHECK(d.first_mismatch == 1);
    std::vector<std::uint8_t> out(5);
    k::scalar::saturating_residual(want, got, out);
    CHECK(out == std::vector<std::uint8_t>{0, 1, 0, 0, 255});
    CHECK(k::scalar::count_nonzero(got) == 4);
    CHECK(k::scalar::compare_counts(want, want).equal());
}

TEST_CASE("AVX2 kernels agree with the scalar reference") {
    if (!k::avx2_available()) {
        MESSAGE("AVX2 not available on this CPU; equivalence not exercised");
        return;
    }
    std::mt19937 rng(12345);
    // Lengths straddle the 32-byte vector width and the tail path.
    for (std::size_t n : {0, 1, 7, 31, 32, 33, 63, 64, 65, 100, 255, 256, 1000, 4096, 4097}) {
        for (int rep = 0; rep < 20; ++rep) {
            const int max = rep % 2 ? 3 : 255;
            auto want = random_bytes(rng, n, max);
            auto got = want;
            // Sparse differences so first_mismatch lands everywhere, including past the first block.
            const std::size_t flips = rep % 4 == 0 ? 0 : 1 + rng() % 4;
            for (std::size_t f = 0; f < flips && n; ++f) got[rng() % n] = static_cast<std::uint8_t>(rng() % (max + 1));
            if (rep % 5 == 4) got = random_bytes(rng, n, max);

            CHECK(k::avx2::compare_counts(got, want) == k::scalar::compare_counts(got, want));
            std::vector<std::uint8_t> a(n), b(n);
            k::avx2::saturating_residual(want, got, a);
            k::scalar::saturating_residual(want, got, b);
            CHECK(a == b);
            CHECK(k::avx2::count_nonzero(got) == k::scalar::count_nonzero(got));
        }
    }
}

TEST_CASE("dispatch can be pinned") {
    k::force_isa(k::Isa::Scalar);
    CHECK(k::active_isa() == k::Isa::Scalar);
    if (k::avx2_available()) {
        k::force_isa(k::Isa::Avx2);
        CHECK(k::active_isa() == k::Isa::Avx2);
    } else {
        CHECK_THROWS(k::force_isa(k::Isa::Avx2));
    }
    const std::vector<std::uint8_t> x{0, 1, 0, 2};
    CHECK(k::count_nonzero(x) == 2);
}
