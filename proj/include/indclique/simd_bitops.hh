#ifndef INDCLIQUE_SIMD_BITOPS_HH
#define INDCLIQUE_SIMD_BITOPS_HH

#include <cstddef>
#include <cstdint>
#include <string_view>

// Word-array kernels behind Bitset. Every variant must agree bit for bit with
// the scalar reference; tests/test_bitops.cc checks each one that the build
// and the host CPU provide.
namespace indclique::bitops
{
    using Word = std::uint64_t;

    struct Kernels
    {
        const char * name;
        // dst[w] = a[w] & b[w]; dst may alias a or b.
        void (* and_into)(Word * dst, const Word * a, const Word * b, std::size_t words);
        // dst[w] = a[w] & ~b[w]; dst may alias a or b.
        void (* andnot_into)(Word * dst, const Word * a, const Word * b, std::size_t words);
        auto (* popcount)(const Word * a, std::size_t words) -> std::size_t;
        auto (* popcount_and)(const Word * a, const Word * b, std::size_t words) -> std::size_t;
        auto (* any)(const Word * a, std::size_t words) -> bool;
    };

    auto scalar_kernels() -> const Kernels &;

    /// nullptr unless compiled in and supported by the running CPU.
    auto avx2_kernels() -> const Kernels *;
    auto neon_kernels() -> const Kernels *;

    /// The variant used by Bitset. Picked on first use: the best one the CPU
    /// supports, unless INDCLIQUE_SIMD=scalar|avx2|neon says otherwise.
    auto active() -> const Kernels &;

    /// Force a variant ("scalar", "avx2", "neon", or "auto"). Returns false and
    /// leaves the selection alone if the variant is unavailable.
    auto select(std::string_view name) -> bool;
}

#endif
