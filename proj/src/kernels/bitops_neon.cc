// AArch64 only; NEON is baseline there so no runtime check is needed.

#include <indclique/simd_bitops.hh>

#include <arm_neon.h>

namespace indclique::bitops::detail
{
    namespace
    {
        constexpr std::size_t lanes = 2;

        void and_into(Word * dst, const Word * a, const Word * b, std::size_t words)
        {
            std::size_t w = 0;
            for ( ; w + lanes <= words ; w += lanes)
                vst1q_u64(dst + w, vandq_u64(vld1q_u64(a + w), vld1q_u64(b + w)));
            for ( ; w < words ; ++w)
                dst[w] = a[w] & b[w];
        }

        void andnot_into(Word * dst, const Word * a, const Word * b, std::size_t words)
        {
            std::size_t w = 0;
            // bic computes first & ~second
            for ( ; w + lanes <= words ; w += lanes)
                vst1q_u64(dst + w, vbicq_u64(vld1q_u64(a + w), vld1q_u64(b + w)));
            for ( ; w < words ; ++w)
                dst[w] = a[w] & ~b[w];
        }

        inline auto count_vector(uint64x2_t v) -> std::size_t
        {
            return vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
        }

        auto popcount(const Word * a, std::size_t words) -> std::size_t
        {
            std::size_t result = 0;
            std::size_t w = 0;
            for ( ; w + lanes <= words ; w += lanes)
                result += count_vector(vld1q_u64(a + w));
            for ( ; w < words ; ++w)
                result += static_cast<std::size_t>(__builtin_popcountll(a[w]));
            return result;
        }

        auto popcount_and(const Word * a, const Word * b, std::size_t words) -> std::size_t
        {
            std::size_t result = 0;
            std::size_t w = 0;
            for ( ; w + lanes <= words ; w += lanes)
                result += count_vector(vandq_u64(vld1q_u64(a + w), vld1q_u64(b + w)));
            for ( ; w < words ; ++w)
                result += static_cast<std::size_t>(__builtin_popcountll(a[w] & b[w]));
            return result;
        }

        auto any(const Word * a, std::size_t words) -> bool
        {
            std::size_t w = 0;
            for ( ; w + lanes <= words ; w += lanes)
                if (vmaxvq_u32(vreinterpretq_u32_u64(vld1q_u64(a + w))))
                    return true;
            for ( ; w < words ; ++w)
                if (a[w])
                    return true;
            return false;
        }
    }

    extern const Kernels neon_table;
    const Kernels neon_table{"neon", and_into, andnot_into, popcount, popcount_and, any};
}
