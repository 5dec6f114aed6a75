// Compiled with -mavx2 -mpopcnt on x86-64; only reached after a runtime CPU check.

#include <indclique/simd_bitops.hh>

#include <immintrin.h>

namespace indclique::bitops::detail
{
    namespace
    {
        constexpr std::size_t lanes = 4;

        void and_into(Word * dst, const Word * a, const Word * b, std::size_t words)
        {
            std::size_t w = 0;
            for ( ; w + lanes <= words ; w += lanes) {
                __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + w));
                __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + w));
                _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + w), _mm256_and_si256(va, vb));
            }
            for ( ; w < words ; ++w)
                dst[w] = a[w] & b[w];
        }

        void andnot_into(Word * dst, const Word * a, const Word * b, std::size_t words)
        {
            std::size_t w = 0;
            for ( ; w + lanes <= words ; w += lanes) {
                __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + w));
                __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + w));
                // andnot computes ~first & second
                _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + w), _mm256_andnot_si256(vb, va));
            }
            for ( ; w < words ; ++w)
                dst[w] = a[w] & ~b[w];
        }

        // Nibble lookup popcount, summed per 64-bit lane with sad_epu8.
        inline auto popcount_vector(__m256i v) -> __m256i
        {
            const __m256i lookup = _mm256_setr_epi8(
                    0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                    0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
            const __m256i low_mask = _mm256_set1_epi8(0x0f);
            __m256i lo = _mm256_and_si256(v, low_mask);
            __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
            __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
            return _mm256_sad_epu8(counts, _mm256_setzero_si256());
        }

        inline auto horizontal_sum(__m256i acc) -> std::size_t
        {
            return static_cast<std::size_t>(_mm256_extract_epi64(acc, 0) + _mm256_extract_epi64(acc, 1)
                    + _mm256_extract_epi64(acc, 2) + _mm256_extract_epi64(acc, 3));
        }

        auto popcount(const Word * a, std::size_t words) -> std::size_t
        {
            __m256i acc = _mm256_setzero_si256();
            std::size_t w = 0;
            for ( ; w + lanes <= words ; w += lanes)
                acc = _mm256_add_epi64(acc, popcount_vector(_mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + w))));
            std::size_t result = horizontal_sum(acc);
            for ( ; w < words ; ++w)
                result += static_cast<std::size_t>(_mm_popcnt_u64(a[w]));
            return result;
        }

        auto popcount_and(const Word * a, const Word * b, std::size_t words) -> std::size_t
        {
            __m256i acc = _mm256_setzero_si256();
            std::size_t w = 0;
            for ( ; w + lanes <= words ; w += lanes) {
                __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + w));
                __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + w));
                acc = _mm256_add_epi64(acc, popcount_vector(_mm256_and_si256(va, vb)));
            }
            std::size_t result = horizontal_sum(acc);
            for ( ; w < words ; ++w)
                result += static_cast<std::size_t>(_mm_popcnt_u64(a[w] & b[w]));
            return result;
        }

        auto any(const Word * a, std::size_t words) -> bool
        {
            std::size_t w = 0;
            for ( ; w + lanes <= words ; w += lanes) {
                __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + w));
                if (! _mm256_testz_si256(va, va))
                    return true;
            }
            for ( ; w < words ; ++w)
                if (a[w])
                    return true;
            return false;
        }
    }

    extern const Kernels avx2_table;
    const Kernels avx2_table{"avx2", and_into, andnot_into, popcount, popcount_and, any};
}
