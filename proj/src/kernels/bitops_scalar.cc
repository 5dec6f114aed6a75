#include <indclique/simd_bitops.hh>

#include <bit>

namespace indclique::bitops
{
    namespace
    {
        void and_into(Word * dst, const Word * a, const Word * b, std::size_t words)
        {
            for (std::size_t w = 0 ; w < words ; ++w)
                dst[w] = a[w] & b[w];
        }

        void andnot_into(Word * dst, const Word * a, const Word * b, std::size_t words)
        {
            for (std::size_t w = 0 ; w < words ; ++w)
                dst[w] = a[w] & ~b[w];
        }

        auto popcount(const Word * a, std::size_t words) -> std::size_t
        {
            std::size_t result = 0;
            for (std::size_t w = 0 ; w < words ; ++w)
                result += std::popcount(a[w]);
            return result;
        }

        auto popcount_and(const Word * a, const Word * b, std::size_t words) -> std::size_t
        {
            std::size_t result = 0;
            for (std::size_t w = 0 ; w < words ; ++w)
                result += std::popcount(a[w] & b[w]);
            return result;
        }

        auto any(const Word * a, std::size_t words) -> bool
        {
            for (std::size_t w = 0 ; w < words ; ++w)
                if (a[w])
                    return true;
            return false;
        }

        const Kernels table{"scalar", and_into, andnot_into, popcount, popcount_and, any};
    }

    auto scalar_kernels() -> const Kernels &
    {
        return table;
    }
}
