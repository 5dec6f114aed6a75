#include <indclique/simd_bitops.hh>

#include <atomic>
#include <cstdlib>
#include <string>

namespace indclique::bitops
{
#if defined(INDCLIQUE_HAVE_AVX2)
    namespace detail { extern const Kernels avx2_table; }
#endif
#if defined(INDCLIQUE_HAVE_NEON)
    namespace detail { extern const Kernels neon_table; }
#endif

    namespace
    {
        auto best_available() -> const Kernels *
        {
            if (auto k = avx2_kernels())
                return k;
            if (auto k = neon_kernels())
                return k;
            return &scalar_kernels();
        }

        auto by_name(std::string_view name) -> const Kernels *
        {
            if (name == "scalar")
                return &scalar_kernels();
            if (name == "avx2")
                return avx2_kernels();
            if (name == "neon")
                return neon_kernels();
            if (name == "auto")
                return best_available();
            return nullptr;
        }

        auto initial() -> const Kernels *
        {
            if (const char * env = std::getenv("INDCLIQUE_SIMD"))
                if (auto k = by_name(env))
                    return k;
            return best_available();
        }

        auto current() -> std::atomic<const Kernels *> &
        {
            static std::atomic<const Kernels *> selected{initial()};
            return selected;
        }
    }

    auto avx2_kernels() -> const Kernels *
    {
#if defined(INDCLIQUE_HAVE_AVX2)
        static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
        return supported ? &detail::avx2_table : nullptr;
#else
        return nullptr;
#endif
    }

    auto neon_kernels() -> const Kernels *
    {
#if defined(INDCLIQUE_HAVE_NEON)
        return &detail::neon_table;
#else
        return nullptr;
#endif
    }

    auto active() -> const Kernels &
    {
        return *current().load(std::memory_order_relaxed);
    }

    auto select(std::string_view name) -> bool
    {
        auto k = by_name(name);
        if (! k)
            return false;
        current().store(k, std::memory_order_relaxed);
        return true;
    }
}
