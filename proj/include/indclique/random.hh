#ifndef INDCLIQUE_RANDOM_HH
#define INDCLIQUE_RANDOM_HH

#include <cstdint>
#include <random>

namespace indclique
{
    /// Seeded generator with a portable output sequence: std::mt19937_64
    /// (fully specified by the C++ standard) seeded with the 64-bit seed, and
    /// the fixed mappings below instead of the implementation-defined
    /// standard distributions.
    class Rng
    {
        public:
            explicit Rng(std::uint64_t seed) :
                _engine(seed)
            {
            }

            auto next() -> std::uint64_t { return _engine(); }

            /// Top 53 bits scaled into [0, 1).
            auto uniform() -> double
            {
                return static_cast<double>(_engine() >> 11) * 0x1.0p-53;
            }

            /// next() % bound; bound must be positive.
            auto below(std::uint64_t bound) -> std::uint64_t
            {
                return _engine() % bound;
            }

            auto bernoulli(double p) -> bool
            {
                return uniform() < p;
            }

        private:
            std::mt19937_64 _engine;
    };
}

#endif
