#include <doctest.h>

#include <indclique/bitset.hh>
#include <indclique/random.hh>
#include <indclique/simd_bitops.hh>

#include <vector>

using namespace indclique;
using bitops::Word;

namespace
{
    auto variants() -> std::vector<const bitops::Kernels *>
    {
        std::vector<const bitops::Kernels *> result{&bitops::scalar_kernels()};
        if (auto k = bitops::avx2_kernels())
            result.push_back(k);
        if (auto k = bitops::neon_kernels())
            result.push_back(k);
        return result;
    }

    auto random_words(Rng & rng, std::size_t words, double density) -> std::vector<Word>
    {
        std::vector<Word> result(words);
        for (auto & w : result)
            for (unsigned b = 0 ; b < 64 ; ++b)
                if (rng.bernoulli(density))
                    w |= Word{1} << b;
        return result;
    }

    // Restores automatic selection when a test forces a variant.
    struct SelectGuard
    {
        ~SelectGuard() { bitops::select("auto"); }
    };
}

TEST_CASE("every available kernel variant matches the scalar reference")
{
    auto & reference = bitops::scalar_kernels();
    Rng rng(42);
    for (auto variant : variants()) {
        CAPTURE(variant->name);
        for (std::size_t words = 0 ; words <= 37 ; ++words) {
            for (double density : {0.0, 0.03, 0.5, 1.0}) {
                auto a = random_words(rng, words, density), b = random_words(rng, words, 0.5);
                std::vector<Word> expect(words), got(words);

                reference.and_into(expect.data(), a.data(), b.data(), words);
                variant->and_into(got.data(), a.data(), b.data(), words);
                CHECK(got == expect);

                reference.andnot_into(expect.data(), a.data(), b.data(), words);
                variant->andnot_into(got.data(), a.data(), b.data(), words);
                CHECK(got == expect);

                CHECK(variant->popcount(a.data(), words) == reference.popcount(a.data(), words));
                CHECK(variant->popcount_and(a.data(), b.data(), words) == reference.popcount_and(a.data(), b.data(), words));
                CHECK(variant->any(a.data(), words) == reference.any(a.data(), words));
            }
        }
    }
}

TEST_CASE("kernels allow the destination to alias an input")
{
    Rng rng(7);
    for (auto variant : variants()) {
        CAPTURE(variant->name);
        auto a = random_words(rng, 11, 0.5), b = random_words(rng, 11, 0.5);
        std::vector<Word> expect(11);
        bitops::scalar_kernels().andnot_into(expect.data(), a.data(), b.data(), 11);
        variant->andnot_into(a.data(), a.data(), b.data(), 11);
        CHECK(a == expect);
    }
}

TEST_CASE("any sees a single bit in the last word past the vector body")
{
    for (auto variant : variants()) {
        std::vector<Word> words(9, 0);
        CHECK_FALSE(variant->any(words.data(), words.size()));
        words[8] = Word{1} << 63;
        CHECK(variant->any(words.data(), words.size()));
        CHECK(variant->popcount(words.data(), words.size()) == 1);
    }
}

TEST_CASE("select switches variants and rejects unknown names")
{
    SelectGuard guard;
    CHECK(bitops::select("scalar"));
    CHECK(std::string(bitops::active().name) == "scalar");
    CHECK_FALSE(bitops::select("sse9"));
    CHECK(std::string(bitops::active().name) == "scalar");
    CHECK(bitops::select("auto"));
}

TEST_CASE("Bitset agrees with a vector<bool> model")
{
    SelectGuard guard;
    Rng rng(99);
    for (auto variant : variants()) {
        bitops::select(variant->name);
        for (unsigned size : {0u, 1u, 63u, 64u, 65u, 200u, 513u}) {
            std::vector<bool> model_a(size), model_b(size);
            Bitset a(size), b(size);
            for (unsigned i = 0 ; i < size ; ++i) {
                if (rng.bernoulli(0.3)) { model_a[i] = true; a.set(i); }
                if (rng.bernoulli(0.6)) { model_b[i] = true; b.set(i); }
            }

            unsigned count_a = 0, count_both = 0;
            std::vector<unsigned> listed;
            for (unsigned i = 0 ; i < size ; ++i) {
                count_a += model_a[i];
                count_both += model_a[i] && model_b[i];
                if (model_a[i])
                    listed.push_back(i);
            }
            CHECK(a.count() == count_a);
            CHECK(a.count_and(b) == count_both);
            CHECK((a & b).count() == count_both);
            CHECK(a.to_vector() == listed);
            CHECK(a.any() == ! listed.empty());

            std::vector<unsigned> walked;
            for (auto i = a.first() ; i != Bitset::npos ; i = a.next(i))
                walked.push_back(i);
            CHECK(walked == listed);

            auto c = a;
            c.subtract(b);
            for (unsigned i = 0 ; i < size ; ++i)
                CHECK(c.test(i) == (model_a[i] && ! model_b[i]));

            Bitset full(size);
            full.set_all();
            CHECK(full.count() == size);
        }
    }
}
