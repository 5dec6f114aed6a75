#ifndef INDCLIQUE_BITSET_HH
#define INDCLIQUE_BITSET_HH

#include <indclique/simd_bitops.hh>

#include <bit>
#include <cstddef>
#include <vector>

namespace indclique
{
    /// Fixed-length bitset over vertex ids, sized at construction. Bulk
    /// operations go through the runtime-selected word kernels.
    class Bitset
    {
        public:
            using Word = bitops::Word;
            static constexpr unsigned bits_per_word = 64;
            static constexpr unsigned npos = ~0u;

            Bitset() = default;

            explicit Bitset(unsigned size) :
                _size(size),
                _words((size + bits_per_word - 1) / bits_per_word, 0)
            {
            }

            auto size() const -> unsigned { return _size; }
            auto word_count() const -> std::size_t { return _words.size(); }
            auto data() const -> const Word * { return _words.data(); }

            void set(unsigned i) { _words[i / bits_per_word] |= Word{1} << (i % bits_per_word); }
            void reset(unsigned i) { _words[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word)); }
            auto test(unsigned i) const -> bool { return (_words[i / bits_per_word] >> (i % bits_per_word)) & 1; }

            void set_all()
            {
                for (auto & w : _words)
                    w = ~Word{0};
                trim();
            }

            auto count() const -> unsigned
            {
                return static_cast<unsigned>(bitops::active().popcount(_words.data(), _words.size()));
            }

            auto any() const -> bool
            {
                return bitops::active().any(_words.data(), _words.size());
            }

            auto none() const -> bool { return ! any(); }

            /// |this & other| without materialising the intersection.
            auto count_and(const Bitset & other) const -> unsigned
            {
                return static_cast<unsigned>(bitops::active().popcount_and(_words.data(), other._words.data(), _words.size()));
            }

            auto operator&= (const Bitset & other) -> Bitset &
            {
                bitops::active().and_into(_words.data(), _words.data(), other._words.data(), _words.size());
                return *this;
            }

            /// this &= ~other
            auto subtract(const Bitset & other) -> Bitset &
            {
                bitops::active().andnot_into(_words.data(), _words.data(), other._words.data(), _words.size());
                return *this;
            }

            friend auto operator& (const Bitset & a, const Bitset & b) -> Bitset
            {
                Bitset result(a._size);
                bitops::active().and_into(result._words.data(), a._words.data(), b._words.data(), a._words.size());
                return result;
            }

            auto first() const -> unsigned
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w)
                    if (_words[w])
                        return static_cast<unsigned>(w * bits_per_word + std::countr_zero(_words[w]));
                return npos;
            }

            /// Smallest set index strictly greater than i, or npos.
            auto next(unsigned i) const -> unsigned
            {
                ++i;
                if (i >= _size)
                    return npos;
                std::size_t w = i / bits_per_word;
                Word word = _words[w] & (~Word{0} << (i % bits_per_word));
                while (true) {
                    if (word)
                        return static_cast<unsigned>(w * bits_per_word + std::countr_zero(word));
                    if (++w == _words.size())
                        return npos;
                    word = _words[w];
                }
            }

            template <typename F_>
            void for_each(F_ && f) const
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w) {
                    Word word = _words[w];
                    while (word) {
                        f(static_cast<unsigned>(w * bits_per_word + std::countr_zero(word)));
                        word &= word - 1;
                    }
                }
            }

            auto to_vector() const -> std::vector<unsigned>
            {
                std::vector<unsigned> result;
                for_each([&] (unsigned v) { result.push_back(v); });
                return result;
            }

            auto operator== (const Bitset &) const -> bool = default;

        private:
            void trim()
            {
                if (_size % bits_per_word && ! _words.empty())
                    _words.back() &= (Word{1} << (_size % bits_per_word)) - 1;
            }

            unsigned _size = 0;
            std::vector<Word> _words;
    };
}

#endif
