#ifndef FOLDNET_BITSET_HPP
#define FOLDNET_BITSET_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace foldnet {

using BitWord = std::uint64_t;

inline constexpr int bits_per_word = 64;

/**
 * A bitset with a fixed number of words, sized at compile time. Only the
 * operations the enumeration kernels need are provided.
 *
 * Indices start at 0.
 */
template <unsigned words_>
class FixedBitSet
{
public:
    static constexpr int capacity = static_cast<int>(words_) * bits_per_word;

    constexpr FixedBitSet() = default;

    constexpr void set(int a) { bits_[a / bits_per_word] |= BitWord{1} << (a % bits_per_word); }

    constexpr void reset(int a) { bits_[a / bits_per_word] &= ~(BitWord{1} << (a % bits_per_word)); }

    constexpr void reset()
    {
        for (auto& w : bits_)
            w = 0;
    }

    [[nodiscard]] constexpr bool test(int a) const
    {
        return (bits_[a / bits_per_word] >> (a % bits_per_word)) & 1U;
    }

    [[nodiscard]] constexpr int count() const
    {
        int result = 0;
        for (auto w : bits_)
            result += std::popcount(w);
        return result;
    }

    [[nodiscard]] constexpr bool empty() const
    {
        for (auto w : bits_)
            if (w != 0)
                return false;
        return true;
    }

    /// Lowest set bit, or -1.
    [[nodiscard]] constexpr int first_set_bit() const
    {
        for (unsigned i = 0; i < words_; ++i)
            if (bits_[i] != 0)
                return static_cast<int>(i) * bits_per_word + std::countr_zero(bits_[i]);
        return -1;
    }

    constexpr FixedBitSet& operator|=(const FixedBitSet& other)
    {
        for (unsigned i = 0; i < words_; ++i)
            bits_[i] |= other.bits_[i];
        return *this;
    }

    constexpr FixedBitSet& operator&=(const FixedBitSet& other)
    {
        for (unsigned i = 0; i < words_; ++i)
            bits_[i] &= other.bits_[i];
        return *this;
    }

    /// this &= ~other
    constexpr FixedBitSet& subtract(const FixedBitSet& other)
    {
        for (unsigned i = 0; i < words_; ++i)
            bits_[i] &= ~other.bits_[i];
        return *this;
    }

    [[nodiscard]] friend constexpr FixedBitSet operator|(FixedBitSet a, const FixedBitSet& b) { return a |= b; }
    [[nodiscard]] friend constexpr FixedBitSet operator&(FixedBitSet a, const FixedBitSet& b) { return a &= b; }

    [[nodiscard]] constexpr int intersection_count(const FixedBitSet& other) const
    {
        int result = 0;
        for (unsigned i = 0; i < words_; ++i)
            result += std::popcount(bits_[i] & other.bits_[i]);
        return result;
    }

    /// Number of bits set here and not in other.
    [[nodiscard]] constexpr int difference_count(const FixedBitSet& other) const
    {
        int result = 0;
        for (unsigned i = 0; i < words_; ++i)
            result += std::popcount(bits_[i] & ~other.bits_[i]);
        return result;
    }

    [[nodiscard]] constexpr bool intersects(const FixedBitSet& other) const
    {
        for (unsigned i = 0; i < words_; ++i)
            if (bits_[i] & other.bits_[i])
                return true;
        return false;
    }

    [[nodiscard]] constexpr bool is_subset_of(const FixedBitSet& other) const
    {
        for (unsigned i = 0; i < words_; ++i)
            if (bits_[i] & ~other.bits_[i])
                return false;
        return true;
    }

    template <typename F>
    constexpr void for_each(F&& f) const
    {
        for (unsigned i = 0; i < words_; ++i) {
            BitWord w = bits_[i];
            while (w != 0) {
                int b = std::countr_zero(w);
                f(static_cast<int>(i) * bits_per_word + b);
                w &= w - 1;
            }
        }
    }

    [[nodiscard]] std::vector<int> to_vector() const
    {
        std::vector<int> result;
        result.reserve(static_cast<std::size_t>(count()));
        for_each([&](int a) { result.push_back(a); });
        return result;
    }

    [[nodiscard]] constexpr BitWord word(unsigned i) const { return bits_[i]; }

    [[nodiscard]] constexpr std::size_t hash() const
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto w : bits_) {
            h ^= static_cast<std::size_t>(w);
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return h;
    }

    friend constexpr bool operator==(const FixedBitSet&, const FixedBitSet&) = default;

private:
    std::array<BitWord, words_> bits_{};
};

/**
 * Lexicographic order of the ascending index sequences the two sets
 * represent, e.g. {0,5} < {1,2} and {1} < {1,2}.
 */
template <unsigned words_>
[[nodiscard]] constexpr bool sequence_less(const FixedBitSet<words_>& a, const FixedBitSet<words_>& b)
{
    for (unsigned i = 0; i < words_; ++i) {
        BitWord diff = a.word(i) ^ b.word(i);
        if (diff == 0)
            continue;
        BitWord low = diff & (~diff + 1);
        // Bits strictly above the first difference, in this and later words.
        auto has_more = [&](const FixedBitSet<words_>& s) {
            if (s.word(i) & ~((low << 1) - 1))
                return true;
            for (unsigned j = i + 1; j < words_; ++j)
                if (s.word(j) != 0)
                    return true;
            return false;
        };
        if (a.word(i) & low)
            return has_more(b);
        return !has_more(a);
    }
    return false;
}

inline constexpr int max_vertices = 128;
inline constexpr int max_edges = 256;

using VertexSet = FixedBitSet<max_vertices / bits_per_word>;
using EdgeSet = FixedBitSet<max_edges / bits_per_word>;

struct BitSetHash
{
    template <unsigned words_>
    std::size_t operator()(const FixedBitSet<words_>& s) const noexcept
    {
        return s.hash();
    }
};

} // namespace foldnet

#endif
