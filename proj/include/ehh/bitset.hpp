#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ehh {

using Word = std::uint64_t;

inline constexpr int kWordBits = 64;

inline int words_for(int bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Dynamic bitset over vertex ids. Adjacency rows of Graph use the same word
/// layout, so rows can be combined with a Bitset through their spans.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int bits)
        : bits_(bits)
        , words_(static_cast<std::size_t>(words_for(bits)), 0)
    {
    }

    int size() const { return bits_; }

    bool test(int i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(int i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void reset(int i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

    int count() const
    {
        int c = 0;
        for (Word w : words_)
            c += std::popcount(w);
        return c;
    }

    bool any() const
    {
        for (Word w : words_)
            if (w)
                return true;
        return false;
    }

    void set_all()
    {
        for (auto& w : words_)
            w = ~Word{0};
        trim();
    }

    void unite(std::span<const Word> other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other[i];
    }

    void intersect(std::span<const Word> other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other[i];
    }

    void subtract(std::span<const Word> other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other[i];
    }

    std::span<const Word> words() const { return words_; }

    /// Smallest member >= from, or -1.
    int next(int from) const
    {
        if (from >= bits_)
            return -1;
        std::size_t wi = static_cast<std::size_t>(from / kWordBits);
        Word w = words_[wi] & (~Word{0} << (from % kWordBits));
        while (true) {
            if (w)
                return static_cast<int>(wi) * kWordBits + std::countr_zero(w);
            if (++wi == words_.size())
                return -1;
            w = words_[wi];
        }
    }

    std::vector<int> members() const
    {
        std::vector<int> out;
        for (int i = next(0); i >= 0; i = next(i + 1))
            out.push_back(i);
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    void trim()
    {
        if (bits_ % kWordBits && !words_.empty())
            words_.back() &= (Word{1} << (bits_ % kWordBits)) - 1;
    }

    int bits_ = 0;
    std::vector<Word> words_;
};

inline int count_and(std::span<const Word> a, std::span<const Word> b)
{
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        c += std::popcount(a[i] & b[i]);
    return c;
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i])
            return true;
    return false;
}

/// True iff a has a member outside b.
inline bool escapes(std::span<const Word> a, std::span<const Word> b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i])
            return true;
    return false;
}

} // namespace ehh
