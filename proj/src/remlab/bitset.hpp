#pragma once

#include "remlab/common.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace remlab {

namespace bits {

inline std::size_t words_for(std::size_t universe) noexcept { return (universe + 63) / 64; }

inline std::size_t popcount(std::span<const std::uint64_t> a) noexcept
{
    std::size_t total = 0;
    for (auto w : a)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

inline std::size_t popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) noexcept
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

inline bool any(std::span<const std::uint64_t> a) noexcept
{
    for (auto w : a)
        if (w != 0)
            return true;
    return false;
}

inline bool test(std::span<const std::uint64_t> a, std::size_t i) noexcept
{
    return (a[i >> 6] >> (i & 63)) & 1U;
}

/// Calls f(v) for every set bit, in increasing order.
template <typename F>
void for_each(std::span<const std::uint64_t> a, F && f)
{
    for (std::size_t w = 0; w < a.size(); ++w) {
        std::uint64_t word = a[w];
        while (word != 0) {
            auto bit = static_cast<std::size_t>(std::countr_zero(word));
            f(static_cast<Vertex>(w * 64 + bit));
            word &= word - 1;
        }
    }
}

} // namespace bits

/// Dynamic bitset over a fixed vertex universe.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_(bits::words_for(universe), 0) {}

    static VertexSet full(std::size_t universe)
    {
        VertexSet s(universe);
        for (std::size_t v = 0; v < universe; ++v)
            s.set(static_cast<Vertex>(v));
        return s;
    }
    static VertexSet from_words(std::size_t universe, std::span<const std::uint64_t> words)
    {
        VertexSet s(universe);
        for (std::size_t i = 0; i < s.words_.size() && i < words.size(); ++i)
            s.words_[i] = words[i];
        return s;
    }
    template <typename Range>
    static VertexSet of(std::size_t universe, const Range & vertices)
    {
        VertexSet s(universe);
        for (auto v : vertices)
            s.set(static_cast<Vertex>(v));
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }
    bool test(Vertex v) const noexcept { return v < universe_ && bits::test(words_, v); }
    void set(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    std::size_t count() const noexcept { return bits::popcount(words_); }
    bool empty() const noexcept { return !bits::any(words_); }

    VertexSet & operator&=(std::span<const std::uint64_t> other) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other[i];
        return *this;
    }
    VertexSet & operator|=(std::span<const std::uint64_t> other) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other[i];
        return *this;
    }
    VertexSet & subtract(std::span<const std::uint64_t> other) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other[i];
        return *this;
    }
    VertexSet & operator&=(const VertexSet & o) noexcept { return *this &= o.words(); }
    VertexSet & operator|=(const VertexSet & o) noexcept { return *this |= o.words(); }
    VertexSet & operator-=(const VertexSet & o) noexcept { return subtract(o.words()); }

    friend VertexSet operator&(VertexSet a, const VertexSet & b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet & b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet & b) { return a -= b; }

    bool operator==(const VertexSet &) const = default;

    template <typename F>
    void for_each(F && f) const
    {
        bits::for_each(words_, std::forward<F>(f));
    }

    std::vector<Vertex> to_vector() const
    {
        std::vector<Vertex> out;
        out.reserve(count());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

  private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace remlab
