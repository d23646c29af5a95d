#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace remlab {

using Rng = std::mt19937_64;

/// Splits one master seed into independent named streams, so adding a new
/// consumer never shifts the draws another consumer sees.
std::uint64_t derive_seed(std::uint64_t master, std::string_view stream, std::uint64_t index = 0) noexcept;

inline Rng make_rng(std::uint64_t master, std::string_view stream, std::uint64_t index = 0)
{
    return Rng(derive_seed(master, stream, index));
}

/// Uniform integer in [0, bound). Portable across standard libraries, unlike
/// std::uniform_int_distribution.
std::uint64_t uniform_below(Rng & rng, std::uint64_t bound);

/// Uniform real in [0, 1) from the top 53 bits.
double uniform_unit(Rng & rng);

template <typename T>
void shuffle(std::span<T> items, Rng & rng)
{
    for (std::size_t i = items.size(); i > 1; --i) {
        auto j = static_cast<std::size_t>(uniform_below(rng, i));
        using std::swap;
        swap(items[i - 1], items[j]);
    }
}

} // namespace remlab
