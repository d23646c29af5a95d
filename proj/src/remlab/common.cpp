#include "remlab/common.hpp"
#include "remlab/random.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace remlab {

std::uint64_t Budget::default_limit()
{
    const char * env = std::getenv("REMOVAL_LAB_BUDGET");
    if (env == nullptr || *env == '\0')
        return kDefaultLimit;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec != std::errc{} || *ptr != '\0' || value == 0)
        return kDefaultLimit;
    return value;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view text) noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

std::uint64_t derive_seed(std::uint64_t master, std::string_view stream, std::uint64_t index) noexcept
{
    return splitmix64(splitmix64(master ^ fnv1a(stream)) + splitmix64(index + 0x632be59bd9b4e019ULL));
}

std::uint64_t uniform_below(Rng & rng, std::uint64_t bound)
{
    if (bound <= 1)
        return 0;
    // Lemire's nearly-divisionless rejection method.
    unsigned __int128 product = static_cast<unsigned __int128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            product = static_cast<unsigned __int128>(rng()) * bound;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::uint64_t>(product >> 64);
}

double uniform_unit(Rng & rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace remlab
