#include "remlab/arith_sets.hpp"
#include "remlab/common.hpp"

#include <algorithm>
#include <map>

namespace remlab {

namespace {

constexpr std::uint64_t kMaxN = std::uint64_t{1} << 16;

/// Shifted values 1 + v <= N whose base-D digits are all at most `top`,
/// grouped by the squared norm of the digit vector.
std::map<std::uint64_t, std::vector<std::uint64_t>> spheres(std::uint64_t N, std::uint64_t D, std::uint64_t top)
{
    std::map<std::uint64_t, std::vector<std::uint64_t>> out;
    for (std::uint64_t v = 0; v < N; ++v) {
        std::uint64_t norm = 0;
        bool ok = true;
        for (auto rest = v; rest > 0 && ok; rest /= D) {
            auto digit = rest % D;
            ok = digit <= top;
            norm += digit * digit;
        }
        if (ok)
            out[norm].push_back(v + 1);
    }
    return out;
}

} // namespace

SolutionFreeSet solution_free_set(std::uint64_t N, std::size_t k)
{
    if (k == 0)
        throw InvalidArgument("solution_free_set: k must be at least 1");
    if (N > kMaxN)
        throw InvalidArgument("solution_free_set: N too large");
    SolutionFreeSet out{N, {}, k};
    if (N == 0)
        return out;
    const std::uint64_t sum_terms = 2 * k;
    for (std::uint64_t D = sum_terms + 1; D <= std::max(N, sum_terms + 1); ++D) {
        const std::uint64_t top = (D - 1) / sum_terms;
        auto by_norm = spheres(N, D, top);
        std::vector<std::uint64_t> best;
        if (top == 1) {
            for (auto & [norm, values] : by_norm)
                best.insert(best.end(), values.begin(), values.end());
        } else {
            for (auto & [norm, values] : by_norm)
                if (values.size() > best.size())
                    best = values;
        }
        if (best.size() > out.B.size())
            out.B = std::move(best);
    }
    std::sort(out.B.begin(), out.B.end());
    return out;
}

SolutionFreeSet behrend_set(std::uint64_t N) { return solution_free_set(N, 1); }

std::optional<std::string> audit_solution_free(const SolutionFreeSet & s)
{
    if (s.k == 0)
        return "k must be at least 1";
    for (std::size_t i = 0; i < s.B.size(); ++i) {
        if (s.B[i] < 1 || s.B[i] > s.N)
            return "element " + std::to_string(s.B[i]) + " outside [1, N]";
        if (i > 0 && s.B[i] <= s.B[i - 1])
            return "elements not strictly increasing";
    }
    if (s.B.empty())
        return std::nullopt;
    if (s.N > kMaxN)
        return "N too large to audit";
    // ways[t][v]: number of ordered t-tuples from B summing to v, capped at 2.
    const std::size_t terms = 2 * s.k;
    const std::uint64_t hi = terms * s.N;
    std::vector<std::uint8_t> ways(hi + 1, 0), next(hi + 1);
    ways[0] = 1;
    for (std::size_t t = 0; t < terms; ++t) {
        std::fill(next.begin(), next.end(), 0);
        for (std::uint64_t v = 0; v <= hi; ++v) {
            if (!ways[v])
                continue;
            for (auto b : s.B) {
                if (v + b > hi)
                    break;
                next[v + b] = static_cast<std::uint8_t>(std::min(2, next[v + b] + ways[v]));
            }
        }
        std::swap(ways, next);
    }
    for (auto b0 : s.B)
        if (ways[terms * b0] > 1)
            return "nontrivial solution with b0 = " + std::to_string(b0) + " (sum " + std::to_string(terms * b0) + ")";
    return std::nullopt;
}

} // namespace remlab
