#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace remlab {

/// B ⊆ [1, N] with no solution of b_1 + ... + b_{2k} = 2k b_0 (all b_i in B)
/// other than the constant one. For k = 1 this is 3-AP-freeness.
struct SolutionFreeSet {
    std::uint64_t N = 0;
    std::vector<std::uint64_t> B;
    std::size_t k = 1;
};

/// Behrend sphere construction for the k-cycle equation: digit vectors in
/// base D with digits at most (D-1)/(2k) on one sphere, shifted by one. Tries
/// every base and radius (plus the whole 0/1 cube when the largest
/// digit is 1) and keeps the biggest set. Never empty for N >= 1; N <= 65536.
SolutionFreeSet solution_free_set(std::uint64_t N, std::size_t k);
/// solution_free_set(N, 1).
SolutionFreeSet behrend_set(std::uint64_t N);

/// Description of the first nontrivial solution (b_0 and the target sum), or
/// nullopt. Also rejects elements outside [1, N] and unsorted or repeated
/// entries. Cost is O(k^2 N |B|).
std::optional<std::string> audit_solution_free(const SolutionFreeSet & s);

} // namespace remlab
