#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace davlab {

/// Partition of a multiset over ground set {0..P-1} into nonempty,
/// repetition-free blocks.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    /// Multiplicity vector of the concatenated blocks.
    std::vector<int> induced_multiset(int ground_size) const;
};

/// A multiset (multiplicity vector) has an n-setpartition iff h(S) <= n <= |S|.
bool has_n_setpartition(const std::vector<int>& mult, int n);

/// Existence criterion and constructive output: a subsequence S' of S with
/// |S'| = ell + n together with an n-setpartition of S' into blocks of
/// near-equal size. Returns absent when the counting criterion fails.
std::optional<std::pair<std::vector<int>, SetPartition>>
find_subsequence_with_setpartition(const std::vector<int>& mult, int ell, int n);

}  // namespace davlab
