#include "davlab/setpartition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace davlab {

std::vector<int> SetPartition::induced_multiset(int ground_size) const {
    std::vector<int> out(ground_size, 0);
    for (const auto& b : blocks)
        for (int e : b) {
            if (e < 0 || e >= ground_size)
                throw std::invalid_argument("block element outside ground set");
            ++out[e];
        }
    return out;
}

bool has_n_setpartition(const std::vector<int>& mult, int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    int len = std::accumulate(mult.begin(), mult.end(), 0);
    int h = mult.empty() ? 0 : *std::max_element(mult.begin(), mult.end());
    return h <= n && n <= len;
}

std::optional<std::pair<std::vector<int>, SetPartition>>
find_subsequence_with_setpartition(const std::vector<int>& mult, int ell, int n) {
    if (ell < 0) throw std::invalid_argument("ell must be nonnegative");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    int len = std::accumulate(mult.begin(), mult.end(), 0);
    if (len < ell + n) return std::nullopt;

    // counting criterion; the worst X of each size is a set of most
    // frequent elements, so only multiplicity level sets are checked
    std::vector<int> sorted(mult);
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    int kmax = ell == 0 ? 0 : (ell - 1) / n + 1;
    int topsum = 0;
    for (int k = 1; k <= std::min<int>(kmax, sorted.size()); ++k) {
        topsum += sorted[k - 1];
        if (topsum > len - ell + (k - 1) * n) return std::nullopt;
    }

    // drop terms from the largest multiplicities down to size ell + n
    std::vector<int> keep(mult);
    for (int drop = len - (ell + n); drop > 0; --drop) {
        int best = static_cast<int>(std::max_element(keep.begin(), keep.end()) -
                                    keep.begin());
        --keep[best];
    }
    if (*std::max_element(keep.begin(), keep.end()) > n)
        throw std::logic_error("criterion passed but trimmed multiset has h > n");

    // deal in decreasing multiplicity order, round robin: an element with
    // multiplicity v <= n lands in v distinct consecutive blocks
    std::vector<int> order;
    for (size_t e = 0; e < keep.size(); ++e)
        if (keep[e] > 0) order.push_back(static_cast<int>(e));
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return keep[a] != keep[b] ? keep[a] > keep[b] : a < b; });
    SetPartition part;
    part.blocks.assign(n, {});
    int pos = 0;
    for (int e : order)
        for (int k = 0; k < keep[e]; ++k) part.blocks[pos++ % n].push_back(e);

    for (const auto& b : part.blocks)
        if (b.empty()) throw std::logic_error("constructed partition has an empty block");
    return std::make_pair(std::move(keep), std::move(part));
}

}  // namespace davlab
