#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "extaff/errors.hpp"

namespace extaff {

// Ordered multi-index I = (i_1 < i_2 < ... < i_k), entries in 1..n. The empty
// index is a first-class value: it labels the basis of grade 0, so scalars
// flow through every operation without special cases.
class MultiIndex {
public:
    MultiIndex() = default;

    explicit MultiIndex(std::vector<int> entries) : idx_(std::move(entries)) { validate(); }

    MultiIndex(std::initializer_list<int> entries) : idx_(entries) { validate(); }

    int size() const { return static_cast<int>(idx_.size()); }
    bool empty() const { return idx_.empty(); }
    int operator[](int pos) const { return idx_[static_cast<std::size_t>(pos)]; }
    int max_entry() const { return idx_.empty() ? 0 : idx_.back(); }

    bool contains(int value) const
    {
        return std::binary_search(idx_.begin(), idx_.end(), value);
    }

    const std::vector<int>& entries() const { return idx_; }

    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }

    // Lexicographic; the empty index compares least.
    auto operator<=>(const MultiIndex& other) const = default;

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < idx_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(idx_[i]);
        }
        return s + ")";
    }

private:
    void validate() const
    {
        for (std::size_t i = 0; i < idx_.size(); ++i) {
            if (idx_[i] < 1)
                throw ValidationError("multi-index entry " + std::to_string(idx_[i]) +
                                      " is not positive");
            if (i > 0 && idx_[i - 1] >= idx_[i])
                throw ValidationError("multi-index " + str_of(idx_) +
                                      " is not strictly increasing");
        }
    }

    static std::string str_of(const std::vector<int>& v)
    {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s + "]";
    }

    std::vector<int> idx_;
};

// Sorted disjoint union of several multi-indices together with the parity of
// the permutation sorting their concatenation.
struct SignedMerge {
    MultiIndex merged;
    int sign = 1; // +1 or -1
};

inline long long binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long v = 1;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}

// All of T_k = { I : 1 <= i_1 < ... < i_k <= n } in lexicographic order.
// Empty list for k > n, the singleton empty index for k = 0.
inline std::vector<MultiIndex> enumerate(int n, int k)
{
    if (n < 1) throw ValidationError("enumerate: dimension must be >= 1");
    if (k < 0) throw ValidationError("enumerate: grade must be >= 0");
    std::vector<MultiIndex> out;
    if (k > n) return out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.emplace_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
        if (pos < 0) break;
        ++cur[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// T^r_k = { I in T_k : r not in I }, lexicographic. Length C(n-1, k).
inline std::vector<MultiIndex> enumerate_excluding(int n, int k, int excluded)
{
    if (excluded < 1 || excluded > n)
        throw ValidationError("enumerate_excluding: excluded index out of range");
    std::vector<MultiIndex> out;
    for (auto& idx : enumerate(n, k))
        if (!idx.contains(excluded)) out.push_back(std::move(idx));
    return out;
}

namespace detail {

// Inversion count by merge sort; also detects duplicates (which would make
// the merged tuple invalid).
inline long long count_inversions(std::vector<int>& v, std::vector<int>& scratch,
                                  std::size_t lo, std::size_t hi)
{
    if (hi - lo <= 1) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    long long inv = count_inversions(v, scratch, lo, mid) + count_inversions(v, scratch, mid, hi);
    std::size_t a = lo, b = mid, w = lo;
    while (a < mid && b < hi) {
        if (v[a] == v[b]) throw OverlapError("multi-indices share index " + std::to_string(v[a]));
        if (v[a] < v[b]) {
            scratch[w++] = v[a++];
        } else {
            inv += static_cast<long long>(mid - a);
            scratch[w++] = v[b++];
        }
    }
    while (a < mid) scratch[w++] = v[a++];
    while (b < hi) scratch[w++] = v[b++];
    std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
              scratch.begin() + static_cast<std::ptrdiff_t>(hi),
              v.begin() + static_cast<std::ptrdiff_t>(lo));
    return inv;
}

} // namespace detail

// Merged index [I_1,...,I_m] and sgn(I_1,...,I_m), defined through
// e^{[I_1,...,I_m]} = sgn(I_1,...,I_m) e^{I_1} ^ ... ^ e^{I_m}.
inline SignedMerge merge_sign(std::span<const MultiIndex> parts)
{
    std::vector<int> concat;
    std::size_t total = 0;
    for (const auto& part : parts) total += static_cast<std::size_t>(part.size());
    concat.reserve(total);
    for (const auto& part : parts)
        concat.insert(concat.end(), part.begin(), part.end());
    std::vector<int> scratch(concat.size());
    const long long inv = detail::count_inversions(concat, scratch, 0, concat.size());
    return SignedMerge{MultiIndex(std::move(concat)), (inv % 2 == 0) ? 1 : -1};
}

inline SignedMerge merge_sign(std::initializer_list<MultiIndex> parts)
{
    return merge_sign(std::span<const MultiIndex>(parts.begin(), parts.size()));
}

inline SignedMerge merge_sign(const MultiIndex& a, const MultiIndex& b)
{
    return merge_sign({a, b});
}

// I(i_p): the index with the p-th entry removed, positions counted from 1.
inline MultiIndex remove_at(const MultiIndex& idx, int pos)
{
    if (pos < 1 || pos > idx.size())
        throw PositionError("remove_at: position " + std::to_string(pos) + " out of range for " +
                            idx.str());
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(idx.size() - 1));
    for (int i = 0; i < idx.size(); ++i)
        if (i != pos - 1) out.push_back(idx[i]);
    return MultiIndex(std::move(out));
}

// Sorted complement of I inside (1,...,n).
inline MultiIndex complement(const MultiIndex& idx, int n)
{
    if (idx.max_entry() > n)
        throw ValidationError("complement: index " + idx.str() + " exceeds dimension " +
                              std::to_string(n));
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n - idx.size()));
    for (int i = 1; i <= n; ++i)
        if (!idx.contains(i)) out.push_back(i);
    return MultiIndex(std::move(out));
}

} // namespace extaff
