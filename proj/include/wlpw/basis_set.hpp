#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace wlpw {

// A subset of [n] stored as a bit mask; vertex a occupies bit a-1.
using SubsetMask = std::uint32_t;

constexpr SubsetMask vertex_bit(int a) { return SubsetMask{1} << (a - 1); }

int popcount(SubsetMask m);
std::vector<int> mask_elements(SubsetMask m);
SubsetMask mask_of(const std::vector<int>& elements);

// "12", "356"; elements above 9 are comma separated ("1,10").
std::string mask_label(SubsetMask m);

// Lexicographic order on the sorted element tuples of equal-size subsets.
bool lex_less(SubsetMask a, SubsetMask b);

// All k-subsets of [n] in lexicographic order.
std::vector<SubsetMask> k_subsets(int n, int k);

// Rotation a -> a + r (mod n) applied to every element.
SubsetMask rotate_mask(SubsetMask m, int r, int n);

// The bases of a matroid of rank k on [n], in canonical lexicographic order.
class BasisSet {
public:
    BasisSet() = default;
    BasisSet(int k, int n, std::vector<SubsetMask> masks);

    int rank() const { return k_; }
    int ground() const { return n_; }
    std::size_t size() const { return masks_.size(); }
    bool empty() const { return masks_.empty(); }
    const std::vector<SubsetMask>& masks() const { return masks_; }

    bool contains(SubsetMask b) const;
    bool is_subset_of(const BasisSet& other) const;
    BasisSet rotated(int r) const;

    // Each basis rendered with mask_label, e.g. {"12","13"}.
    std::vector<std::string> labels() const;

    friend bool operator==(const BasisSet& a, const BasisSet& b) {
        return a.k_ == b.k_ && a.n_ == b.n_ && a.masks_ == b.masks_;
    }
    friend bool operator!=(const BasisSet& a, const BasisSet& b) { return !(a == b); }
    friend bool operator<(const BasisSet& a, const BasisSet& b);

private:
    int k_ = 0;
    int n_ = 0;
    std::vector<SubsetMask> masks_;
};

struct BasisSetHash {
    std::size_t operator()(const BasisSet& b) const;
};

}  // namespace wlpw
