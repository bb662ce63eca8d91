#include "wlpw/basis_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <tuple>

#include <boost/container_hash/hash.hpp>

namespace wlpw {

int popcount(SubsetMask m) { return std::popcount(m); }

std::vector<int> mask_elements(SubsetMask m) {
    std::vector<int> out;
    for (int a = 1; m != 0; ++a, m >>= 1) {
        if ((m & 1U) != 0) {
            out.push_back(a);
        }
    }
    return out;
}

SubsetMask mask_of(const std::vector<int>& elements) {
    SubsetMask m = 0;
    for (int a : elements) {
        if (a < 1 || a > 32) {
            throw std::out_of_range("subset element outside [1,32]");
        }
        m |= vertex_bit(a);
    }
    return m;
}

std::string mask_label(SubsetMask m) {
    const auto elems = mask_elements(m);
    const bool wide = !elems.empty() && elems.back() > 9;
    std::string out;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (wide && i > 0) {
            out += ',';
        }
        out += std::to_string(elems[i]);
    }
    return out;
}

bool lex_less(SubsetMask a, SubsetMask b) {
    const SubsetMask diff = a ^ b;
    if (diff == 0) {
        return false;
    }
    return (a & diff & (~diff + 1)) != 0;
}

std::vector<SubsetMask> k_subsets(int n, int k) {
    std::vector<SubsetMask> out;
    if (k < 0 || k > n) {
        return out;
    }
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) {
        idx[i] = i + 1;
    }
    while (true) {
        out.push_back(mask_of(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i + 1) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++idx[i];
        for (int j = i + 1; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

SubsetMask rotate_mask(SubsetMask m, int r, int n) {
    SubsetMask out = 0;
    for (int a : mask_elements(m)) {
        out |= vertex_bit(((a - 1 + r) % n + n) % n + 1);
    }
    return out;
}

BasisSet::BasisSet(int k, int n, std::vector<SubsetMask> masks) : k_(k), n_(n), masks_(std::move(masks)) {
    for (SubsetMask b : masks_) {
        if (popcount(b) != k || (n < 32 && (b >> n) != 0)) {
            throw std::invalid_argument("basis " + mask_label(b) + " is not a k-subset of [n]");
        }
    }
    std::sort(masks_.begin(), masks_.end(), lex_less);
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

bool BasisSet::contains(SubsetMask b) const { return std::binary_search(masks_.begin(), masks_.end(), b, lex_less); }

bool BasisSet::is_subset_of(const BasisSet& other) const {
    return k_ == other.k_ && n_ == other.n_ &&
           std::includes(other.masks_.begin(), other.masks_.end(), masks_.begin(), masks_.end(), lex_less);
}

BasisSet BasisSet::rotated(int r) const {
    std::vector<SubsetMask> out;
    out.reserve(masks_.size());
    for (SubsetMask b : masks_) {
        out.push_back(rotate_mask(b, r, n_));
    }
    return BasisSet(k_, n_, std::move(out));
}

std::vector<std::string> BasisSet::labels() const {
    std::vector<std::string> out;
    out.reserve(masks_.size());
    for (SubsetMask b : masks_) {
        out.push_back(mask_label(b));
    }
    return out;
}

bool operator<(const BasisSet& a, const BasisSet& b) {
    if (std::tie(a.k_, a.n_) != std::tie(b.k_, b.n_)) {
        return std::tie(a.k_, a.n_) < std::tie(b.k_, b.n_);
    }
    return std::lexicographical_compare(a.masks_.begin(), a.masks_.end(), b.masks_.begin(), b.masks_.end(), lex_less);
}

std::size_t BasisSetHash::operator()(const BasisSet& b) const {
    std::size_t seed = boost::hash_value(b.rank());
    boost::hash_combine(seed, b.ground());
    boost::hash_range(seed, b.masks().begin(), b.masks().end());
    return seed;
}

}  // namespace wlpw
