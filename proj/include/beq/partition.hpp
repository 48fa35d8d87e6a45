#pragma once

#include "beq/errors.hpp"

#include <string>
#include <vector>

namespace beq {

/// A set partition of {1..k}. Canonical form: each block sorted, blocks
/// sorted by minimum element. Equality is structural equality.
class SetPartition {
public:
    SetPartition() = default;
    SetPartition(int ground_size, std::vector<std::vector<int>> blocks);

    /// One-block partition 1_k.
    static SetPartition full(int k);
    /// All-singletons partition.
    static SetPartition singletons(int k);
    /// The pair partition on {1,2}.
    static SetPartition pair() { return full(2); }

    int ground_size() const { return k_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_index_of(int element) const { return block_of_[element - 1]; }

    /// Every block is a set of consecutive integers.
    bool is_interval() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.k_ == b.k_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const SetPartition& a, const SetPartition& b) { return !(a == b); }
    friend bool operator<(const SetPartition& a, const SetPartition& b) {
        if (a.k_ != b.k_) return a.k_ < b.k_;
        return a.blocks_ < b.blocks_;
    }

    std::string str() const;

private:
    int k_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

/// Multi-index j in [n]^k.
struct MultiIndex {
    std::vector<int> entries;  // 1-based values in [n]
    int n = 0;

    MultiIndex() = default;
    MultiIndex(std::vector<int> e, int n_) : entries(std::move(e)), n(n_) {
        for (int v : entries)
            if (v < 1 || v > n) throw std::invalid_argument("multi-index entry out of [n]");
    }
    int length() const { return static_cast<int>(entries.size()); }
};

enum class CategoryId { s, o, h, b };

const char* category_name(CategoryId x);
CategoryId category_from_name(const std::string& name);

/// Whether the one-block partition of size m lies in the category (the set L_D).
bool block_size_allowed(CategoryId x, int m);

/// All interval partitions of [k], ordered lexicographically by the sequence
/// of block minima. |I(k)| = 2^(k-1).
std::vector<SetPartition> enumerate_interval(int k);

/// The members of D(k) for the category, same canonical order (may be empty,
/// e.g. I_o(3)).
std::vector<SetPartition> enumerate_category(CategoryId x, int k);

/// Category membership: interval with every block size in L_D.
bool category_member(CategoryId x, const SetPartition& p);

/// All set partitions of [k] (restricted-growth enumeration), optionally
/// capped at max_blocks. Used for kernel classes.
std::vector<SetPartition> enumerate_set_partitions(int k, int max_blocks = -1);

/// Horizontal concatenation: blocks of p2 shifted past p1.
SetPartition tensor(const SetPartition& p1, const SetPartition& p2);

/// k-fold tensor power.
SetPartition tensor_power(const SetPartition& p, int k);

/// Refinement order: every block of p1 inside some block of p2.
bool leq(const SetPartition& p1, const SetPartition& p2);

/// Least upper bound in the full partition lattice P(k).
SetPartition join(const SetPartition& p1, const SetPartition& p2);

/// ker j: r ~ s iff j_r == j_s.
SetPartition kernel(const MultiIndex& j);

/// max{pi in I_x(k) : pi <= sigma} for x in {s,o,h}. Throws EmptyDownSetError
/// when no category element lies below sigma; rejects x == b (I_b is not
/// join-stable, so the down-set need not have a maximum).
SetPartition inf_category(CategoryId x, const SetPartition& sigma);

} // namespace beq
