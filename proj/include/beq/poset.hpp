#pragma once

#include "beq/partition.hpp"
#include "beq/rational.hpp"

#include <map>
#include <vector>

namespace beq {

/// Finite poset of partitions of a fixed ground set under refinement,
/// with zeta and the Möbius function (memoized recursion).
class PartitionPoset {
public:
    explicit PartitionPoset(std::vector<SetPartition> elements);

    static PartitionPoset interval(int k) { return PartitionPoset(enumerate_interval(k)); }
    static PartitionPoset category(CategoryId x, int k) {
        return PartitionPoset(enumerate_category(x, k));
    }

    const std::vector<SetPartition>& elements() const { return elements_; }
    int index_of(const SetPartition& p) const;

    int zeta(const SetPartition& p1, const SetPartition& p2) const;
    Rat mobius(const SetPartition& p1, const SetPartition& p2) const;

private:
    Rat mobius_idx(int i, int j) const;

    std::vector<SetPartition> elements_;
    std::map<SetPartition, int> index_;
    std::vector<std::vector<bool>> leq_;             // precomputed order
    mutable std::map<std::pair<int, int>, Rat> memo_;
};

/// mu_{I(k)}(p1, p2) without building the poset by hand; cached per k.
Rat mobius_interval(const SetPartition& p1, const SetPartition& p2);

} // namespace beq
