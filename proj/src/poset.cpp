#include "beq/poset.hpp"

#include <mutex>

namespace beq {

PartitionPoset::PartitionPoset(std::vector<SetPartition> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw std::invalid_argument("empty poset");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i].ground_size() != elements_[0].ground_size())
            throw GroundMismatchError("poset elements on mixed ground sizes");
        if (!index_.emplace(elements_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate poset element");
    }
    const std::size_t m = elements_.size();
    leq_.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) leq_[i][j] = leq(elements_[i], elements_[j]);
}

int PartitionPoset::index_of(const SetPartition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw NotAnElementError("partition not in poset: " + p.str());
    return it->second;
}

int PartitionPoset::zeta(const SetPartition& p1, const SetPartition& p2) const {
    return leq_[index_of(p1)][index_of(p2)] ? 1 : 0;
}

Rat PartitionPoset::mobius(const SetPartition& p1, const SetPartition& p2) const {
    return mobius_idx(index_of(p1), index_of(p2));
}

Rat PartitionPoset::mobius_idx(int i, int j) const {
    if (!leq_[i][j]) return 0;
    if (i == j) return 1;
    auto key = std::make_pair(i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    // sum_{p1 <= rho <= p2} mu(p1, rho) = 0 for p1 < p2
    Rat acc = 0;
    for (std::size_t r = 0; r < elements_.size(); ++r)
        if (leq_[i][r] && leq_[r][j] && static_cast<int>(r) != j) acc += mobius_idx(i, static_cast<int>(r));
    Rat mu = -acc;
    memo_[key] = mu;
    return mu;
}

Rat mobius_interval(const SetPartition& p1, const SetPartition& p2) {
    static std::map<int, PartitionPoset> cache;
    static std::mutex mtx;
    const int k = p1.ground_size();
    // Per-poset memo is not guarded; serialize queries through one mutex.
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, PartitionPoset::interval(k)).first;
    return it->second.mobius(p1, p2);
}

} // namespace beq
