#include "beq/partition.hpp"

#include <algorithm>
#include <numeric>

namespace beq {

SetPartition::SetPartition(int ground_size, std::vector<std::vector<int>> blocks)
    : k_(ground_size), blocks_(std::move(blocks)) {
    if (k_ < 1) throw std::invalid_argument("ground size must be positive");
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    block_of_.assign(k_, -1);
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi)
        for (int e : blocks_[bi]) {
            if (e < 1 || e > k_) throw std::invalid_argument("block element out of range");
            if (block_of_[e - 1] != -1) throw std::invalid_argument("blocks overlap");
            block_of_[e - 1] = static_cast<int>(bi);
        }
    for (int v : block_of_)
        if (v == -1) throw std::invalid_argument("blocks do not cover {1..k}");
}

SetPartition SetPartition::full(int k) {
    std::vector<int> b(k);
    std::iota(b.begin(), b.end(), 1);
    return SetPartition(k, {b});
}

SetPartition SetPartition::singletons(int k) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= k; ++i) blocks.push_back({i});
    return SetPartition(k, std::move(blocks));
}

bool SetPartition::is_interval() const {
    for (const auto& b : blocks_)
        if (b.back() - b.front() + 1 != static_cast<int>(b.size())) return false;
    return true;
}

std::string SetPartition::str() const {
    std::string s;
    for (const auto& b : blocks_) {
        s += '{';
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(b[i]);
        }
        s += '}';
    }
    return s;
}

const char* category_name(CategoryId x) {
    switch (x) {
        case CategoryId::s: return "s";
        case CategoryId::o: return "o";
        case CategoryId::h: return "h";
        case CategoryId::b: return "b";
    }
    return "?";
}

CategoryId category_from_name(const std::string& name) {
    if (name == "s") return CategoryId::s;
    if (name == "o") return CategoryId::o;
    if (name == "h") return CategoryId::h;
    if (name == "b") return CategoryId::b;
    throw std::invalid_argument("unknown category: " + name);
}

bool block_size_allowed(CategoryId x, int m) {
    switch (x) {
        case CategoryId::s: return m >= 1;
        case CategoryId::o: return m == 2;
        case CategoryId::h: return m >= 2 && m % 2 == 0;
        case CategoryId::b: return m == 1 || m == 2;
    }
    return false;
}

std::vector<SetPartition> enumerate_interval(int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    // Interval partitions correspond to compositions of k; the recursion
    // below emits them ordered lexicographically by block-minimum sequence.
    std::vector<SetPartition> out;
    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, int start) -> void {
        if (start > k) {
            out.emplace_back(k, blocks);
            return;
        }
        std::vector<int> block;
        for (int end = start; end <= k; ++end) {
            block.push_back(end);
            blocks.push_back(block);
            self(self, end + 1);
            blocks.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const SetPartition& a, const SetPartition& b) {
        std::vector<int> ma, mb;
        for (const auto& blk : a.blocks()) ma.push_back(blk.front());
        for (const auto& blk : b.blocks()) mb.push_back(blk.front());
        return ma < mb;
    });
    return out;
}

bool category_member(CategoryId x, const SetPartition& p) {
    if (!p.is_interval()) return false;
    for (const auto& b : p.blocks())
        if (!block_size_allowed(x, static_cast<int>(b.size()))) return false;
    return true;
}

std::vector<SetPartition> enumerate_category(CategoryId x, int k) {
    std::vector<SetPartition> out;
    for (const auto& p : enumerate_interval(k))
        if (category_member(x, p)) out.push_back(p);
    return out;
}

std::vector<SetPartition> enumerate_set_partitions(int k, int max_blocks) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    std::vector<SetPartition> out;
    std::vector<int> assign(k, 0);  // restricted growth string
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == k) {
            std::vector<std::vector<int>> blocks(used);
            for (int i = 0; i < k; ++i) blocks[assign[i]].push_back(i + 1);
            out.emplace_back(k, std::move(blocks));
            return;
        }
        int limit = std::min(used, max_blocks < 0 ? used : max_blocks - 1);
        for (int b = 0; b <= limit; ++b) {
            assign[pos] = b;
            self(self, pos + 1, std::max(used, b + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

SetPartition tensor(const SetPartition& p1, const SetPartition& p2) {
    auto blocks = p1.blocks();
    for (auto b : p2.blocks()) {
        for (int& e : b) e += p1.ground_size();
        blocks.push_back(std::move(b));
    }
    return SetPartition(p1.ground_size() + p2.ground_size(), std::move(blocks));
}

SetPartition tensor_power(const SetPartition& p, int k) {
    if (k < 1) throw std::invalid_argument("tensor power requires k >= 1");
    SetPartition r = p;
    for (int i = 1; i < k; ++i) r = tensor(r, p);
    return r;
}

bool leq(const SetPartition& p1, const SetPartition& p2) {
    if (p1.ground_size() != p2.ground_size())
        throw GroundMismatchError("leq on different ground sizes");
    for (const auto& b : p1.blocks()) {
        int target = p2.block_index_of(b.front());
        for (int e : b)
            if (p2.block_index_of(e) != target) return false;
    }
    return true;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

SetPartition join(const SetPartition& p1, const SetPartition& p2) {
    if (p1.ground_size() != p2.ground_size())
        throw GroundMismatchError("join on different ground sizes");
    const int k = p1.ground_size();
    UnionFind uf(k);
    for (const auto& b : p1.blocks())
        for (std::size_t i = 1; i < b.size(); ++i) uf.unite(b[0] - 1, b[i] - 1);
    for (const auto& b : p2.blocks())
        for (std::size_t i = 1; i < b.size(); ++i) uf.unite(b[0] - 1, b[i] - 1);
    std::vector<std::vector<int>> blocks(k);
    for (int i = 0; i < k; ++i) blocks[uf.find(i)].push_back(i + 1);
    std::erase_if(blocks, [](const auto& b) { return b.empty(); });
    return SetPartition(k, std::move(blocks));
}

SetPartition kernel(const MultiIndex& j) {
    const int k = j.length();
    if (k < 1) throw std::invalid_argument("kernel of empty index");
    std::vector<std::vector<int>> by_value(j.n);
    for (int pos = 1; pos <= k; ++pos) by_value[j.entries[pos - 1] - 1].push_back(pos);
    std::erase_if(by_value, [](const auto& b) { return b.empty(); });
    return SetPartition(k, std::move(by_value));
}

SetPartition inf_category(CategoryId x, const SetPartition& sigma) {
    const int k = sigma.ground_size();
    if (x == CategoryId::b)
        throw std::invalid_argument("inf over I_b is undefined (not join-stable)");
    if (x == CategoryId::s) {
        // Merge maximal runs of consecutive elements lying in a common block.
        std::vector<std::vector<int>> blocks;
        std::vector<int> cur{1};
        for (int e = 2; e <= k; ++e) {
            if (sigma.block_index_of(e) == sigma.block_index_of(e - 1)) {
                cur.push_back(e);
            } else {
                blocks.push_back(std::move(cur));
                cur = {e};
            }
        }
        blocks.push_back(std::move(cur));
        return SetPartition(k, std::move(blocks));
    }
    std::vector<SetPartition> below;
    for (const auto& p : enumerate_category(x, k))
        if (leq(p, sigma)) below.push_back(p);
    if (below.empty())
        throw EmptyDownSetError("no element of I_" + std::string(category_name(x)) +
                                "(" + std::to_string(k) + ") below " + sigma.str());
    // Join-stability of I_o, I_h guarantees a unique maximum.
    for (const auto& cand : below) {
        bool dominates = true;
        for (const auto& other : below)
            if (!leq(other, cand)) { dominates = false; break; }
        if (dominates) return cand;
    }
    throw std::logic_error("down-set has no maximum; category not join-stable?");
}

} // namespace beq
