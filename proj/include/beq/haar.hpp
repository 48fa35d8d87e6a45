#pragma once

#include "beq/partition.hpp"
#include "beq/rational.hpp"
#include "beq/weingarten.hpp"

#include <string>
#include <utility>
#include <vector>

namespace beq {

/// A word p u_{i1 j1} ... u_{ik jk} p ... p: segments of (row, col) pairs
/// between consecutive p's. An empty segment is a bare p (p^2 = p).
struct GeneratorWord {
    int n = 0;
    std::vector<std::vector<std::pair<int, int>>> segments;

    GeneratorWord() = default;
    GeneratorWord(int n_, std::vector<std::vector<std::pair<int, int>>> segs)
        : n(n_), segments(std::move(segs)) {
        if (segments.empty()) throw std::invalid_argument("word needs at least one segment");
        for (const auto& seg : segments)
            for (auto [r, c] : seg)
                if (r < 1 || r > n || c < 1 || c > n)
                    throw std::invalid_argument("generator index out of [n]");
    }

    MultiIndex rows(std::size_t seg) const;
    MultiIndex cols(std::size_t seg) const;
};

/// Parses "p;11,22;p" (pairs as two digits, or "r-c" for n >= 10; segments
/// separated by p's). A lone "p" is the empty word.
GeneratorWord parse_word(const std::string& text, int n);

enum class HaarRoute { closed, weingarten };

/// h_D of one segment p u_{i j} p. The closed route is only available for
/// x in {s, o, h}; x = b always goes through the Weingarten sum.
Rat haar_segment_value(CategoryId x, const MultiIndex& i, const MultiIndex& j, int n,
                       HaarRoute route = HaarRoute::closed);

/// h_D(word) = product of segment values (h(p) = 1, multiplicative across p).
Rat haar_value(CategoryId x, const GeneratorWord& w, HaarRoute route = HaarRoute::closed);

/// delta(inf_I ker i, inf_I ker j) / (n (n-1)^(b-1)) with b = |inf_I ker i|.
Rat haar_s_closed(const MultiIndex& i, const MultiIndex& j, int n);

/// 0 for odd length; zeta(pair^k <= ker i) zeta(pair^k <= ker j) / n^k.
Rat haar_o_closed(const MultiIndex& i, const MultiIndex& j, int n);

/// 0 for odd length; the I_h analogue with delta of inf_{I_h} kernels.
Rat haar_h_closed(const MultiIndex& i, const MultiIndex& j, int n);

/// | sum_{s in [n]^k} h(p u_{is} p) h(p u_{sj} p) - h(p u_{ij} p) |,
/// computed over kernel classes of s with falling-factorial multiplicities.
Rat invariance_residual(CategoryId x, const MultiIndex& i, const MultiIndex& j, int n);

} // namespace beq
