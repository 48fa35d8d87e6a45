#include "beq/haar.hpp"

#include <cctype>

namespace beq {

MultiIndex GeneratorWord::rows(std::size_t seg) const {
    std::vector<int> e;
    for (auto [r, c] : segments[seg]) e.push_back(r);
    return MultiIndex(std::move(e), n);
}

MultiIndex GeneratorWord::cols(std::size_t seg) const {
    std::vector<int> e;
    for (auto [r, c] : segments[seg]) e.push_back(c);
    return MultiIndex(std::move(e), n);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::pair<int, int> parse_pair(const std::string& tok) {
    auto dash = tok.find('-');
    if (dash != std::string::npos)
        return {std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))};
    if (tok.size() != 2 || !std::isdigit(tok[0]) || !std::isdigit(tok[1]))
        throw std::invalid_argument("bad index pair: " + tok);
    return {tok[0] - '0', tok[1] - '0'};
}

std::vector<std::pair<int, int>> parse_segment(const std::string& tok) {
    std::vector<std::pair<int, int>> seg;
    if (tok.empty()) return seg;
    for (const auto& part : split(tok, ',')) seg.push_back(parse_pair(part));
    return seg;
}

} // namespace

GeneratorWord parse_word(const std::string& text, int n) {
    auto tokens = split(text, ';');
    if (tokens.empty() || tokens.front() != "p" || tokens.back() != "p")
        throw std::invalid_argument("word must start and end with p: " + text);
    std::vector<std::vector<std::pair<int, int>>> segments;
    std::size_t i = 1;
    while (i < tokens.size()) {
        if (tokens[i] == "p") {
            segments.push_back({});
            ++i;
            continue;
        }
        segments.push_back(parse_segment(tokens[i]));
        ++i;
        if (i >= tokens.size() || tokens[i] != "p")
            throw std::invalid_argument("segment must be closed by p: " + text);
        ++i;
    }
    if (segments.empty()) segments.push_back({});  // lone p
    return GeneratorWord(n, std::move(segments));
}

Rat haar_s_closed(const MultiIndex& i, const MultiIndex& j, int n) {
    if (i.length() != j.length()) throw LengthMismatchError("index lengths differ");
    if (i.length() == 0) return 1;
    SetPartition a = inf_category(CategoryId::s, kernel(i));
    SetPartition b = inf_category(CategoryId::s, kernel(j));
    if (a != b) return 0;
    return Rat(1) / (Rat(n) * rat_pow(Rat(n - 1), a.num_blocks() - 1));
}

Rat haar_o_closed(const MultiIndex& i, const MultiIndex& j, int n) {
    if (i.length() != j.length()) throw LengthMismatchError("index lengths differ");
    const int l = i.length();
    if (l == 0) return 1;
    if (l % 2 == 1) return 0;
    SetPartition pairs = tensor_power(SetPartition::pair(), l / 2);
    if (!leq(pairs, kernel(i)) || !leq(pairs, kernel(j))) return 0;
    return Rat(1) / rat_pow(Rat(n), l / 2);
}

Rat haar_h_closed(const MultiIndex& i, const MultiIndex& j, int n) {
    if (i.length() != j.length()) throw LengthMismatchError("index lengths differ");
    const int l = i.length();
    if (l == 0) return 1;
    if (l % 2 == 1) return 0;
    SetPartition pairs = tensor_power(SetPartition::pair(), l / 2);
    if (!leq(pairs, kernel(i)) || !leq(pairs, kernel(j))) return 0;
    SetPartition a = inf_category(CategoryId::h, kernel(i));
    SetPartition b = inf_category(CategoryId::h, kernel(j));
    if (a != b) return 0;
    return Rat(1) / (Rat(n) * rat_pow(Rat(n - 1), a.num_blocks() - 1));
}

Rat haar_segment_value(CategoryId x, const MultiIndex& i, const MultiIndex& j, int n,
                       HaarRoute route) {
    if (i.length() != j.length()) throw LengthMismatchError("index lengths differ");
    if (i.length() == 0) return 1;
    if (route == HaarRoute::closed) {
        switch (x) {
            case CategoryId::s: return haar_s_closed(i, j, n);
            case CategoryId::o: return haar_o_closed(i, j, n);
            case CategoryId::h: return haar_h_closed(i, j, n);
            case CategoryId::b: break;  // no closed form; fall through
        }
    }
    return projection_entry(weingarten_table(x, i.length(), n), i, j);
}

Rat haar_value(CategoryId x, const GeneratorWord& w, HaarRoute route) {
    Rat v = 1;
    for (std::size_t s = 0; s < w.segments.size(); ++s) {
        if (w.segments[s].empty()) continue;
        v *= haar_segment_value(x, w.rows(s), w.cols(s), w.n, route);
        if (v == 0) return 0;
    }
    return v;
}

Rat invariance_residual(CategoryId x, const MultiIndex& i, const MultiIndex& j, int n) {
    if (i.length() != j.length()) throw LengthMismatchError("index lengths differ");
    const int k = i.length();
    HaarRoute route = (x == CategoryId::b) ? HaarRoute::weingarten : HaarRoute::closed;
    Rat sum = 0;
    // The segment value depends on s only through ker s; sum over kernel
    // classes, each of size n(n-1)...(n-|kappa|+1).
    for (const auto& kappa : enumerate_set_partitions(k)) {
        if (kappa.num_blocks() > n) continue;
        std::vector<int> rep(k);
        for (int pos = 1; pos <= k; ++pos) rep[pos - 1] = kappa.block_index_of(pos) + 1;
        MultiIndex s(rep, n);
        Rat mult = 1;
        for (int m = 0; m < kappa.num_blocks(); ++m) mult *= n - m;
        sum += mult * haar_segment_value(x, i, s, n, route) * haar_segment_value(x, s, j, n, route);
    }
    return rat_abs(sum - haar_segment_value(x, i, j, n, route));
}

} // namespace beq
