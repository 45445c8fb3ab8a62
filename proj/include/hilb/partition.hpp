#pragma once

#include <hilb/rational.hpp>

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hilb {

/// Integer partition: weakly decreasing sequence of positive parts.
/// The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// Cell (i, j) of a Young diagram, matrix convention, 0-based.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(max_part, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline bool contains(const Partition& lambda, Cell x) {
    return x.row >= 0 && x.col >= 0 && x.row < lambda.length() &&
           x.col < lambda.parts()[x.row];
}

/// Cells of D(lambda) in row-major order.
inline std::vector<Cell> cells(const Partition& lambda) {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(lambda.weight()));
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.parts()[i]; ++j) out.push_back({i, j});
    return out;
}

/// Hook length at a cell: arm + leg + 1, counted as cells to the right of
/// and below x including x itself.
inline int hook_length(const Partition& lambda, Cell x) {
    if (!contains(lambda, x)) throw std::out_of_range("hook_length: cell outside diagram");
    int h = lambda.parts()[x.row] - x.col;  // x itself plus cells to the right
    for (int r = x.row + 1; r < lambda.length(); ++r)
        if (lambda.parts()[r] > x.col) ++h;
    return h;
}

/// h(lambda) = product of all hook lengths; 1 for the empty partition.
inline Int hook_product(const Partition& lambda) {
    Int prod = 1;
    for (Cell x : cells(lambda)) prod *= hook_length(lambda, x);
    return prod;
}

/// z_lambda = prod_r alpha_r! r^{alpha_r} where alpha_r = multiplicity of r.
inline Int z_factor(const Partition& lambda) {
    Int z = 1;
    int i = 0;
    const auto& parts = lambda.parts();
    while (i < lambda.length()) {
        int j = i;
        while (j < lambda.length() && parts[j] == parts[i]) ++j;
        int mult = j - i;
        z *= factorial(mult);
        z *= int_pow(parts[i], mult);
        i = j;
    }
    return z;
}

/// Transposed diagram: column lengths of D(lambda).
inline Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(lambda.parts()[0]));
    for (int j = 0; j < lambda.parts()[0]; ++j) {
        int count = 0;
        for (int p : lambda.parts())
            if (p > j) ++count;
        cols[static_cast<std::size_t>(j)] = count;
    }
    return Partition(std::move(cols));
}

/// Serialization: comma-separated decreasing parts, "" for the empty partition.
inline std::string to_string(const Partition& lambda) {
    std::string s;
    for (int i = 0; i < lambda.length(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(lambda.parts()[i]);
    }
    return s;
}

inline Partition parse_partition(std::string_view text) {
    if (text.empty()) return {};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        if (tok.empty()) throw std::invalid_argument("malformed partition string");
        int value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') throw std::invalid_argument("malformed partition string");
            if (value > 100000000) throw std::invalid_argument("partition part too large");
            value = value * 10 + (c - '0');
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));  // validates positivity and ordering
}

}  // namespace hilb
