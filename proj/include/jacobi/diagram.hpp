#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "jacobi/common.hpp"
#include "jacobi/semigroup.hpp"

namespace jacobi {

/// A box of the p x q rectangle, 1-based: x counts columns from the left,
/// y counts rows from the bottom.
struct Box {
    i64 x = 0;
    i64 y = 0;
    bool operator==(const Box&) const = default;
    auto operator<=>(const Box&) const = default;
};

/// A Young diagram stored as weakly decreasing column heights, anchored at
/// the bottom-left corner. Trailing zero columns are never stored, so the
/// empty diagram has no columns.
class YoungDiagram {
public:
    YoungDiagram() = default;

    explicit YoungDiagram(std::vector<i64> columns) : cols_(std::move(columns)) {
        while (!cols_.empty() && cols_.back() == 0) cols_.pop_back();
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            if (cols_[i] < 1)
                throw std::invalid_argument("diagram: column heights must be positive");
            if (i > 0 && cols_[i] > cols_[i - 1])
                throw std::invalid_argument("diagram: column heights must be weakly decreasing");
        }
    }

    const std::vector<i64>& columns() const { return cols_; }
    i64 num_columns() const { return static_cast<i64>(cols_.size()); }
    bool empty() const { return cols_.empty(); }

    i64 area() const { return std::accumulate(cols_.begin(), cols_.end(), i64{0}); }

    /// Height of column x (1-based); 0 past the last stored column.
    i64 column_height(i64 x) const {
        if (x < 1 || x > num_columns()) return 0;
        return cols_[static_cast<std::size_t>(x - 1)];
    }

    /// Width of row y (1-based) = number of columns of height >= y.
    i64 row_width(i64 y) const {
        if (y < 1) return num_columns();
        // cols_ is weakly decreasing: first column with height < y ends the row.
        auto it = std::lower_bound(cols_.begin(), cols_.end(), y,
                                   [](i64 h, i64 yy) { return h >= yy; });
        return static_cast<i64>(it - cols_.begin());
    }

    bool contains(const Box& c) const {
        return c.x >= 1 && c.y >= 1 && c.y <= column_height(c.x);
    }

    /// Conjugate partition: rows become columns.
    YoungDiagram transpose() const {
        std::vector<i64> rows;
        const i64 h = cols_.empty() ? 0 : cols_.front();
        for (i64 y = 1; y <= h; ++y) rows.push_back(row_width(y));
        return YoungDiagram(std::move(rows));
    }

    /// All boxes, column by column.
    std::vector<Box> boxes() const {
        std::vector<Box> out;
        for (i64 x = 1; x <= num_columns(); ++x)
            for (i64 y = 1; y <= column_height(x); ++y) out.push_back({x, y});
        return out;
    }

    bool operator==(const YoungDiagram&) const = default;
    auto operator<=>(const YoungDiagram&) const = default;

    std::string to_string() const {
        if (cols_.empty()) return "()";
        std::string s = "(";
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(cols_[i]);
        }
        return s + ")";
    }

private:
    std::vector<i64> cols_;
};

/// Arm of a box inside D: boxes strictly to its right in the same row.
inline i64 arm(const YoungDiagram& d, const Box& c) {
    if (!d.contains(c)) throw std::invalid_argument("arm: box not in diagram");
    return d.row_width(c.y) - c.x;
}

/// Leg of a box inside D: boxes strictly above it in the same column.
inline i64 leg(const YoungDiagram& d, const Box& c) {
    if (!d.contains(c)) throw std::invalid_argument("leg: box not in diagram");
    return d.column_height(c.x) - c.y;
}

/// Extended arm for a box outside D: empty boxes scanned leftward until the
/// scan hits D or column 1, whichever comes first.
inline i64 ext_arm(const YoungDiagram& d, const Box& c) {
    if (d.contains(c)) throw std::invalid_argument("ext_arm: box lies in the diagram");
    if (c.x < 1 || c.y < 1) throw std::invalid_argument("ext_arm: box coordinates must be positive");
    return c.x - d.row_width(c.y) - 1;
}

/// Extended leg for a box outside D: empty boxes scanned downward until the
/// scan hits D or row 1.
inline i64 ext_leg(const YoungDiagram& d, const Box& c) {
    if (d.contains(c)) throw std::invalid_argument("ext_leg: box lies in the diagram");
    if (c.x < 1 || c.y < 1) throw std::invalid_argument("ext_leg: box coordinates must be positive");
    return c.y - d.column_height(c.x) - 1;
}

/// The staircase region R+ of the p x q rectangle: boxes strictly below the
/// left-top to right-bottom diagonal. Column k has height q - ceil(k*q/p).
struct Staircase {
    i64 p = 0, q = 0;
    std::vector<i64> heights;  // one entry per column k = 1..p, last is 0

    bool contains(const Box& c) const {
        return c.x >= 1 && c.x <= p && c.y >= 1 && p * q - q * c.x - p * c.y > 0;
    }

    /// The staircase as a Young diagram (trailing zero columns dropped).
    YoungDiagram bound() const { return YoungDiagram(heights); }
};

inline Staircase staircase(i64 p, i64 q) {
    Semigroup check(p, q);  // validates coprimality and range
    Staircase s;
    s.p = p;
    s.q = q;
    for (i64 k = 1; k <= p; ++k) s.heights.push_back(q - (k * q + p - 1) / p);
    return s;
}

/// Box label f(x,y) = pq - qx - py; positive exactly on R+, where the labels
/// run over the gaps of the semigroup, each once.
inline i64 label(i64 p, i64 q, const Box& c) {
    if (c.x < 1 || c.x > p || c.y < 0 || c.y > q)
        throw std::invalid_argument("label: box outside the rectangle");
    return p * q - q * c.x - p * c.y;
}

/// h^+ statistic at slope x = num/den: the number of boxes c in D with
/// a(c)/(l(c)+1) <= x < (a(c)+1)/l(c), with (a+1)/0 read as infinity.
/// All comparisons are done in exact integer arithmetic.
inline i64 h_plus(const YoungDiagram& d, i64 num, i64 den) {
    if (den < 1) throw std::invalid_argument("h_plus: denominator must be >= 1");
    if (num < 0) throw std::invalid_argument("h_plus: numerator must be >= 0");
    const bool coprime = std::gcd(num, den) == 1;
    i64 count = 0;
    for (const Box& c : d.boxes()) {
        const i64 a = arm(d, c), l = leg(d, c);
        // For slope p/q and diagrams inside the staircase, a < p and l < q,
        // so neither boundary equality can occur.
        if (coprime && a < num && l < den) {
            if (a * den == num * (l + 1) || (a + 1) * den == num * l)
                throw std::logic_error("h_plus: impossible boundary equality attained");
        }
        const bool lower = a * den <= num * (l + 1);
        const bool upper = (l == 0) || num * l < (a + 1) * den;
        if (lower && upper) ++count;
    }
    return count;
}

/// dinv(D) = h^+ at slope n/(n+1), for D inside the (n,n+1) staircase.
inline i64 dinv(const YoungDiagram& d, i64 n) {
    if (n < 1) throw std::invalid_argument("dinv: n must be >= 1");
    return h_plus(d, n, n + 1);
}

namespace detail {
inline void subdiagrams_rec(const std::vector<i64>& bound, std::vector<i64>& prefix,
                            std::vector<YoungDiagram>& out) {
    const std::size_t i = prefix.size();
    if (i < bound.size()) {
        i64 top = bound[i];
        if (i > 0) top = std::min(top, prefix.back());
        for (i64 h = top; h >= 1; --h) {
            prefix.push_back(h);
            subdiagrams_rec(bound, prefix, out);
            prefix.pop_back();
        }
    }
    out.emplace_back(prefix);
}
}  // namespace detail

/// Every subdiagram of `bound`, each exactly once, in the canonical order:
/// column sequences in decreasing lexicographic order (missing columns read
/// as 0), so the empty diagram comes last.
inline std::vector<YoungDiagram> enumerate_subdiagrams(const YoungDiagram& bound) {
    std::vector<YoungDiagram> out;
    std::vector<i64> prefix;
    detail::subdiagrams_rec(bound.columns(), prefix, out);
    return out;
}

}  // namespace jacobi
