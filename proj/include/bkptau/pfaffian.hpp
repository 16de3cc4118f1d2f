#pragma once

// Division-free Pfaffians and determinants over a commutative ring, plus the
// Caianiello expansion of a block Pfaffian. Ring elements need +, -, *, and
// construction from an integer.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace bkptau {

/// Strict upper triangle a_ij, i < j, of an m x m array. Nothing below or on
/// the diagonal is stored: Pfaffians only ever read i < j.
template <typename T>
class UpperTriMatrix {
public:
    UpperTriMatrix() = default;
    explicit UpperTriMatrix(std::size_t size) : size_(size), entries_(size * (size > 0 ? size - 1 : 0) / 2, T(0)) {}

    std::size_t size() const { return size_; }

    const T& at(std::size_t i, std::size_t j) const { return entries_[offset(i, j)]; }
    T& at(std::size_t i, std::size_t j) { return entries_[offset(i, j)]; }

    /// Restriction to the given increasing index list.
    UpperTriMatrix principal(const std::vector<std::size_t>& keep) const {
        UpperTriMatrix out(keep.size());
        for (std::size_t a = 0; a < keep.size(); ++a)
            for (std::size_t b = a + 1; b < keep.size(); ++b) out.at(a, b) = at(keep[a], keep[b]);
        return out;
    }

private:
    std::size_t offset(std::size_t i, std::size_t j) const {
        if (!(i < j && j < size_))
            throw std::out_of_range("upper-triangle index (" + std::to_string(i) + "," + std::to_string(j) + ")");
        // Row i starts after rows 0..i-1, which hold (size-1) + ... + (size-i) entries.
        return i * (2 * size_ - i - 1) / 2 + (j - i - 1);
    }

    std::size_t size_{0};
    std::vector<T> entries_;
};

template <typename T>
class RectMatrix {
public:
    RectMatrix() = default;
    RectMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, T(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const T& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
    T& operator()(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }

private:
    std::size_t rows_{0};
    std::size_t cols_{0};
    std::vector<T> entries_;
};

namespace detail {

inline void require_small(std::size_t n, const char* what) {
    if (n > 30) throw std::invalid_argument(std::string(what) + ": dimension above 30 is not supported");
}

}  // namespace detail

/// Pf(A) = sum over perfect matchings of sign * prod a_{i j}; Pf of the empty matrix is 1.
/// Expands along the smallest remaining index, memoized on the remaining index set.
template <typename T>
T pfaffian(const UpperTriMatrix<T>& a) {
    const std::size_t n = a.size();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian of odd size " + std::to_string(n));
    if (n == 0) return T(1);
    detail::require_small(n, "pfaffian");

    std::unordered_map<std::uint32_t, T> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> T {
        if (mask == 0) return T(1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        const auto first = static_cast<std::size_t>(std::countr_zero(mask));
        const std::uint32_t rest = mask & ~(std::uint32_t{1} << first);
        T total(0);
        int position = 0;
        for (std::size_t j = first + 1; j < n; ++j) {
            if (!(rest >> j & 1U)) continue;
            // j is the (position+1)-th remaining index after `first`.
            T sub = self(self, rest & ~(std::uint32_t{1} << j));
            T termv = a.at(first, j) * sub;
            if (position % 2 == 0)
                total = total + termv;
            else
                total = total - termv;
            ++position;
        }
        memo.emplace(mask, total);
        return total;
    };
    const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    return rec(rec, all);
}

/// Division-free determinant by Laplace expansion along rows, memoized on the used-column set.
template <typename T>
T determinant(const RectMatrix<T>& m) {
    if (!m.square())
        throw std::invalid_argument("determinant of non-square " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()) + " matrix");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    detail::require_small(n, "determinant");

    std::unordered_map<std::uint32_t, T> memo;
    // minor(row, used) = det of rows row..n-1 over the columns not in `used`.
    auto rec = [&](auto&& self, std::size_t row, std::uint32_t used) -> T {
        if (row == n) return T(1);
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        T total(0);
        int position = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (used >> c & 1U) continue;
            T termv = m(row, c) * self(self, row + 1, used | (std::uint32_t{1} << c));
            if (position % 2 == 0)
                total = total + termv;
            else
                total = total - termv;
            ++position;
        }
        memo.emplace(used, total);
        return total;
    };
    return rec(rec, 0, 0);
}

/// Rows and columns outside the kept index lists are erased; order is preserved.
template <typename T>
RectMatrix<T> submatrix(const RectMatrix<T>& w, const std::vector<std::size_t>& keep_rows,
                        const std::vector<std::size_t>& keep_cols) {
    for (std::size_t r : keep_rows)
        if (r >= w.rows()) throw std::out_of_range("submatrix row " + std::to_string(r));
    for (std::size_t c : keep_cols)
        if (c >= w.cols()) throw std::out_of_range("submatrix column " + std::to_string(c));
    RectMatrix<T> out(keep_rows.size(), keep_cols.size());
    for (std::size_t a = 0; a < keep_rows.size(); ++a)
        for (std::size_t b = 0; b < keep_cols.size(); ++b) out(a, b) = w(keep_rows[a], keep_cols[b]);
    return out;
}

/// Upper triangle of [[X, W], [-W^T, Y]].
template <typename T>
UpperTriMatrix<T> assemble_block(const UpperTriMatrix<T>& x, const UpperTriMatrix<T>& y, const RectMatrix<T>& w) {
    const std::size_t m = x.size();
    const std::size_t k = y.size();
    if (w.rows() != m || w.cols() != k) throw std::invalid_argument("block shapes do not match");
    UpperTriMatrix<T> out(m + k);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) out.at(i, j) = x.at(i, j);
        for (std::size_t j = 0; j < k; ++j) out.at(i, m + j) = w(i, j);
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) out.at(m + i, m + j) = y.at(i, j);
    return out;
}

/// Right-hand side of the Caianiello identity:
///   sum over even subsets I of [m], J of [k] with m-|I| = k-|J| of
///   eps(I,J) Pf(X(I,I)) Pf(Y(J,J)) det W([m]\I, [k]\J),
///   eps = (-1)^(sum I + sum J + C(m,2) + C(k,2) + C(m-|I|,2)), indices 1-based.
template <typename T>
T caianiello_expand(const UpperTriMatrix<T>& x, const UpperTriMatrix<T>& y, const RectMatrix<T>& w) {
    const std::size_t m = x.size();
    const std::size_t k = y.size();
    if ((m + k) % 2 != 0) throw std::invalid_argument("caianiello expansion needs m + k even");
    if (w.rows() != m || w.cols() != k) throw std::invalid_argument("W must be m x k");
    detail::require_small(m, "caianiello_expand");
    detail::require_small(k, "caianiello_expand");

    auto choose2 = [](std::size_t n) { return n * (n > 0 ? n - 1 : 0) / 2; };
    auto split = [](std::uint32_t mask, std::size_t n, std::vector<std::size_t>& in, std::vector<std::size_t>& out,
                    std::size_t& index_sum) {
        in.clear();
        out.clear();
        index_sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1U) {
                in.push_back(i);
                index_sum += i + 1;
            } else {
                out.push_back(i);
            }
        }
    };

    T total(0);
    std::vector<std::size_t> i_in, i_out, j_in, j_out;
    for (std::uint32_t im = 0; im < (std::uint32_t{1} << m); ++im) {
        if (std::popcount(im) % 2 != 0) continue;
        std::size_t sum_i = 0;
        split(im, m, i_in, i_out, sum_i);
        for (std::uint32_t jm = 0; jm < (std::uint32_t{1} << k); ++jm) {
            if (std::popcount(jm) % 2 != 0) continue;
            std::size_t sum_j = 0;
            split(jm, k, j_in, j_out, sum_j);
            if (i_out.size() != j_out.size()) continue;
            T termv = pfaffian(x.principal(i_in)) * pfaffian(y.principal(j_in)) * determinant(submatrix(w, i_out, j_out));
            const std::size_t exponent = sum_i + sum_j + choose2(m) + choose2(k) + choose2(i_out.size());
            if (exponent % 2 == 0)
                total = total + termv;
            else
                total = total - termv;
        }
    }
    return total;
}

}  // namespace bkptau
