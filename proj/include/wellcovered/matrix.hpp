#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "wellcovered/errors.hpp"
#include "wellcovered/field.hpp"

namespace wc {

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix from_rows(F field, std::size_t cols, const std::vector<std::vector<value_type>>& rows) {
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatchError("row length differs from column count");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
  }

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  value_type& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
    return true;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

template <ExactField F>
struct RrefResult {
  Matrix<F> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination to reduced row echelon form. Over the rationals
/// the pivot in each column is the nonzero entry of smallest bit size; over
/// GF(p) it is the first nonzero entry. The result does not depend on this.
template <ExactField F>
RrefResult<F> rref(Matrix<F> m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t best = m.rows();
    std::size_t best_cost = 0;
    for (std::size_t r = lead; r < m.rows(); ++r) {
      if (f.is_zero(m.at(r, c))) continue;
      std::size_t cost = f.pivot_cost(m.at(r, c));
      if (best == m.rows() || (F::kPrefersSmallPivots && cost < best_cost)) {
        best = r;
        best_cost = cost;
        if constexpr (!F::kPrefersSmallPivots) break;
      }
    }
    if (best == m.rows()) continue;
    m.swap_rows(lead, best);
    const auto scale = f.inv(m.at(lead, c));
    for (std::size_t k = c; k < m.cols(); ++k) m.at(lead, k) = f.mul(m.at(lead, k), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || f.is_zero(m.at(r, c))) continue;
      const auto factor = m.at(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!f.is_zero(m.at(lead, k))) f.sub_mul(m.at(r, k), factor, m.at(lead, k));
    }
    pivots.push_back(c);
    ++lead;
  }
  std::size_t rank = pivots.size();
  return RrefResult<F>{std::move(m), rank, std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

namespace detail {

template <ExactField F>
std::vector<std::vector<typename F::value_type>> nullspace_from_rref(const F& f, std::size_t cols,
                                                                     const std::vector<std::size_t>& pivots,
                                                                     auto&& entry) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::value_type>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::value_type> v(cols, f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(entry(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Basis of {x : Mx = 0}: one vector per free column (increasing), carrying a
/// 1 in that column.
template <ExactField F>
std::vector<std::vector<typename F::value_type>> nullspace_basis(const Matrix<F>& m) {
  auto r = rref(m);
  return detail::nullspace_from_rref(m.field(), m.cols(), r.pivot_columns,
                                     [&](std::size_t row, std::size_t col) -> const auto& { return r.reduced.at(row, col); });
}

template <ExactField F>
std::vector<typename F::value_type> multiply(const Matrix<F>& m, std::span<const typename F::value_type> x) {
  if (x.size() != m.cols()) throw DimensionMismatchError("vector length differs from column count");
  const F& f = m.field();
  std::vector<typename F::value_type> out(m.rows(), f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!f.is_zero(m.at(r, c))) out[r] = f.add(out[r], f.mul(m.at(r, c), x[c]));
  return out;
}

/// True iff the two vector families span the same row space.
template <ExactField F>
bool span_equal(const std::vector<std::vector<typename F::value_type>>& a,
                const std::vector<std::vector<typename F::value_type>>& b, const F& field) {
  std::size_t cols = 0;
  bool have_cols = false;
  for (const auto* family : {&a, &b})
    for (const auto& v : *family) {
      if (have_cols && v.size() != cols) throw DimensionMismatchError("span_equal: vectors differ in length");
      cols = v.size();
      have_cols = true;
    }
  auto stacked = a;
  stacked.insert(stacked.end(), b.begin(), b.end());
  const std::size_t ra = rank(Matrix<F>::from_rows(field, cols, a));
  const std::size_t rb = rank(Matrix<F>::from_rows(field, cols, b));
  if (ra != rb) return false;
  return rank(Matrix<F>::from_rows(field, cols, stacked)) == ra;
}

/// Row space maintained in reduced echelon form while rows stream in. Basis
/// rows are stored sparsely: after reduction each is nonzero only on its own
/// pivot and on free columns.
template <ExactField F>
class RowSpaceBuilder {
 public:
  using value_type = typename F::value_type;

  RowSpaceBuilder(F field, std::size_t cols)
      : field_(std::move(field)), cols_(cols), pivot_row_(cols, kNone) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == cols_; }

  /// Reduces `row` against the current basis; returns true if it enlarged it.
  bool add_row(std::vector<value_type> row) {
    if (row.size() != cols_) throw DimensionMismatchError("row length differs from column count");
    const F& f = field_;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (pivot_row_[c] == kNone || f.is_zero(row[c])) continue;
      const value_type factor = row[c];
      for (const auto& [k, v] : rows_[pivot_row_[c]]) f.sub_mul(row[k], factor, v);
    }
    // Leading entry becomes the pivot, so the sorted rows stay in RREF.
    std::size_t lead = 0;
    while (lead < cols_ && f.is_zero(row[lead])) ++lead;
    if (lead == cols_) return false;

    const value_type scale = f.inv(row[lead]);
    SparseRow fresh;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!f.is_zero(row[c])) fresh.emplace_back(c, c == lead ? f.one() : f.mul(row[c], scale));

    // Clear the new pivot column from existing rows.
    for (auto& existing : rows_) {
      auto hit = std::find_if(existing.begin(), existing.end(), [&](const auto& e) { return e.first == lead; });
      if (hit == existing.end()) continue;
      const value_type factor = hit->second;
      std::vector<value_type> dense(cols_, f.zero());
      for (const auto& [k, v] : existing) dense[k] = v;
      for (const auto& [k, v] : fresh) f.sub_mul(dense[k], factor, v);
      existing.clear();
      for (std::size_t c = 0; c < cols_; ++c)
        if (!f.is_zero(dense[c])) existing.emplace_back(c, std::move(dense[c]));
    }
    pivot_row_[lead] = rows_.size();
    rows_.push_back(std::move(fresh));
    return true;
  }

  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_row_[c] != kNone) out.push_back(c);
    return out;
  }

  /// The basis as a matrix in reduced row echelon form.
  Matrix<F> reduced() const {
    const auto pivots = pivot_columns();
    Matrix<F> m(field_, pivots.size(), cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (const auto& [k, v] : rows_[pivot_row_[pivots[i]]]) m.at(i, k) = v;
    return m;
  }

  std::vector<std::vector<value_type>> nullspace_basis() const {
    const auto pivots = pivot_columns();
    const Matrix<F> m = reduced();
    return detail::nullspace_from_rref(field_, cols_, pivots,
                                       [&](std::size_t row, std::size_t col) -> const auto& { return m.at(row, col); });
  }

 private:
  using SparseRow = std::vector<std::pair<std::size_t, value_type>>;
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  F field_;
  std::size_t cols_;
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivot_row_;
};

}  // namespace wc
