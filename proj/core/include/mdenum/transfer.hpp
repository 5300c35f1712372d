#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mdenum/errors.hpp"
#include "mdenum/region.hpp"
#include "mdenum/semiring.hpp"

namespace mdenum {

/// Tile weights for one column of a bar mosaic.
///
/// `monomer`, `x_dimer` and `y_dimer` weight the tiles that carry a monomer,
/// the right half of a horizontal dimer and the top half of a vertical dimer.
/// `open` admits the two remaining tiles (bottom half of a vertical dimer,
/// left half of a horizontal dimer); a column fixed as a monomer is closed.
template <class S>
struct ColumnRule {
  typename S::weight_type monomer;
  typename S::weight_type x_dimer;
  typename S::weight_type y_dimer;
  bool open = true;
};

/// The bar state matrix A_m of one row, described column by column.
///
/// With per-column rules the matrices obey
///   A_k = [ t1 A_{k-1} + t2 B_{k-1} , t3 A_{k-1} ; t4 A_{k-1} , 0 ]
///   B_k = [ t5 A_{k-1} , 0 ; 0 , 0 ],   A_0 = [1], B_0 = [0],
/// where column k supplies t1..t4 and t3 = t5 = open. The uniform operator uses
/// one rule for every column; a per-row operator closes the fixed sites.
template <class S>
class TransferOperator {
 public:
  using value_type = typename S::value_type;
  enum class Kind { Uniform, PerRow };

  TransferOperator(Kind kind, std::vector<ColumnRule<S>> columns, int row = 0)
      : kind_(kind), row_(row), columns_(std::move(columns)) {}

  int m() const { return static_cast<int>(columns_.size()); }
  Kind kind() const { return kind_; }
  int row() const { return row_; }
  std::size_t states() const { return std::size_t{1} << m(); }
  const std::vector<ColumnRule<S>>& columns() const { return columns_; }

  /// row_vector <- row_vector * A_m, in place, one column level at a time.
  void apply(std::span<value_type> row_vector) const;

 private:
  Kind kind_;
  int row_;
  std::vector<ColumnRule<S>> columns_;
};

using NumericOperator = TransferOperator<NumericSemiring>;
using SymbolicOperator = TransferOperator<SymbolicSemiring>;

/// Explicit 2^m x 2^m table, rows = bottom state, columns = top state, 0-based.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t size, const T& fill) : size_(size), data_(size * size, fill) {}

  std::size_t size() const { return size_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * size_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * size_ + c]; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<T> data_;
};

namespace detail {

template <class S>
void check_bits(int m, const Limits& limits) {
  if (m < 1) throw std::invalid_argument("bar length m must be >= 1");
  if (m > S::max_bits(limits)) {
    throw ResourceLimitError(std::string(S::name) + " transfer operator with m=" + std::to_string(m) +
                             " exceeds the limit of " + std::to_string(S::max_bits(limits)) + " state bits");
  }
}

inline void check_dense(int m, const Limits& limits) {
  if (m > limits.max_dense_bits) {
    throw ResourceLimitError("dense materialization with m=" + std::to_string(m) + " exceeds the limit of " +
                             std::to_string(limits.max_dense_bits) + " state bits");
  }
}

template <class S>
typename S::value_type scaled(const typename S::value_type& a, const typename S::weight_type& w) {
  auto out = S::zero();
  S::add_scaled(out, a, w);
  return out;
}

}  // namespace detail

template <class S>
void TransferOperator<S>::apply(std::span<value_type> vec) const {
  if (vec.size() != states()) {
    throw std::invalid_argument("row vector has " + std::to_string(vec.size()) + " entries, operator expects " +
                                std::to_string(states()));
  }
  value_type low = S::zero();
  // Level k combines the two halves of every 2^k block, which already carry
  // A_{k-1}. The upper quarter of the lower half holds A_{k-2} applied to the
  // lowest quarter scaled by column k-1's open flag, which is exactly the
  // nonzero part of B_{k-1} applied to the lower half.
  for (int level = 1; level <= m(); ++level) {
    const ColumnRule<S>& rule = columns_[static_cast<std::size_t>(level - 1)];
    const std::size_t half = std::size_t{1} << (level - 1);
    const std::size_t quarter = half / 2;
    const bool x_term = level >= 2 && !S::is_zero_weight(rule.x_dimer);
    for (std::size_t base = 0; base < vec.size(); base += 2 * half) {
      value_type* a0 = vec.data() + base;
      value_type* a1 = a0 + half;
      for (std::size_t j = 0; j < half; ++j) {
        S::set_zero(low);
        S::add_scaled(low, a0[j], rule.monomer);
        S::add_scaled(low, a1[j], rule.y_dimer);
        if (x_term && j < quarter) S::add_scaled(low, a0[quarter + j], rule.x_dimer);
        if (rule.open) {
          std::swap(a1[j], a0[j]);
        } else {
          S::set_zero(a1[j]);
        }
        std::swap(a0[j], low);
      }
    }
  }
}

/// Uniform bar operator A_m with activities `w` in every column.
template <class S>
TransferOperator<S> build_bar_operator(int m, const Weights<S>& w, const Limits& limits = {}) {
  detail::check_bits<S>(m, limits);
  std::vector<ColumnRule<S>> columns(static_cast<std::size_t>(m), ColumnRule<S>{w.v, w.x, w.y, true});
  return TransferOperator<S>(TransferOperator<S>::Kind::Uniform, std::move(columns));
}

/// Operator A_{m,i} for row `row` of an m x n grid whose sites in `fixed` are
/// monomers and every other site is covered by a dimer (counting weights).
NumericOperator build_row_operator(int m, int n, int row, const std::vector<Site>& fixed, const Limits& limits = {});

/// Entry (start, end) of the ordered product of `ops`, 1-based state indices,
/// by propagating a unit row vector.
template <class S>
typename S::value_type sweep(std::span<const TransferOperator<S>> ops, std::uint64_t start, std::uint64_t end);

/// Final row vector of the product, started at the unit vector `start`.
template <class S>
std::vector<typename S::value_type> sweep_row(std::span<const TransferOperator<S>> ops, std::uint64_t start) {
  if (ops.empty()) throw std::invalid_argument("sweep needs at least one operator");
  const int m = ops.front().m();
  for (const auto& op : ops) {
    if (op.m() != m) throw std::invalid_argument("operators in a sweep must share the bar length");
  }
  const std::size_t states = std::size_t{1} << m;
  if (start < 1 || start > states) throw std::out_of_range("sweep start index outside [1, 2^m]");
  std::vector<typename S::value_type> vec(states, S::zero());
  vec[start - 1] = S::one();
  for (const auto& op : ops) op.apply(vec);
  return vec;
}

template <class S>
typename S::value_type sweep(std::span<const TransferOperator<S>> ops, std::uint64_t start, std::uint64_t end) {
  auto vec = sweep_row(ops, start);
  if (end < 1 || end > vec.size()) throw std::out_of_range("sweep end index outside [1, 2^m]");
  return std::move(vec[end - 1]);
}

template <class S>
std::vector<typename S::value_type> sweep_row(const std::vector<TransferOperator<S>>& ops, std::uint64_t start) {
  return sweep_row(std::span<const TransferOperator<S>>(ops), start);
}

template <class S>
typename S::value_type sweep(const std::vector<TransferOperator<S>>& ops, std::uint64_t start, std::uint64_t end) {
  return sweep(std::span<const TransferOperator<S>>(ops), start, end);
}

/// Applies `op` n times to the unit vector `start`; after each application
/// `on_row(i, vec)` sees the row vector of op^i (i = 1..n).
template <class S, class Fn>
void sweep_power_each(const TransferOperator<S>& op, int n, std::uint64_t start, Fn&& on_row) {
  if (n < 1) throw std::invalid_argument("row count n must be >= 1");
  if (start < 1 || start > op.states()) throw std::out_of_range("sweep start index outside [1, 2^m]");
  std::vector<typename S::value_type> vec(op.states(), S::zero());
  vec[start - 1] = S::one();
  for (int i = 1; i <= n; ++i) {
    op.apply(vec);
    on_row(i, static_cast<const std::vector<typename S::value_type>&>(vec));
  }
}

/// Entry (start, end) of op^n.
template <class S>
typename S::value_type sweep_power(const TransferOperator<S>& op, int n, std::uint64_t start, std::uint64_t end) {
  if (end < 1 || end > op.states()) throw std::out_of_range("sweep end index outside [1, 2^m]");
  typename S::value_type out = S::zero();
  sweep_power_each(op, n, start, [&](int i, const auto& vec) {
    if (i == n) out = vec[end - 1];
  });
  return out;
}

/// Materializes an operator through the explicit (A_k, B_k) block recursion
/// of its column rules.
template <class S>
DenseMatrix<typename S::value_type> dense_matrix(const TransferOperator<S>& op, const Limits& limits = {}) {
  using V = typename S::value_type;
  detail::check_dense(op.m(), limits);
  DenseMatrix<V> a(1, S::one());
  DenseMatrix<V> b(1, S::zero());
  for (const auto& rule : op.columns()) {
    const std::size_t h = a.size();
    DenseMatrix<V> next_a(2 * h, S::zero());
    DenseMatrix<V> next_b(2 * h, S::zero());
    const auto open = rule.open ? S::weight_one() : S::weight_zero();
    for (std::size_t r = 0; r < h; ++r) {
      for (std::size_t c = 0; c < h; ++c) {
        V& top_left = next_a(r, c);
        S::add_scaled(top_left, a(r, c), rule.monomer);
        S::add_scaled(top_left, b(r, c), rule.x_dimer);
        S::add_scaled(next_a(r, h + c), a(r, c), open);
        S::add_scaled(next_a(h + r, c), a(r, c), rule.y_dimer);
        S::add_scaled(next_b(r, c), a(r, c), open);
      }
    }
    a = std::move(next_a);
    b = std::move(next_b);
  }
  return a;
}

/// A_m from the single merged recursion
///   A_k = [ v A_{k-1} + x [A_{k-2} 0; 0 0] , A_{k-1} ; y A_{k-1} , 0 ].
template <class S>
DenseMatrix<typename S::value_type> dense_merged_form(int m, const Weights<S>& w, const Limits& limits = {}) {
  using V = typename S::value_type;
  detail::check_bits<S>(m, limits);
  detail::check_dense(m, limits);
  DenseMatrix<V> prev(1, S::one());  // A_{k-2}
  DenseMatrix<V> cur(2, S::zero());  // A_{k-1}
  cur(0, 0) = detail::scaled<S>(S::one(), w.v);
  cur(0, 1) = S::one();
  cur(1, 0) = detail::scaled<S>(S::one(), w.y);
  for (int k = 2; k <= m; ++k) {
    const std::size_t h = cur.size();
    DenseMatrix<V> next(2 * h, S::zero());
    for (std::size_t r = 0; r < h; ++r) {
      for (std::size_t c = 0; c < h; ++c) {
        S::add_scaled(next(r, c), cur(r, c), w.v);
        next(r, h + c) = cur(r, c);
        S::add_scaled(next(h + r, c), cur(r, c), w.y);
      }
    }
    for (std::size_t r = 0; r < prev.size(); ++r) {
      for (std::size_t c = 0; c < prev.size(); ++c) S::add_scaled(next(r, c), prev(r, c), w.x);
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Reverses the low `bits` bits of `i`.
inline std::size_t reverse_bits(std::size_t i, int bits) {
  std::size_t out = 0;
  for (int t = 0; t < bits; ++t) {
    out = (out << 1) | ((i >> t) & 1u);
  }
  return out;
}

/// A_m from the tensor recursion
///   A_k = A_{k-1} (x) [v 1; y 0] + B_{k-1} (x) [x 0; 0 0],  B_k = A_{k-1} (x) [1 0; 0 0],
/// which reads bar states left to right. With `to_block_order` the result is
/// conjugated by the bit-reversal permutation so it is indexed like the block form.
template <class S>
DenseMatrix<typename S::value_type> dense_tensor_form(int m, const Weights<S>& w, bool to_block_order = true,
                                                      const Limits& limits = {}) {
  using V = typename S::value_type;
  using W = typename S::weight_type;
  detail::check_bits<S>(m, limits);
  detail::check_dense(m, limits);
  DenseMatrix<V> a(1, S::one());
  DenseMatrix<V> b(1, S::zero());
  const W one = S::weight_one();
  const W zero = S::weight_zero();
  const W seed_a[2][2] = {{w.v, one}, {w.y, zero}};
  const W seed_x[2][2] = {{w.x, zero}, {zero, zero}};
  const W seed_b[2][2] = {{one, zero}, {zero, zero}};
  for (int k = 1; k <= m; ++k) {
    const std::size_t h = a.size();
    DenseMatrix<V> next_a(2 * h, S::zero());
    DenseMatrix<V> next_b(2 * h, S::zero());
    for (std::size_t r = 0; r < h; ++r) {
      for (std::size_t c = 0; c < h; ++c) {
        for (std::size_t r2 = 0; r2 < 2; ++r2) {
          for (std::size_t c2 = 0; c2 < 2; ++c2) {
            V& ea = next_a(2 * r + r2, 2 * c + c2);
            S::add_scaled(ea, a(r, c), seed_a[r2][c2]);
            S::add_scaled(ea, b(r, c), seed_x[r2][c2]);
            S::add_scaled(next_b(2 * r + r2, 2 * c + c2), a(r, c), seed_b[r2][c2]);
          }
        }
      }
    }
    a = std::move(next_a);
    b = std::move(next_b);
  }
  if (!to_block_order) return a;
  DenseMatrix<V> out(a.size(), S::zero());
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a.size(); ++c) out(reverse_bits(r, m), reverse_bits(c, m)) = a(r, c);
  }
  return out;
}

/// Row vector times dense matrix, the direct O(4^m) product.
template <class T>
std::vector<T> dense_row_times(const std::vector<T>& row, const DenseMatrix<T>& mat) {
  if (row.size() != mat.size()) throw std::invalid_argument("dimension mismatch in dense product");
  std::vector<T> out(mat.size(), T{});
  for (std::size_t r = 0; r < mat.size(); ++r) {
    if (row[r] == T{}) continue;
    for (std::size_t c = 0; c < mat.size(); ++c) {
      if (mat(r, c) == T{}) continue;
      out[c] += row[r] * mat(r, c);
    }
  }
  return out;
}

}  // namespace mdenum
