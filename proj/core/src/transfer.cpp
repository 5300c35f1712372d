#include "mdenum/transfer.hpp"

#include <set>

namespace mdenum {

NumericOperator build_row_operator(int m, int n, int row, const std::vector<Site>& fixed, const Limits& limits) {
  detail::check_bits<NumericSemiring>(m, limits);
  if (n < 1) throw std::invalid_argument("row count n must be >= 1");
  if (row < 1 || row > n) throw std::out_of_range("row " + std::to_string(row) + " outside [1, " + std::to_string(n) + "]");
  validate_sites(m, n, fixed);
  std::set<int> monomer_columns;
  for (const auto& site : fixed) {
    if (site.row == row) monomer_columns.insert(site.column);
  }
  const ColumnRule<NumericSemiring> dimer_column{0, 1, 1, true};
  const ColumnRule<NumericSemiring> monomer_column{1, 0, 0, false};
  std::vector<ColumnRule<NumericSemiring>> columns;
  columns.reserve(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) columns.push_back(monomer_columns.count(k) ? monomer_column : dimer_column);
  return NumericOperator(NumericOperator::Kind::PerRow, std::move(columns), row);
}

}  // namespace mdenum
