#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mdenum/bigfloat.hpp"
#include "mdenum/poly.hpp"
#include "mdenum/semiring.hpp"

namespace mdenum {

enum class GrowthMode { Hosoya, PureDimer };

/// Working precision for per-site roots, in decimal digits.
inline constexpr int kGrowthDigits = 50;

struct GrowthEntry {
  int m;
  int n;
  Natural value;
  /// value^(1/mn); unset (zero) for pure-dimer cells with odd area.
  BigFloat per_site_root;
  /// Supremum over this and all earlier entries.
  BigFloat running_sup;
};

/// Exact counts and per-site roots for a window of grid sizes. Every root is
/// a certified lower bound on the growth constant, so the running supremum
/// is the best bound found so far.
class GrowthTable {
 public:
  explicit GrowthTable(GrowthMode mode);

  GrowthMode mode() const { return mode_; }
  void add(int m, int n, Natural value);

  const std::vector<GrowthEntry>& entries() const { return entries_; }
  const BigFloat& running_sup() const { return sup_; }
  const Natural* value(int m, int n) const;
  /// Exact values keyed by (m, n), as consumed by fekete_verify.
  std::map<std::pair<int, int>, Natural> values() const;

  /// Columns: m, n, exact_count_digits, per_site_root, running_sup.
  std::string to_csv() const;
  std::string to_json() const;

 private:
  GrowthMode mode_;
  BigFloat sup_;
  std::vector<GrowthEntry> entries_;
  std::map<std::pair<int, int>, std::size_t> index_;
};

/// Fills the table for 1 <= m <= max_m, 1 <= n <= max_n with exact counts.
GrowthTable growth_estimate(int max_m, int max_n, GrowthMode mode, const Limits& limits = {});

enum class FeketeDirection { Super, Sub };

/// One failed instance of a multiplicativity inequality. For `row_axis` the
/// split is along m at fixed `fixed`; otherwise along n at fixed `fixed`.
struct FeketeViolation {
  bool row_axis;
  int first;
  int second;
  int fixed;
  std::string describe() const;
};

/// Checks every instance of
///   super: a(m1,n) a(m2,n) <= a(m1+m2+k,n)   and   a(m,n1) a(m,n2) <= a(m,n1+n2+k)
///   sub:   a(m1+m2,n) <= a(m1+k,n) a(m2,n)   and   a(m,n1+n2) <= a(m,n1+k) a(m,n2)
/// whose terms are all present in `sequence`.
std::vector<FeketeViolation> fekete_verify(const std::map<std::pair<int, int>, Natural>& sequence, int k,
                                           FeketeDirection direction);

}  // namespace mdenum
