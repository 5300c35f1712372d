#pragma once

#include <compare>
#include <string>
#include <vector>

namespace mdenum {

/// Grid vertex: column counted from the left, row from the bottom, both 1-based.
struct Site {
  int column;
  int row;

  friend auto operator<=>(const Site&, const Site&) = default;
};

std::string to_string(const Site& site);

/// m x n grid with four staircase corners removed and an optional site set.
///
/// Corner orders run clockwise from the top-left: p (top-left), q (top-right),
/// r (bottom-right), s (bottom-left). Order 1 removes nothing; order k removes
/// a triangle with legs k-1. `sites` are fixed monomers on a rectangle, or
/// holes in an octagon.
struct RegionSpec {
  int m = 1;
  int n = 1;
  int p = 1;
  int q = 1;
  int r = 1;
  int s = 1;
  std::vector<Site> sites;

  bool is_rectangle() const { return p == 1 && q == 1 && r == 1 && s == 1; }

  /// True when (column,row) lies in the grid and outside every removed corner.
  bool contains(const Site& site) const;

  /// Number of squares of the octagon, ignoring holes.
  long long area() const;

  /// Throws std::invalid_argument on violated orders, std::out_of_range on
  /// sites outside the grid or inside a removed corner, and on duplicates.
  void validate() const;
};

/// Throws std::out_of_range if a site lies outside the m x n grid or repeats.
void validate_sites(int m, int n, const std::vector<Site>& sites);

}  // namespace mdenum
