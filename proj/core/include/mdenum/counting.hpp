#pragma once

#include <cstdint>
#include <vector>

#include "mdenum/poly.hpp"
#include "mdenum/region.hpp"
#include "mdenum/semiring.hpp"

namespace mdenum {

/// G_{m x n}(v,x,y): the monomer-dimer partition polynomial of the m x n grid
/// (m columns, n rows). Homogeneous of grade mn.
MDPolynomial partition_function(int m, int n, const Limits& limits = {});

/// G_{m x n} evaluated at exact rational activities, computed in numeric mode.
Rational partition_value(int m, int n, const Rational& v, const Rational& x, const Rational& y,
                         const Limits& limits = {});

/// Coefficient of z^k counts k-edge matchings.
UniPolynomial matching_polynomial(int m, int n, const Limits& limits = {});

/// Number of matchings of the grid graph, the empty one included.
Natural hosoya_index(int m, int n, const Limits& limits = {});

/// Perfect matchings weighted by x0 per horizontal and y0 per vertical dimer.
Natural pure_dimer_count(int m, int n, const Natural& x0 = 1, const Natural& y0 = 1, const Limits& limits = {});

/// (1,1)-entries of (A_m)^n for n = 1..max_n at the given activities.
std::vector<Natural> corner_series(int m, int max_n, const Weights<NumericSemiring>& weights,
                                   const Limits& limits = {});

struct EntryCheck {
  std::uint64_t start;
  std::uint64_t end;
  Natural value;
};

struct SingleMonomerResult {
  Natural count;
  /// Every (i,j) with {i,j} = {1, 2^k+1}, k even; empty when not verified.
  std::vector<EntryCheck> entries;
};

/// Pure dimer coverings of the m x n grid (m, n odd) with the single monomer
/// at (1,1). With `verify_entries` all equivalent boundary entries are
/// computed and must agree, else CrossCheckError.
SingleMonomerResult single_boundary_monomer_count(int m, int n, bool verify_entries = true,
                                                  const Limits& limits = {});

/// Coverings with monomers exactly at `fixed` and dimers everywhere else.
Natural fixed_monomer_count(int m, int n, const std::vector<Site>& fixed, const Limits& limits = {});

/// Domino tilings of the Aztec octagon described by `region` (no holes).
Natural aztec_octagon_count(const RegionSpec& region, const Limits& limits = {});

/// Domino tilings of the Aztec octagon with the squares in `region.sites` removed.
Natural aztec_octagon_holes_count(const RegionSpec& region, const Limits& limits = {});

}  // namespace mdenum
