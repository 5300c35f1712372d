#pragma once

#include <array>
#include <string>
#include <vector>

#include "mdenum/poly.hpp"
#include "mdenum/region.hpp"
#include "mdenum/semiring.hpp"

// Direct enumeration and closed forms. Nothing in here touches the transfer
// operators, so results can be compared against them.
namespace mdenum::oracle {

enum class TileId { T1, T2, T3, T4, T5 };

/// One of the five mosaic tiles; 'b' marks an edge crossed by a dimer.
struct MosaicTile {
  TileId id;
  char left;
  char bottom;
  char right;
  char top;
};

/// T1 monomer, T2 right half of an x-dimer, T3 bottom half of a y-dimer,
/// T4 top half of a y-dimer, T5 left half of an x-dimer.
const std::array<MosaicTile, 5>& mosaic_tiles();

/// Right, bottom and top boundary states of a p x q mosaic. Bottom and top
/// are read right to left, the right side top to bottom. The left state is
/// always trivial.
struct BoundaryTriple {
  std::string right;
  std::string bottom;
  std::string top;
};

/// G_{m x n} by backtracking over vertices in row-major order.
MDPolynomial brute_force_partition(int m, int n, const Limits& limits = {});

/// State polynomial of suitably adjacent p x q mosaics with the given boundary.
MDPolynomial enumerate_mosaics(int p, int q, const BoundaryTriple& triple, const Limits& limits = {});

/// Number of suitably adjacent mosaics for the triple, counted without weights.
Natural count_mosaics(int p, int q, const BoundaryTriple& triple, const Limits& limits = {});

/// Perfect matchings of the m x n grid with the sites in `removed` deleted.
Natural brute_force_fixed(int m, int n, const std::vector<Site>& removed, const Limits& limits = {});

/// Domino tilings of an octagon region with its `sites` removed, enumerated
/// on the cell set directly.
Natural brute_force_octagon(const RegionSpec& region, const Limits& limits = {});

/// Product formula for perfect matchings of the m x n grid (mn even), rounded
/// after a 1e-6 integrality gate.
Natural kasteleyn_product(int m, int n);

/// 2^(n(n+1)/2)
Natural aztec_closed_form(int n);

/// sum_{k=0}^{n} C(n,k) C(n+k,k)
Natural delannoy_augmented(int n);

}  // namespace mdenum::oracle
