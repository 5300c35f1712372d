#include "mdenum/oracle.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "mdenum/bigfloat.hpp"
#include "mdenum/errors.hpp"

namespace mdenum::oracle {

namespace {

void check_cells(long long cells, const Limits& limits, const char* what) {
  if (cells > limits.max_enumeration_cells) {
    throw ResourceLimitError(std::string(what) + " over " + std::to_string(cells) + " cells exceeds the limit of " +
                             std::to_string(limits.max_enumeration_cells));
  }
  if (cells > 64) throw ResourceLimitError(std::string(what) + " supports at most 64 cells");
}

void check_dims(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("grid dimensions must be >= 1");
}

// Vertex (c, j), both 1-based, sits at bit (j-1)*m + (c-1).
struct Grid {
  int m;
  int n;
  int bit(int c, int j) const { return (j - 1) * m + (c - 1); }
};

class CoveringCounter {
 public:
  CoveringCounter(Grid grid, bool allow_monomers) : grid_(grid), allow_monomers_(allow_monomers) {}

  // Counts coverings of the free vertices, tallied by (nv, nx, ny).
  std::map<std::tuple<int, int, int>, std::uint64_t> run(std::uint64_t blocked) {
    tally_.clear();
    visit(0, blocked, 0, 0, 0);
    return tally_;
  }

 private:
  void visit(int index, std::uint64_t used, int nv, int nx, int ny) {
    const int total = grid_.m * grid_.n;
    while (index < total && ((used >> index) & 1u)) ++index;
    if (index == total) {
      ++tally_[{nv, nx, ny}];
      return;
    }
    const std::uint64_t self = std::uint64_t{1} << index;
    const int column = index % grid_.m + 1;
    const int row = index / grid_.m + 1;
    if (allow_monomers_) visit(index + 1, used | self, nv + 1, nx, ny);
    if (column < grid_.m) {
      const std::uint64_t right = self << 1;
      if (!(used & right)) visit(index + 1, used | self | right, nv, nx + 1, ny);
    }
    if (row < grid_.n) {
      const std::uint64_t above = self << grid_.m;
      if (!(used & above)) visit(index + 1, used | self | above, nv, nx, ny + 1);
    }
  }

  Grid grid_;
  bool allow_monomers_;
  std::map<std::tuple<int, int, int>, std::uint64_t> tally_;
};

Natural count_perfect(Grid grid, std::uint64_t blocked) {
  Natural total = 0;
  for (const auto& [key, count] : CoveringCounter(grid, false).run(blocked)) total += Natural(std::to_string(count));
  return total;
}

class MosaicEnumerator {
 public:
  MosaicEnumerator(int p, int q, const BoundaryTriple& triple)
      : p_(p), q_(q), triple_(triple), grid_(static_cast<std::size_t>(p * q), nullptr) {}

  template <class Visit>
  void run(Visit&& on_mosaic) {
    place(0, 0, 0, 0, on_mosaic);
  }

 private:
  template <class Visit>
  void place(int index, int nv, int nx, int ny, Visit& on_mosaic) {
    if (index == p_ * q_) {
      on_mosaic(nv, nx, ny);
      return;
    }
    const int c = index % p_ + 1;
    const int j = index / p_ + 1;
    const char left = c == 1 ? 'a' : at(c - 1, j)->right;
    const char bottom = j == 1 ? triple_.bottom[static_cast<std::size_t>(p_ - c)] : at(c, j - 1)->top;
    for (const auto& tile : mosaic_tiles()) {
      if (tile.left != left || tile.bottom != bottom) continue;
      if (c == p_ && tile.right != triple_.right[static_cast<std::size_t>(q_ - j)]) continue;
      if (j == q_ && tile.top != triple_.top[static_cast<std::size_t>(p_ - c)]) continue;
      grid_[static_cast<std::size_t>(index)] = &tile;
      place(index + 1, nv + (tile.id == TileId::T1), nx + (tile.id == TileId::T2), ny + (tile.id == TileId::T4),
            on_mosaic);
    }
    grid_[static_cast<std::size_t>(index)] = nullptr;
  }

  const MosaicTile* at(int c, int j) const { return grid_[static_cast<std::size_t>((j - 1) * p_ + (c - 1))]; }

  int p_;
  int q_;
  const BoundaryTriple& triple_;
  std::vector<const MosaicTile*> grid_;
};

void check_triple(int p, int q, const BoundaryTriple& triple, const Limits& limits) {
  check_dims(p, q);
  check_cells(static_cast<long long>(p) * q, limits, "mosaic enumeration");
  if (triple.bottom.size() != static_cast<std::size_t>(p) || triple.top.size() != static_cast<std::size_t>(p) ||
      triple.right.size() != static_cast<std::size_t>(q)) {
    throw std::invalid_argument("boundary triple lengths must be (q, p, p) for a p x q mosaic");
  }
  for (const auto* word : {&triple.right, &triple.bottom, &triple.top}) {
    for (char ch : *word) {
      if (ch != 'a' && ch != 'b') throw std::invalid_argument("boundary states use only letters a and b");
    }
  }
}

Natural binomial(unsigned long n, unsigned long k) {
  Natural out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Product formula at `digits` decimal digits of working precision.
BigFloat kasteleyn_at(int m, int n, int digits) {
  const mpfr_prec_t bits = BigFloat::bits_for_digits(digits);
  BigFloat pi(bits);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  auto cos_sq = [&](int j, int size) {
    BigFloat t(bits);
    mpfr_mul_ui(t.get(), pi.get(), static_cast<unsigned long>(j), MPFR_RNDN);
    mpfr_div_ui(t.get(), t.get(), static_cast<unsigned long>(size + 1), MPFR_RNDN);
    mpfr_cos(t.get(), t.get(), MPFR_RNDN);
    mpfr_sqr(t.get(), t.get(), MPFR_RNDN);
    mpfr_mul_ui(t.get(), t.get(), 4, MPFR_RNDN);
    return t;
  };
  std::vector<BigFloat> row_terms;
  for (int k = 1; k <= n; ++k) row_terms.push_back(cos_sq(k, n));
  BigFloat product(bits, 1.0);
  BigFloat term(bits);
  for (int j = 1; j <= m; ++j) {
    const BigFloat col = cos_sq(j, m);
    for (int k = 1; k <= n; ++k) {
      // |2cos(a) + 2i cos(b)|^(1/2) = (4cos^2 a + 4cos^2 b)^(1/4)
      mpfr_add(term.get(), col.get(), row_terms[static_cast<std::size_t>(k - 1)].get(), MPFR_RNDN);
      mpfr_sqrt(term.get(), term.get(), MPFR_RNDN);
      mpfr_sqrt(term.get(), term.get(), MPFR_RNDN);
      mpfr_mul(product.get(), product.get(), term.get(), MPFR_RNDN);
    }
  }
  return product;
}

}  // namespace

const std::array<MosaicTile, 5>& mosaic_tiles() {
  static const std::array<MosaicTile, 5> tiles{{
      {TileId::T1, 'a', 'a', 'a', 'a'},
      {TileId::T2, 'b', 'a', 'a', 'a'},
      {TileId::T3, 'a', 'a', 'a', 'b'},
      {TileId::T4, 'a', 'b', 'a', 'a'},
      {TileId::T5, 'a', 'a', 'b', 'a'},
  }};
  return tiles;
}

MDPolynomial brute_force_partition(int m, int n, const Limits& limits) {
  check_dims(m, n);
  check_cells(static_cast<long long>(m) * n, limits, "brute-force partition");
  MDPolynomial g;
  for (const auto& [key, count] : CoveringCounter(Grid{m, n}, true).run(0)) {
    const auto [nv, nx, ny] = key;
    g.add_term(nv, nx, ny, Natural(std::to_string(count)));
  }
  return g;
}

MDPolynomial enumerate_mosaics(int p, int q, const BoundaryTriple& triple, const Limits& limits) {
  check_triple(p, q, triple, limits);
  std::map<std::tuple<int, int, int>, std::uint64_t> tally;
  MosaicEnumerator(p, q, triple).run([&](int nv, int nx, int ny) { ++tally[{nv, nx, ny}]; });
  MDPolynomial out;
  for (const auto& [key, count] : tally) {
    const auto [nv, nx, ny] = key;
    out.add_term(nv, nx, ny, Natural(std::to_string(count)));
  }
  return out;
}

Natural count_mosaics(int p, int q, const BoundaryTriple& triple, const Limits& limits) {
  check_triple(p, q, triple, limits);
  std::uint64_t count = 0;
  MosaicEnumerator(p, q, triple).run([&](int, int, int) { ++count; });
  return Natural(std::to_string(count));
}

Natural brute_force_fixed(int m, int n, const std::vector<Site>& removed, const Limits& limits) {
  check_dims(m, n);
  check_cells(static_cast<long long>(m) * n, limits, "brute-force fixed monomer count");
  validate_sites(m, n, removed);
  const Grid grid{m, n};
  std::uint64_t blocked = 0;
  for (const auto& site : removed) blocked |= std::uint64_t{1} << grid.bit(site.column, site.row);
  return count_perfect(grid, blocked);
}

Natural brute_force_octagon(const RegionSpec& region, const Limits& limits) {
  region.validate();
  check_cells(static_cast<long long>(region.m) * region.n, limits, "brute-force octagon tiling");
  const Grid grid{region.m, region.n};
  std::uint64_t blocked = 0;
  for (int j = 1; j <= region.n; ++j) {
    for (int c = 1; c <= region.m; ++c) {
      if (!region.contains(Site{c, j})) blocked |= std::uint64_t{1} << grid.bit(c, j);
    }
  }
  for (const auto& site : region.sites) blocked |= std::uint64_t{1} << grid.bit(site.column, site.row);
  return count_perfect(grid, blocked);
}

Natural kasteleyn_product(int m, int n) {
  check_dims(m, n);
  if ((m * n) % 2 != 0) throw std::invalid_argument("the product formula needs an even number of vertices");
  if (m > 32 || n > 32) throw ResourceLimitError("the product formula is supported for m, n <= 32");
  const int digits = 30 + (m * n) / 2;
  const BigFloat value = kasteleyn_at(m, n, digits);
  const Natural rounded = value.round();
  BigFloat distance(value.precision(), rounded);
  mpfr_sub(distance.get(), value.get(), distance.get(), MPFR_RNDN);
  mpfr_abs(distance.get(), distance.get(), MPFR_RNDN);
  if (mpfr_cmp_d(distance.get(), 1e-6) >= 0) {
    throw CrossCheckError("product formula for " + std::to_string(m) + "x" + std::to_string(n) +
                          " is not within 1e-6 of an integer");
  }
  // A second evaluation at doubled precision must round to the same integer.
  if (kasteleyn_at(m, n, 2 * digits).round() != rounded) {
    throw CrossCheckError("product formula is not stable under increased precision");
  }
  return rounded;
}

Natural aztec_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("Aztec diamond order must be >= 1");
  Natural out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(n) * static_cast<unsigned long>(n + 1) / 2);
  return out;
}

Natural delannoy_augmented(int n) {
  if (n < 1) throw std::invalid_argument("augmented Aztec diamond order must be >= 1");
  Natural sum = 0;
  const auto un = static_cast<unsigned long>(n);
  for (unsigned long k = 0; k <= un; ++k) sum += binomial(un, k) * binomial(un + k, k);
  return sum;
}

}  // namespace mdenum::oracle
