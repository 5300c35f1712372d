#include <string>
#include <vector>

#include "doctest.h"
#include "mdenum/bar_state.hpp"
#include "mdenum/errors.hpp"
#include "mdenum/oracle.hpp"
#include "mdenum/transfer.hpp"

using namespace mdenum;
using oracle::BoundaryTriple;

namespace {

MDPolynomial P(int nv, int nx, int ny, int c = 1) { return MDPolynomial::monomial(nv, nx, ny, c); }

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("tile set") {
    const auto& tiles = oracle::mosaic_tiles();
    CHECK(tiles.size() == 5);
    // No tile has b on two opposite edges, and at most one b overall.
    for (const auto& t : tiles) {
      const int bs = (t.left == 'b') + (t.bottom == 'b') + (t.right == 'b') + (t.top == 'b');
      CHECK(bs <= 1);
    }
  }

  TEST_CASE("brute-force partition examples") {
    CHECK(oracle::brute_force_partition(1, 1) == P(1, 0, 0));
    CHECK(oracle::brute_force_partition(1, 2) == P(2, 0, 0) + P(0, 0, 1));
    CHECK(oracle::brute_force_partition(2, 2).to_string() == "v^4 + 2*v^2*x + 2*v^2*y + x^2 + y^2");
  }

  TEST_CASE("3x3 state polynomial for boundary (baa, aba, aab)") {
    const auto g = oracle::enumerate_mosaics(3, 3, BoundaryTriple{"baa", "aba", "aab"});
    CHECK(g.to_string() == "v^6*y + 2*v^4*x*y + 3*v^4*y^2 + 2*v^2*x*y^2 + 3*v^2*y^3 + y^4");
    CHECK(oracle::count_mosaics(3, 3, BoundaryTriple{"baa", "aba", "aab"}) == 12);
    CHECK(oracle::enumerate_mosaics(1, 1, BoundaryTriple{"a", "b", "a"}) == P(0, 0, 1));
  }

  TEST_CASE("trivial boundary mosaics equal brute-force coverings") {
    for (int m = 1; m <= 4; ++m) {
      for (int n = 1; m * n <= 12; ++n) {
        const BoundaryTriple trivial{std::string(n, 'a'), std::string(m, 'a'), std::string(m, 'a')};
        const auto mosaics = oracle::enumerate_mosaics(m, n, trivial);
        REQUIRE(mosaics == oracle::brute_force_partition(m, n));
        REQUIRE(oracle::count_mosaics(m, n, trivial) == mosaics.coefficient_sum());
      }
    }
  }

  TEST_CASE("dense bar matrices equal mosaic state polynomials") {
    for (int m = 1; m <= 4; ++m) {
      const auto a = dense_matrix(build_bar_operator(m, symbolic_weights()));
      const auto states = std::size_t{1} << m;
      for (std::size_t i = 0; i < states; ++i) {
        for (std::size_t j = 0; j < states; ++j) {
          const std::string bottom = state_of_index(m, i + 1);
          const std::string top = state_of_index(m, j + 1);
          REQUIRE(oracle::enumerate_mosaics(m, 1, BoundaryTriple{"a", bottom, top}) == a(i, j));
          const auto b_state = oracle::enumerate_mosaics(m, 1, BoundaryTriple{"b", bottom, top});
          if (m == 1) {
            REQUIRE(b_state == ((i == 0 && j == 0) ? MDPolynomial::one() : MDPolynomial{}));
          } else {
            // B_m = [A_{m-1} 0; 0 0]
            const auto half = states / 2;
            const auto prev = dense_matrix(build_bar_operator(m - 1, symbolic_weights()));
            REQUIRE(b_state == ((i < half && j < half) ? prev(i, j) : MDPolynomial{}));
          }
          REQUIRE(oracle::count_mosaics(m, 1, BoundaryTriple{"a", bottom, top}) == a(i, j).coefficient_sum());
        }
      }
    }
  }

  TEST_CASE("stacked bars equal operator powers on every boundary pair") {
    for (int m = 1; m <= 3; ++m) {
      for (int n = 2; n <= 3; ++n) {
        const auto op = build_bar_operator(m, symbolic_weights());
        const auto states = op.states();
        for (std::uint64_t i = 1; i <= states; ++i) {
          for (std::uint64_t j = 1; j <= states; ++j) {
            const BoundaryTriple triple{std::string(n, 'a'), state_of_index(m, i), state_of_index(m, j)};
            REQUIRE(oracle::enumerate_mosaics(m, n, triple) == sweep_power(op, n, i, j));
          }
        }
      }
    }
  }

  TEST_CASE("fixed and octagon enumeration examples") {
    CHECK(oracle::brute_force_fixed(3, 3, {{1, 1}}) == 4);
    CHECK(oracle::brute_force_fixed(2, 2, {}) == 2);
    CHECK(oracle::brute_force_fixed(3, 3, {}) == 0);
    RegionSpec ring;
    ring.m = 3;
    ring.n = 3;
    ring.sites = {{2, 2}};
    CHECK(oracle::brute_force_octagon(ring) == 2);
  }

  TEST_CASE("Kasteleyn product") {
    CHECK(oracle::kasteleyn_product(2, 2) == 2);
    CHECK(oracle::kasteleyn_product(2, 3) == 3);
    CHECK(oracle::kasteleyn_product(8, 8) == Natural(12988816));
    for (int m = 1; m <= 8; ++m) {
      for (int n = 1; m * n <= 16; ++n) {
        if ((m * n) % 2) continue;
        REQUIRE(oracle::kasteleyn_product(m, n) == oracle::brute_force_fixed(m, n, {}));
      }
    }
    CHECK_THROWS_AS(oracle::kasteleyn_product(3, 3), std::invalid_argument);
  }

  TEST_CASE("closed forms") {
    CHECK(oracle::aztec_closed_form(1) == 2);
    CHECK(oracle::aztec_closed_form(2) == 8);
    CHECK(oracle::aztec_closed_form(3) == 64);
    CHECK(oracle::delannoy_augmented(1) == 3);
    CHECK(oracle::delannoy_augmented(2) == 13);
    CHECK(oracle::delannoy_augmented(3) == 63);
    // Central Delannoy numbers satisfy n D(n) = 3(2n-1) D(n-1) - (n-1) D(n-2).
    for (int n = 3; n <= 20; ++n) {
      CHECK(Natural(n) * oracle::delannoy_augmented(n) ==
            Natural(3 * (2 * n - 1)) * oracle::delannoy_augmented(n - 1) -
                Natural(n - 1) * oracle::delannoy_augmented(n - 2));
    }
    CHECK_THROWS_AS(oracle::aztec_closed_form(0), std::invalid_argument);
  }

  TEST_CASE("enumeration limits and malformed triples") {
    CHECK_THROWS_AS(oracle::brute_force_partition(5, 5), ResourceLimitError);
    CHECK_THROWS_AS(oracle::enumerate_mosaics(2, 2, BoundaryTriple{"a", "aa", "aa"}), std::invalid_argument);
    CHECK_THROWS_AS(oracle::enumerate_mosaics(1, 1, BoundaryTriple{"a", "c", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(oracle::brute_force_fixed(2, 2, {{3, 1}}), std::out_of_range);
    Limits wide;
    wide.max_enumeration_cells = 25;
    CHECK(oracle::brute_force_fixed(5, 5, {{1, 1}}, wide) == 192);
  }
}
