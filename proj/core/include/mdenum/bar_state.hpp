#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mdenum {

/// Longest bar state word accepted anywhere in the library.
inline constexpr int kMaxStateLength = 62;

/// A word over {a,b} read off one horizontal boundary of a bar mosaic.
///
/// Letters are read from right to left along the bar, so the first letter
/// belongs to the rightmost column. The first letter is stored as the most
/// significant bit (a = 0, b = 1); consequently bit (k-1) describes column k
/// counted from the left, and the all-a word has index 1.
class BarState {
 public:
  BarState(int length, std::uint64_t bits);

  static BarState from_word(std::string_view word);
  static BarState from_index(int length, std::uint64_t index);

  int length() const { return length_; }
  std::uint64_t bits() const { return bits_; }
  std::uint64_t index() const { return bits_ + 1; }
  std::string word() const;

  /// Letter on column `column` (1-based from the left); true means b.
  bool column_is_b(int column) const;

  friend bool operator==(const BarState&, const BarState&) = default;

 private:
  int length_;
  std::uint64_t bits_;
};

/// 1-based lexicographic rank of a word over {a,b}.
std::uint64_t index_of_state(std::string_view word);

/// Inverse of index_of_state.
std::string state_of_index(int length, std::uint64_t index);

/// Index of the forced boundary state that carves corners of orders r
/// (first letters, right end) and s (last letters, left end) off a bar of
/// length m. Evaluates the closed form and the power-sum form and throws
/// CrossCheckError if they differ.
std::uint64_t b_index(int m, int r, int s);

std::uint64_t b_index_closed_form(int m, int r, int s);
std::uint64_t b_index_power_sum(int m, int r, int s);

/// The boundary word itself: r-1 alternating letters ending in b, then
/// m-r-s+2 letters a, then s-1 alternating letters starting with b.
std::string boundary_word(int m, int r, int s);

}  // namespace mdenum
