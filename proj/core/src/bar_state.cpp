#include "mdenum/bar_state.hpp"

#include <stdexcept>
#include <string>

#include "mdenum/errors.hpp"

namespace mdenum {

namespace {

void check_length(int length) {
  if (length < 1 || length > kMaxStateLength) {
    throw std::invalid_argument("bar state length must lie in [1, " +
                                std::to_string(kMaxStateLength) + "], got " +
                                std::to_string(length));
  }
}

void check_orders(int m, int r, int s) {
  check_length(m);
  if (r < 1 || s < 1) throw std::invalid_argument("corner orders must be >= 1");
  if (r + s > m + 2) {
    throw std::invalid_argument("corner orders violate r+s <= m+2 (r=" + std::to_string(r) +
                                ", s=" + std::to_string(s) + ", m=" + std::to_string(m) + ")");
  }
}

__extension__ typedef unsigned __int128 Wide;

// 2^(e+1); exponents in the closed form never drop below -1.
Wide twice_pow2(int e) { return Wide{1} << (e + 1); }

}  // namespace

BarState::BarState(int length, std::uint64_t bits) : length_(length), bits_(bits) {
  check_length(length);
  if (length < 64 && bits >> length != 0) {
    throw std::out_of_range("bar state bits exceed word length");
  }
}

BarState BarState::from_word(std::string_view word) {
  check_length(static_cast<int>(word.size()));
  std::uint64_t bits = 0;
  for (char c : word) {
    if (c != 'a' && c != 'b') {
      throw std::invalid_argument(std::string("bar state letter must be 'a' or 'b', got '") + c + "'");
    }
    bits = (bits << 1) | (c == 'b' ? 1u : 0u);
  }
  return BarState(static_cast<int>(word.size()), bits);
}

BarState BarState::from_index(int length, std::uint64_t index) {
  check_length(length);
  if (index < 1 || index > (std::uint64_t{1} << length)) {
    throw std::out_of_range("state index " + std::to_string(index) + " outside [1, 2^" +
                            std::to_string(length) + "]");
  }
  return BarState(length, index - 1);
}

std::string BarState::word() const {
  std::string w(static_cast<std::size_t>(length_), 'a');
  for (int t = 0; t < length_; ++t) {
    if ((bits_ >> (length_ - 1 - t)) & 1u) w[static_cast<std::size_t>(t)] = 'b';
  }
  return w;
}

bool BarState::column_is_b(int column) const {
  if (column < 1 || column > length_) throw std::out_of_range("column outside bar");
  return (bits_ >> (column - 1)) & 1u;
}

std::uint64_t index_of_state(std::string_view word) { return BarState::from_word(word).index(); }

std::string state_of_index(int length, std::uint64_t index) {
  return BarState::from_index(length, index).word();
}

std::uint64_t b_index_closed_form(int m, int r, int s) {
  check_orders(m, r, s);
  // 12*b = 4*(2^(m-r+2[r/2]) - 2^(m-r))*2 + 2*(2^s - 2^(s-2[s/2]))*2 + 12,
  // scaled once more by two so that the exponent -1 (r = m+1) stays integral.
  const int hr = r / 2;
  const int hs = s / 2;
  const Wide first = 4 * (twice_pow2(m - r + 2 * hr) - twice_pow2(m - r));
  const Wide second = 2 * (twice_pow2(s) - twice_pow2(s - 2 * hs));
  const Wide scaled = first + second + 12;
  if (scaled % 12 != 0) throw CrossCheckError("b_m(r,s) closed form is not integral");
  return static_cast<std::uint64_t>(scaled / 12);
}

std::uint64_t b_index_power_sum(int m, int r, int s) {
  check_orders(m, r, s);
  std::uint64_t value = 1;
  if (r >= 2) {
    for (int e = m - r + 1; e <= m - 1; e += 2) value += std::uint64_t{1} << e;
  }
  if (s >= 2) {
    for (int e = s - 2; e >= 0; e -= 2) value += std::uint64_t{1} << e;
  }
  return value;
}

std::uint64_t b_index(int m, int r, int s) {
  const std::uint64_t closed = b_index_closed_form(m, r, s);
  const std::uint64_t sum = b_index_power_sum(m, r, s);
  if (closed != sum) {
    throw CrossCheckError("b_m(r,s) closed form " + std::to_string(closed) +
                          " disagrees with power sum " + std::to_string(sum));
  }
  return closed;
}

std::string boundary_word(int m, int r, int s) {
  check_orders(m, r, s);
  std::string w;
  w.reserve(static_cast<std::size_t>(m));
  for (int t = 0; t < r - 1; ++t) w += ((r - 2 - t) % 2 == 0) ? 'b' : 'a';
  w.append(static_cast<std::size_t>(m - r - s + 2), 'a');
  for (int u = 0; u < s - 1; ++u) w += (u % 2 == 0) ? 'b' : 'a';
  return w;
}

}  // namespace mdenum
