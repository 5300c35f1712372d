#include "mdenum/region.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace mdenum {

std::string to_string(const Site& site) {
  return "(" + std::to_string(site.column) + "," + std::to_string(site.row) + ")";
}

bool RegionSpec::contains(const Site& site) const {
  const int c = site.column;
  const int j = site.row;
  if (c < 1 || c > m || j < 1 || j > n) return false;
  // Distance from each corner along both legs; a removed triangle with legs
  // k-1 holds the cells whose distance sum is at most k-2.
  const int left = c - 1;
  const int right = m - c;
  const int bottom = j - 1;
  const int top = n - j;
  if (left + top <= p - 2) return false;
  if (right + top <= q - 2) return false;
  if (right + bottom <= r - 2) return false;
  if (left + bottom <= s - 2) return false;
  return true;
}

long long RegionSpec::area() const {
  auto tri = [](long long k) { return (k * k - k) / 2; };
  return static_cast<long long>(m) * n - tri(p) - tri(q) - tri(r) - tri(s);
}

void validate_sites(int m, int n, const std::vector<Site>& sites) {
  std::set<Site> seen;
  for (const auto& site : sites) {
    if (site.column < 1 || site.column > m || site.row < 1 || site.row > n) {
      throw std::out_of_range("site " + to_string(site) + " lies outside the " + std::to_string(m) + "x" +
                              std::to_string(n) + " grid");
    }
    if (!seen.insert(site).second) throw std::out_of_range("site " + to_string(site) + " listed twice");
  }
}

void RegionSpec::validate() const {
  if (m < 1 || n < 1) throw std::invalid_argument("grid dimensions must be >= 1");
  if (p < 1 || q < 1 || r < 1 || s < 1) throw std::invalid_argument("corner orders must be >= 1");
  if (p + q > m + 2) throw std::invalid_argument("top corner orders violate p+q <= m+2");
  if (r + s > m + 2) throw std::invalid_argument("bottom corner orders violate r+s <= m+2");
  if (p + s > n + 2) throw std::invalid_argument("left corner orders violate p+s <= n+2");
  if (q + r > n + 2) throw std::invalid_argument("right corner orders violate q+r <= n+2");
  validate_sites(m, n, sites);
  for (const auto& site : sites) {
    if (!contains(site)) throw std::out_of_range("site " + to_string(site) + " lies inside a removed corner");
  }
}

}  // namespace mdenum
