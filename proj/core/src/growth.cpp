#include "mdenum/growth.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mdenum/counting.hpp"

namespace mdenum {

namespace {

const mpfr_prec_t kGrowthBits = BigFloat::bits_for_digits(kGrowthDigits);

// Printed digits of a root; comfortably above the 20 significant digits the
// table promises, and well inside the working precision.
constexpr int kPrintDigits = 25;

std::string digits_of(const Natural& value) { return std::to_string(value.get_str().size()); }

}  // namespace

GrowthTable::GrowthTable(GrowthMode mode) : mode_(mode), sup_(kGrowthBits) {}

void GrowthTable::add(int m, int n, Natural value) {
  if (m < 1 || n < 1) throw std::invalid_argument("growth table sizes must be >= 1");
  if (value < 0) throw std::invalid_argument("growth table values must be nonnegative");
  if (index_.count({m, n})) throw std::invalid_argument("growth table already holds this size");
  BigFloat root(kGrowthBits);
  if (value > 0) {
    root = BigFloat(kGrowthBits, value).root(static_cast<unsigned long>(m) * static_cast<unsigned long>(n));
  }
  if (sup_ < root) sup_ = root;
  index_[{m, n}] = entries_.size();
  entries_.push_back(GrowthEntry{m, n, std::move(value), root, sup_});
}

const Natural* GrowthTable::value(int m, int n) const {
  auto it = index_.find({m, n});
  return it == index_.end() ? nullptr : &entries_[it->second].value;
}

std::map<std::pair<int, int>, Natural> GrowthTable::values() const {
  std::map<std::pair<int, int>, Natural> out;
  for (const auto& e : entries_) out[{e.m, e.n}] = e.value;
  return out;
}

std::string GrowthTable::to_csv() const {
  std::ostringstream out;
  out << "m,n,exact_count_digits,per_site_root,running_sup\n";
  for (const auto& e : entries_) {
    out << e.m << ',' << e.n << ',' << digits_of(e.value) << ',' << e.per_site_root.to_string(kPrintDigits) << ','
        << e.running_sup.to_string(kPrintDigits) << '\n';
  }
  return out.str();
}

std::string GrowthTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries_) {
    rows.push_back({{"m", e.m},
                    {"n", e.n},
                    {"exact_count", e.value.get_str()},
                    {"exact_count_digits", e.value.get_str().size()},
                    {"per_site_root", e.per_site_root.to_string(kPrintDigits)},
                    {"running_sup", e.running_sup.to_string(kPrintDigits)}});
  }
  nlohmann::json doc = {{"mode", mode_ == GrowthMode::Hosoya ? "hosoya" : "pure-dimer"},
                        {"running_sup", sup_.to_string(kPrintDigits)},
                        {"entries", rows}};
  return doc.dump();
}

GrowthTable growth_estimate(int max_m, int max_n, GrowthMode mode, const Limits& limits) {
  if (max_m < 1 || max_n < 1) throw std::invalid_argument("growth window must be at least 1x1");
  GrowthTable table(mode);
  const auto weights = mode == GrowthMode::Hosoya ? numeric_weights(1, 1, 1) : pure_dimer_weights();
  for (int m = 1; m <= max_m; ++m) {
    auto series = corner_series(m, max_n, weights, limits);
    for (int n = 1; n <= max_n; ++n) table.add(m, n, std::move(series[static_cast<std::size_t>(n - 1)]));
  }
  return table;
}

std::string FeketeViolation::describe() const {
  std::ostringstream out;
  out << (row_axis ? "row split m1=" : "column split n1=") << first << (row_axis ? ", m2=" : ", n2=") << second
      << (row_axis ? " at n=" : " at m=") << fixed;
  return out.str();
}

std::vector<FeketeViolation> fekete_verify(const std::map<std::pair<int, int>, Natural>& sequence, int k,
                                           FeketeDirection direction) {
  if (k < 0) throw std::invalid_argument("Fekete offset k must be nonnegative");
  for (const auto& [key, value] : sequence) {
    if (value < 1) throw std::invalid_argument("Fekete sequences need values >= 1");
  }
  auto get = [&](int m, int n) -> const Natural* {
    auto it = sequence.find({m, n});
    return it == sequence.end() ? nullptr : &it->second;
  };
  std::vector<FeketeViolation> violations;
  // Both axes share the same check after swapping coordinates.
  for (bool row_axis : {true, false}) {
    auto at = [&](int split, int fixed) { return row_axis ? get(split, fixed) : get(fixed, split); };
    int max_split = 0;
    int max_fixed = 0;
    for (const auto& [key, value] : sequence) {
      max_split = std::max(max_split, row_axis ? key.first : key.second);
      max_fixed = std::max(max_fixed, row_axis ? key.second : key.first);
    }
    for (int fixed = 1; fixed <= max_fixed; ++fixed) {
      for (int a = 1; a <= max_split; ++a) {
        for (int b = 1; b <= max_split; ++b) {
          bool ok = true;
          bool present = false;
          if (direction == FeketeDirection::Super) {
            const Natural* lhs1 = at(a, fixed);
            const Natural* lhs2 = at(b, fixed);
            const Natural* rhs = at(a + b + k, fixed);
            present = lhs1 && lhs2 && rhs;
            if (present) ok = (*lhs1) * (*lhs2) <= *rhs;
          } else {
            const Natural* lhs = at(a + b, fixed);
            const Natural* rhs1 = at(a + k, fixed);
            const Natural* rhs2 = at(b, fixed);
            present = lhs && rhs1 && rhs2;
            if (present) ok = *lhs <= (*rhs1) * (*rhs2);
          }
          if (present && !ok) violations.push_back(FeketeViolation{row_axis, a, b, fixed});
        }
      }
    }
  }
  return violations;
}

}  // namespace mdenum
