#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tcnet/bigcount.hpp"

namespace tcnet {

enum class Provenance { formula, recurrence, brute_force, paper_fixture };

std::string_view to_string(Provenance p);

/// Triangular (n, k) -> count grid for a fixed multiplicity d.
///
/// Every row n in [n_min, n_max] holds exactly the entries k = 0..n-1.
class CountTable {
 public:
  using Filler = std::function<BigCount(int n, int k)>;

  CountTable(int d, int n_min, int n_max, Provenance provenance, const Filler& fill);
  /// Builds from explicit rows; rows[i] belongs to n = n_min + i and must have n entries.
  CountTable(int d, int n_min, Provenance provenance, std::vector<std::vector<BigCount>> rows);

  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] int n_min() const { return n_min_; }
  [[nodiscard]] int n_max() const { return n_min_ + static_cast<int>(rows_.size()) - 1; }
  [[nodiscard]] Provenance provenance() const { return provenance_; }

  [[nodiscard]] bool contains(int n, int k) const;
  /// Throws std::out_of_range outside the declared triangle.
  [[nodiscard]] const BigCount& at(int n, int k) const;
  [[nodiscard]] const std::vector<BigCount>& row(int n) const;
  [[nodiscard]] BigCount row_total(int n) const;

  /// `n,k,count` with a header line.
  [[nodiscard]] std::string to_csv() const;
  /// {"d":2,"entries":[{"n":4,"k":3,"count":"2544"},...]}; counts are decimal strings.
  [[nodiscard]] std::string to_json() const;
  static CountTable from_json(std::string_view text, Provenance provenance);

 private:
  int d_;
  int n_min_;
  Provenance provenance_;
  std::vector<std::vector<BigCount>> rows_;
};

/// The embedded reference tables TC^(d)_{n,k} for d in {2,...,6}.
/// Throws std::invalid_argument for any other d.
const CountTable& appendix_table(int d);

/// One-component counts from the closed form, rows n_min..n_max.
CountTable otc_table(int d, int n_min, int n_max);

}  // namespace tcnet
