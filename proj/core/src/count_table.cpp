#include "tcnet/count_table.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "tcnet/exact_counts.hpp"

namespace tcnet {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::formula: return "formula";
    case Provenance::recurrence: return "recurrence";
    case Provenance::brute_force: return "brute_force";
    case Provenance::paper_fixture: return "paper_fixture";
  }
  return "unknown";
}

CountTable::CountTable(int d, int n_min, int n_max, Provenance provenance, const Filler& fill)
    : d_(d), n_min_(n_min), provenance_(provenance) {
  if (d < 2 || n_min < 1 || n_max < n_min) throw std::invalid_argument("bad CountTable range");
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<BigCount> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) row.push_back(fill(n, k));
    rows_.push_back(std::move(row));
  }
}

CountTable::CountTable(int d, int n_min, Provenance provenance, std::vector<std::vector<BigCount>> rows)
    : d_(d), n_min_(n_min), provenance_(provenance), rows_(std::move(rows)) {
  if (d < 2 || n_min < 1 || rows_.empty()) throw std::invalid_argument("bad CountTable range");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != static_cast<std::size_t>(n_min) + i) {
      throw std::invalid_argument("CountTable row n=" + std::to_string(n_min + static_cast<int>(i)) +
                                  " must have exactly n entries");
    }
  }
}

bool CountTable::contains(int n, int k) const { return n >= n_min() && n <= n_max() && k >= 0 && k < n; }

const BigCount& CountTable::at(int n, int k) const {
  if (!contains(n, k)) {
    throw std::out_of_range("CountTable has no entry (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  return rows_[static_cast<std::size_t>(n - n_min_)][static_cast<std::size_t>(k)];
}

const std::vector<BigCount>& CountTable::row(int n) const {
  if (n < n_min() || n > n_max()) throw std::out_of_range("CountTable has no row n=" + std::to_string(n));
  return rows_[static_cast<std::size_t>(n - n_min_)];
}

BigCount CountTable::row_total(int n) const {
  BigCount sum = 0;
  for (const auto& v : row(n)) sum += v;
  return sum;
}

std::string CountTable::to_csv() const {
  std::ostringstream os;
  os << "n,k,count\n";
  for (int n = n_min(); n <= n_max(); ++n) {
    for (int k = 0; k < n; ++k) os << n << ',' << k << ',' << at(n, k) << '\n';
  }
  return os.str();
}

std::string CountTable::to_json() const {
  nlohmann::ordered_json j;
  j["d"] = d_;
  auto entries = nlohmann::ordered_json::array();
  for (int n = n_min(); n <= n_max(); ++n) {
    for (int k = 0; k < n; ++k) {
      nlohmann::ordered_json e;
      e["n"] = n;
      e["k"] = k;
      e["count"] = at(n, k).to_string();
      entries.push_back(std::move(e));
    }
  }
  j["entries"] = std::move(entries);
  return j.dump();
}

CountTable CountTable::from_json(std::string_view text, Provenance provenance) {
  const auto j = nlohmann::json::parse(text);
  const int d = j.at("d").get<int>();
  std::map<int, std::map<int, BigCount>> grid;
  for (const auto& e : j.at("entries")) {
    grid[e.at("n").get<int>()][e.at("k").get<int>()] = BigCount::from_string(e.at("count").get<std::string>());
  }
  if (grid.empty()) throw std::invalid_argument("CountTable JSON has no entries");
  const int n_min = grid.begin()->first;
  std::vector<std::vector<BigCount>> rows;
  for (int n = n_min; n <= grid.rbegin()->first; ++n) {
    auto it = grid.find(n);
    if (it == grid.end()) throw std::invalid_argument("CountTable JSON is missing row n=" + std::to_string(n));
    std::vector<BigCount> row;
    for (int k = 0; k < n; ++k) {
      auto kt = it->second.find(k);
      if (kt == it->second.end()) {
        throw std::invalid_argument("CountTable JSON is missing entry n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k));
      }
      row.push_back(kt->second);
    }
    if (it->second.size() != row.size()) throw std::invalid_argument("CountTable JSON has k outside 0..n-1");
    rows.push_back(std::move(row));
  }
  return CountTable(d, n_min, provenance, std::move(rows));
}

CountTable otc_table(int d, int n_min, int n_max) {
  return CountTable(d, n_min, n_max, Provenance::formula,
                    [d](int n, int k) { return counts::otc_count({d, n, k}); });
}

}  // namespace tcnet
