#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tcnet/count_table.hpp"

namespace tcnet {

namespace {

// TC^(d)_{n,k}, rows n = 2, 3, ...; row n lists k = 0..n-1.
// Transcribed from the published reference tables; never regenerate.
using Rows = std::vector<std::vector<std::string_view>>;

const Rows kTableD2 = {
    {"1", "2"},
    {"3", "21", "42"},
    {"15", "228", "1272", "2544"},
    {"105", "2805", "30300", "154500", "309000"},
    {"945", "39330", "696600", "6494400", "31534200", "63068400"},
    {"10395", "623385", "16418430", "241204950", "2068516800", "9737380800", "19474761600"},
    {"135135", "11055240", "405755280", "8609378400", "113376463200", "920900131200", "4242782275200",
     "8485564550400"},
};

const Rows kTableD3 = {
    {"1", "2"},
    {"3", "33", "150"},
    {"15", "492", "7908", "55320"},
    {"105", "7725", "291420", "6179940", "57939000"},
    {"945", "132030", "9603270", "430105320", "11292075000", "132120450000"},
    {"10395", "2471805", "307525050", "24586633890", "1284266876760", "40079165452200", "560319972030000"},
};

const Rows kTableD4 = {
    {"1", "2"},
    {"3", "48", "546"},
    {"15", "942", "45132", "1243704"},
    {"105", "18375", "2394360", "227116260", "11351644920"},
    {"945", "375705", "107314200", "23919407460", "3724353682560", "291451508298720"},
};

const Rows kTableD5 = {
    {"1", "2"},
    {"3", "66", "2016"},
    {"15", "1650", "242496", "28710864"},
    {"105", "39135", "17566470", "7876446840", "2307919133520"},
};

const Rows kTableD6 = {
    {"1", "2"},
    {"3", "87", "7524"},
    {"15", "2700", "1246740", "676431360"},
    {"105", "76515", "118491090", "262058953860", "483098464854720"},
};

CountTable build(int d, const Rows& rows) {
  std::vector<std::vector<BigCount>> out;
  for (const auto& r : rows) {
    std::vector<BigCount> row;
    for (auto cell : r) row.push_back(BigCount::from_string(cell));
    out.push_back(std::move(row));
  }
  return CountTable(d, 2, Provenance::paper_fixture, std::move(out));
}

}  // namespace

const CountTable& appendix_table(int d) {
  static const std::array<CountTable, 5> tables = {
      build(2, kTableD2), build(3, kTableD3), build(4, kTableD4), build(5, kTableD5), build(6, kTableD6),
  };
  if (d < 2 || d > 6) throw std::invalid_argument("no reference table for d=" + std::to_string(d));
  return tables[static_cast<std::size_t>(d - 2)];
}

}  // namespace tcnet
