#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcnet/bigcount.hpp"
#include "tcnet/count_table.hpp"

/// Word encodings of maximally reticulated tree-child networks.
///
/// A word over letters 1..n (letter i standing for omega_i) in which every
/// letter occurs exactly d+1 times belongs to the class C_n^(d) iff in every
/// prefix each letter i has occurred at most d-2 times or at least as often
/// as every letter j > i.
namespace tcnet::words {

class Word {
 public:
  Word(int d, std::vector<int> letters);

  /// Parses "112212" (digit per letter) or "1,1,2,2,1,2".
  static Word parse(int d, std::string_view text);

  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] const std::vector<int>& letters() const { return letters_; }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  /// Largest letter value present (the alphabet size for well-formed words).
  [[nodiscard]] int alphabet_size() const;

  /// Digit string when every letter is <= 9, comma-separated integers otherwise.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  int d_;
  std::vector<int> letters_;
};

/// Prefix rule failure: after `prefix_length` letters, letter i has occurred
/// more than d-2 times yet fewer times than letter j > i.
struct Violation {
  std::size_t prefix_length;
  int i;
  int j;
};

enum class MembershipStatus { member, not_member, malformed };

struct MembershipResult {
  MembershipStatus status;
  std::optional<Violation> witness;  ///< set iff status == not_member
  std::string detail;                ///< explanation when malformed
};

/// Full membership check with witness. A word is malformed when its letters
/// are not exactly {1..n} each repeated `multiplicity` times (default d+1).
MembershipResult check_membership(const Word& w);

/// True iff w is in C_n^(d). Throws std::invalid_argument for malformed words.
bool is_member(const Word& w);

struct Budget {
  std::uint64_t max_nodes = 200'000'000;  ///< backtracking states visited
  std::size_t max_length = 24;             ///< n * (d + 1)
};

/// Emits every member of C_n^(d) exactly once, lexicographically.
/// Throws BudgetExceeded when the search exceeds the budget.
void enumerate_words(int d, int n, const std::function<void(const Word&)>& sink, const Budget& budget = {});
std::vector<Word> enumerate_words(int d, int n, const Budget& budget = {});

/// The unique m in 1..n such that w ends with omega_n omega_m ... omega_{n-1} omega_n
/// (the middle run is empty when m = n). Throws std::invalid_argument if w is
/// not a member.
int suffix_index(const Word& w);

/// b^(d)_{n,m} for 1 <= m <= n <= n_max, stored as a dense triangle.
class BTable {
 public:
  BTable(int d, int n_max);

  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] int n_max() const { return n_max_; }
  /// Zero outside 1 <= m <= n; throws std::out_of_range for n outside 1..n_max.
  [[nodiscard]] BigCount at(int n, int m) const;
  void set(int n, int m, BigCount v);
  /// c_n = sum over m of b(n, m).
  [[nodiscard]] BigCount c(int n) const;

  /// Rows n = 1..n_max; k column carries m - 1 so the CountTable schema applies.
  [[nodiscard]] CountTable to_count_table(Provenance provenance) const;

  friend bool operator==(const BTable&, const BTable&) = default;

 private:
  [[nodiscard]] std::size_t index(int n, int m) const;
  int d_;
  int n_max_;
  std::vector<BigCount> cells_;
};

/// Integer-only dynamic program b(n,m) = C(dn+m-2, d-1) * sum_{j<=m} b(n-1,j).
BTable b_table_int(int d, int n_max);

/// The two-term recurrence
///   b(n,m) = (dn+m-2)/(dn+m-d-1) b(n,m-1) + C(dn+m-2, d-1) b(n-1,m)
/// evaluated in exact rationals. Throws IntegralityError if an entry is not integral.
BTable b_table_rational(int d, int n_max);

/// |C_n^(d)|.
BigCount c_count(int d, int n);

/// c_1..c_{n_max} by streaming rows of the integer recurrence; memory is one row.
std::vector<BigCount> c_sequence(int d, int n_max);

/// TC^(d)_{n,n-1} = n! * c_{n-1}. Requires n >= 2.
BigCount tc_max_count(int d, int n);

/// b(n,n) == C((d+1)n-2, d-1) * c_{n-1}.
bool bnn_identity_check(int d, int n);

/// Exploratory (d = 2): number of words in which letters 1..k occur three
/// times and letters k+1..n twice, under the same prefix rule. Other
/// placements of the tripled letters give empty classes.
BigCount cnk_words_count(int n, int k, const Budget& budget = {});

}  // namespace tcnet::words
