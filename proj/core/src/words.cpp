#include "tcnet/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tcnet/errors.hpp"

namespace tcnet::words {

namespace {

// Prefix rule after appending letter x (1-based) with occurrence counts occ.
// Only conditions for letters i <= x can change when occ[x] grows.
std::optional<std::pair<int, int>> violation_after_append(const std::vector<int>& occ, int x, int d) {
  const int n = static_cast<int>(occ.size()) - 1;
  for (int i = 1; i < x; ++i) {
    if (occ[i] > d - 2 && occ[i] < occ[x]) return std::pair{i, x};
  }
  if (occ[x] > d - 2) {
    for (int j = x + 1; j <= n; ++j) {
      if (occ[x] < occ[j]) return std::pair{x, j};
    }
  }
  return std::nullopt;
}

// Backtracking over words with prescribed letter multiplicities.
class WordSearch {
 public:
  WordSearch(int d, std::vector<int> multiplicity, const Budget& budget)
      : d_(d), remaining_(std::move(multiplicity)), occ_(remaining_.size(), 0), budget_(budget) {
    for (std::size_t i = 1; i < remaining_.size(); ++i) length_ += static_cast<std::size_t>(remaining_[i]);
    if (length_ > budget_.max_length) {
      throw BudgetExceeded("word length " + std::to_string(length_) + " exceeds budget " +
                           std::to_string(budget_.max_length));
    }
    current_.reserve(length_);
  }

  void run(const std::function<void(const std::vector<int>&)>& sink) { recurse(sink); }

 private:
  void recurse(const std::function<void(const std::vector<int>&)>& sink) {
    if (++visited_ > budget_.max_nodes) {
      throw BudgetExceeded("word enumeration visited more than " + std::to_string(budget_.max_nodes) + " states");
    }
    if (current_.size() == length_) {
      sink(current_);
      return;
    }
    const int n = static_cast<int>(remaining_.size()) - 1;
    for (int x = 1; x <= n; ++x) {
      if (remaining_[x] == 0) continue;
      --remaining_[x];
      ++occ_[x];
      current_.push_back(x);
      if (!violation_after_append(occ_, x, d_)) recurse(sink);
      current_.pop_back();
      --occ_[x];
      ++remaining_[x];
    }
  }

  int d_;
  std::vector<int> remaining_;
  std::vector<int> occ_;
  std::vector<int> current_;
  std::size_t length_ = 0;
  std::uint64_t visited_ = 0;
  Budget budget_;
};

}  // namespace

Word::Word(int d, std::vector<int> letters) : d_(d), letters_(std::move(letters)) {
  if (d < 2) throw std::invalid_argument("word multiplicity parameter d must be >= 2");
}

Word Word::parse(int d, std::string_view text) {
  std::vector<int> letters;
  if (text.find(',') != std::string_view::npos) {
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw std::invalid_argument("empty letter in word");
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("bad letter '" + item + "'");
      letters.push_back(v);
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument(std::string("bad letter '") + c + "'");
      letters.push_back(c - '0');
    }
  }
  return Word(d, std::move(letters));
}

int Word::alphabet_size() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

std::string Word::to_string() const {
  const bool compact = alphabet_size() <= 9;
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

MembershipResult check_membership(const Word& w) {
  const int n = w.alphabet_size();
  const int d = w.d();
  if (n < 1) return {MembershipStatus::malformed, std::nullopt, "empty word"};
  std::vector<int> total(static_cast<std::size_t>(n) + 1, 0);
  for (int x : w.letters()) {
    if (x < 1) return {MembershipStatus::malformed, std::nullopt, "letter values must be >= 1"};
    ++total[static_cast<std::size_t>(x)];
  }
  for (int i = 1; i <= n; ++i) {
    if (total[static_cast<std::size_t>(i)] != d + 1) {
      return {MembershipStatus::malformed, std::nullopt,
              "letter " + std::to_string(i) + " occurs " + std::to_string(total[static_cast<std::size_t>(i)]) +
                  " times, expected " + std::to_string(d + 1)};
    }
  }
  std::vector<int> occ(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t p = 0; p < w.size(); ++p) {
    const int x = w.letters()[p];
    ++occ[static_cast<std::size_t>(x)];
    if (auto v = violation_after_append(occ, x, d)) {
      return {MembershipStatus::not_member, Violation{p + 1, v->first, v->second}, {}};
    }
  }
  return {MembershipStatus::member, std::nullopt, {}};
}

bool is_member(const Word& w) {
  auto r = check_membership(w);
  if (r.status == MembershipStatus::malformed) throw std::invalid_argument("malformed word: " + r.detail);
  return r.status == MembershipStatus::member;
}

void enumerate_words(int d, int n, const std::function<void(const Word&)>& sink, const Budget& budget) {
  if (d < 2 || n < 1) throw std::invalid_argument("enumerate_words requires d >= 2 and n >= 1");
  std::vector<int> mult(static_cast<std::size_t>(n) + 1, d + 1);
  mult[0] = 0;
  WordSearch search(d, std::move(mult), budget);
  search.run([&](const std::vector<int>& letters) { sink(Word(d, letters)); });
}

std::vector<Word> enumerate_words(int d, int n, const Budget& budget) {
  std::vector<Word> out;
  enumerate_words(d, n, [&](const Word& w) { out.push_back(w); }, budget);
  return out;
}

int suffix_index(const Word& w) {
  if (!is_member(w)) throw std::invalid_argument("suffix_index requires a member of C_n^(d)");
  const auto& L = w.letters();
  const int n = w.alphabet_size();
  const std::size_t len = L.size();
  if (L[len - 1] != n) throw std::logic_error("member word does not end with its largest letter");
  // Walk left over the run omega_{n-1}, omega_{n-2}, ..., omega_m until the opening omega_n.
  int expected = n - 1;
  for (std::size_t pos = len - 1; pos-- > 0;) {
    if (L[pos] == n) return expected + 1;
    if (L[pos] != expected) break;
    --expected;
  }
  throw std::logic_error("member word " + w.to_string() + " has no suffix of the form n m ... n-1 n");
}

BigCount cnk_words_count(int n, int k, const Budget& budget) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("cnk_words_count requires 0 <= k <= n, n >= 1");
  std::vector<int> mult(static_cast<std::size_t>(n) + 1, 2);
  mult[0] = 0;
  for (int i = 1; i <= k; ++i) mult[static_cast<std::size_t>(i)] = 3;
  WordSearch search(2, std::move(mult), budget);
  std::uint64_t count = 0;
  search.run([&](const std::vector<int>&) { ++count; });
  return count;
}

}  // namespace tcnet::words
