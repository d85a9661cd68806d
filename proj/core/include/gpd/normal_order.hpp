#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gpd/span.hpp"

namespace gpd::osc {

// Formal sum of ladder words with nonnegative integer coefficients. A word
// is a string over 'a' (lower the size) and 'c' (raise it), the leftmost
// letter acting last; the empty word is the identity.
struct FormalOperatorSum {
  std::map<std::string, std::uint64_t> terms;

  bool operator==(const FormalOperatorSum&) const = default;
};

// Concatenates words pairwise and convolves coefficients; the left factor
// ends up acting after the right one.
FormalOperatorSum operator*(const FormalOperatorSum& a, const FormalOperatorSum& b);
FormalOperatorSum operator+(const FormalOperatorSum& a, const FormalOperatorSum& b);

std::uint64_t binomial(std::uint32_t n, std::uint32_t k);

// The n-th power of (lower + raise) with every raise moved left of every
// lower as if they commuted: binom(n, j) on raise^j lower^(n-j).
FormalOperatorSum normal_order(std::uint32_t n);

// "ccaa" -> "a*a*aa"; the empty word prints as "1".
std::string word_display(const std::string& word);

// Turns ladder words over fin_sets(max_size) into spans, memoizing shared
// suffixes, and formal sums into sums of scaled word spans. An automatic
// strategy is upgraded to reduced composition so long chains keep skeletal
// apexes at every step.
class LadderRealizer {
 public:
  explicit LadderRealizer(std::uint32_t max_size, SpanOptions options = {});

  GroupoidPtr base() const { return base_; }

  // Throws DomainError on letters outside {'a', 'c'}.
  const Span& word_span(const std::string& word);

  Span realize(const FormalOperatorSum& sum);

 private:
  std::uint32_t max_size_;
  SpanOptions options_;
  GroupoidPtr base_;
  std::map<std::string, Span> memo_;
};

}  // namespace gpd::osc
