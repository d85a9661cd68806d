#include "gpd/normal_order.hpp"

#include <utility>

#include "gpd/errors.hpp"
#include "gpd/oscillator.hpp"

namespace gpd::osc {

FormalOperatorSum operator*(const FormalOperatorSum& a, const FormalOperatorSum& b) {
  FormalOperatorSum out;
  for (const auto& [u, cu] : a.terms)
    for (const auto& [v, cv] : b.terms) out.terms[u + v] += cu * cv;
  return out;
}

FormalOperatorSum operator+(const FormalOperatorSum& a, const FormalOperatorSum& b) {
  FormalOperatorSum out = a;
  for (const auto& [v, cv] : b.terms) out.terms[v] += cv;
  return out;
}

std::uint64_t binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

FormalOperatorSum normal_order(std::uint32_t n) {
  FormalOperatorSum out;
  for (std::uint32_t j = 0; j <= n; ++j)
    out.terms[std::string(j, 'c') + std::string(n - j, 'a')] = binomial(n, j);
  return out;
}

std::string word_display(const std::string& word) {
  if (word.empty()) return "1";
  std::string out;
  for (char ch : word) out += (ch == 'c') ? "a*" : "a";
  return out;
}

LadderRealizer::LadderRealizer(std::uint32_t max_size, SpanOptions options)
    : max_size_(max_size), options_(options) {
  // Left to themselves the composites would go through literal pullbacks
  // whose apexes are never skeletal, locking the rest of the chain out of
  // the orbit-reduced path. Every apex built here is skeletal, so default to
  // staying reduced the whole way.
  if (options_.strategy == SpanOptions::Strategy::automatic)
    options_.strategy = SpanOptions::Strategy::reduced;
  memo_[""] = identity_span(fin_sets(max_size));
  base_ = apex(memo_[""]);
}

const Span& LadderRealizer::word_span(const std::string& word) {
  const auto hit = memo_.find(word);
  if (hit != memo_.end()) return hit->second;
  const char head = word.front();
  if (head != 'a' && head != 'c') throw DomainError("ladder words use only 'a' and 'c'");
  const Span& rest = word_span(word.substr(1));
  Span head_span = (head == 'a') ? annihilation_span(max_size_) : creation_span(max_size_);
  head_span.left.target = base_;
  head_span.right.target = base_;
  return memo_[word] = compose_spans(head_span, rest, options_);
}

Span LadderRealizer::realize(const FormalOperatorSum& sum) {
  bool started = false;
  Span acc;
  for (const auto& [word, coeff] : sum.terms) {
    if (coeff == 0) continue;
    const Span scaled = scale_span(coeff, word_span(word));
    acc = started ? sum_spans(acc, scaled) : scaled;
    started = true;
  }
  if (!started) return scale_span(0, identity_span(base_));
  return acc;
}

}  // namespace gpd::osc
