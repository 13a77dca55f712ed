#include "mapenum/matching.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "mapenum/errors.hpp"

namespace mapenum {

namespace {
constexpr Letter kUnmatched = std::numeric_limits<Letter>::max();
}

Matching::Matching(std::vector<Letter> partner) : partner_(std::move(partner)) {
  const std::size_t n = partner_.size();
  if (n == 0 || n % 2 != 0)
    throw std::invalid_argument("Matching: letter count must be even and positive");
  for (Letter x = 0; x < n; ++x) {
    Letter y = partner_[x];
    if (y >= n || y == x || partner_[y] != x)
      throw std::invalid_argument("Matching: not a fixed-point-free involution");
  }
}

Matching Matching::from_pairs(std::size_t n, const std::vector<LetterPair>& pairs) {
  std::vector<Letter> partner(n, kUnmatched);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n || a == b || partner[a] != kUnmatched ||
        partner[b] != kUnmatched)
      throw std::invalid_argument("Matching: invalid pair list");
    partner[a] = b;
    partner[b] = a;
  }
  for (Letter x : partner)
    if (x == kUnmatched)
      throw std::invalid_argument("Matching: pair list does not cover all letters");
  return Matching(std::move(partner));
}

std::vector<LetterPair> Matching::pairs() const {
  std::vector<LetterPair> out;
  out.reserve(partner_.size() / 2);
  for (Letter x = 0; x < partner_.size(); ++x)
    if (x < partner_[x]) out.emplace_back(x, partner_[x]);
  return out;
}

std::uint64_t odd_double_factorial_checked(std::uint64_t m) {
  if (m % 2 == 0 && m != 0)
    throw std::invalid_argument("odd_double_factorial: even argument");
  std::uint64_t result = 1;
  for (std::uint64_t f = 3; f <= m; f += 2) {
    if (result > std::numeric_limits<std::uint64_t>::max() / f)
      throw OverflowError("double factorial exceeds 64 bits");
    result *= f;
  }
  return result;
}

MatchingStream::MatchingStream(std::size_t n_letters,
                               const std::vector<LetterPair>& prefix)
    : n_(n_letters) {
  if (n_ < 2 || n_ % 2 != 0)
    throw std::invalid_argument("MatchingStream: need an even letter count >= 2");
  partner_.assign(n_, kUnmatched);
  next_free_.resize(n_ + 1);
  prev_free_.resize(n_ + 1);
  // Circular free list over 0..n-1 with sentinel n_.
  for (Letter x = 0; x <= n_; ++x) {
    next_free_[x] = (x == n_) ? 0 : x + 1;
    prev_free_[x] = (x == 0) ? static_cast<Letter>(n_) : x - 1;
  }
  stack_.resize(n_ / 2);
  for (auto [a, b] : prefix) {
    if (a >= n_ || b >= n_ || a == b || partner_[a] != kUnmatched ||
        partner_[b] != kUnmatched)
      throw std::invalid_argument("MatchingStream: invalid prefix pair");
    push_pair(a, b);
  }
  prefix_len_ = depth_;
}

void MatchingStream::link_out(Letter x) {
  next_free_[prev_free_[x]] = next_free_[x];
  prev_free_[next_free_[x]] = prev_free_[x];
}

void MatchingStream::link_in(Letter x) {
  next_free_[prev_free_[x]] = x;
  prev_free_[next_free_[x]] = x;
}

void MatchingStream::push_pair(Letter a, Letter b) {
  stack_[depth_++] = {a, b};
  partner_[a] = b;
  partner_[b] = a;
  link_out(a);
  link_out(b);
}

bool MatchingStream::fill() {
  const std::size_t target = n_ / 2;
  const Letter sentinel = static_cast<Letter>(n_);
  while (depth_ < target) {
    Letter a = next_free_[sentinel];
    Letter b = next_free_[a];
    push_pair(a, b);
  }
  return true;
}

bool MatchingStream::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return fill();
  }
  const Letter sentinel = static_cast<Letter>(n_);
  while (depth_ > prefix_len_) {
    auto [a, b] = stack_[--depth_];
    // Undo in reverse order of link_out so the stored links stay valid.
    link_in(b);
    link_in(a);
    Letter next_b = next_free_[b];
    if (next_b != sentinel) {
      push_pair(a, next_b);
      return fill();
    }
  }
  done_ = true;
  return false;
}

Matching MatchingStream::snapshot() const {
  if (depth_ != n_ / 2)
    throw std::logic_error("MatchingStream: snapshot of incomplete matching");
  return Matching(partner_);
}

std::uint64_t MatchingStream::total_count() const {
  const std::uint64_t free_letters = n_ - 2 * prefix_len_;
  return free_letters == 0 ? 1 : odd_double_factorial_checked(free_letters - 1);
}

std::vector<std::vector<LetterPair>> matching_shards(std::size_t n_letters,
                                                     std::size_t min_shards) {
  std::vector<std::vector<LetterPair>> shards{{}};
  std::size_t depth = 0;
  while (shards.size() < min_shards) {
    const std::size_t free_count = n_letters - 2 * depth;
    if (free_count < 4) break; // splitting further would not branch
    std::vector<std::vector<LetterPair>> next;
    next.reserve(shards.size() * (free_count - 1));
    for (const auto& shard : shards) {
      std::vector<bool> used(n_letters, false);
      for (auto [a, b] : shard) used[a] = used[b] = true;
      std::vector<Letter> free_letters;
      free_letters.reserve(free_count);
      for (Letter x = 0; x < n_letters; ++x)
        if (!used[x]) free_letters.push_back(x);
      for (std::size_t i = 1; i < free_letters.size(); ++i) {
        auto child = shard;
        child.emplace_back(free_letters[0], free_letters[i]);
        next.push_back(std::move(child));
      }
    }
    shards = std::move(next);
    ++depth;
  }
  return shards;
}

} // namespace mapenum
