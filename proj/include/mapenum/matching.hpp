#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mapenum/permutation.hpp"

namespace mapenum {

using LetterPair = std::pair<Letter, Letter>;

// Fixed-point-free involution on {0..n-1}, stored as the partner of each
// letter.
class Matching {
public:
  explicit Matching(std::vector<Letter> partner);
  static Matching from_pairs(std::size_t n, const std::vector<LetterPair>& pairs);

  std::size_t size() const { return partner_.size(); }
  Letter partner(Letter x) const { return partner_[x]; }
  std::span<const Letter> partners() const { return partner_; }

  // (a, b) with a < b, ascending in a.
  std::vector<LetterPair> pairs() const;
  Permutation to_permutation() const { return Permutation(partner_); }

  bool operator==(const Matching&) const = default;

private:
  std::vector<Letter> partner_;
};

// m!! for odd m (m = 0 and m = 1 give 1); throws OverflowError past 2^64.
std::uint64_t odd_double_factorial_checked(std::uint64_t m);

// Streams every fixed-point-free involution on {0..n-1} exactly once, in the
// canonical order: the smallest unmatched letter pairs with each larger
// unmatched letter in increasing order. Nothing is materialized and nothing
// allocates after construction; the exposed state is overwritten per step.
//
// A prefix of forced pairs restricts the stream to completions of that
// prefix, which is how the enumerators split work across threads.
class MatchingStream {
public:
  explicit MatchingStream(std::size_t n_letters,
                          const std::vector<LetterPair>& prefix = {});

  // Moves to the next matching; the first call produces the first one.
  // Returns false once exhausted.
  bool advance();

  std::size_t n_letters() const { return n_; }
  // partner()[x] is x's partner in the current matching.
  std::span<const Letter> partners() const { return partner_; }
  // All n/2 pairs of the current matching, prefix first, then DFS order.
  std::span<const LetterPair> pairs() const { return {stack_.data(), depth_}; }
  Matching snapshot() const;

  // Number of matchings this stream yields in total.
  std::uint64_t total_count() const;

private:
  void link_out(Letter x);
  void link_in(Letter x);
  void push_pair(Letter a, Letter b);
  bool fill();

  std::size_t n_ = 0;
  std::size_t prefix_len_ = 0;
  std::size_t depth_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::vector<Letter> partner_;
  std::vector<Letter> next_free_; // doubly-linked free list, sentinel at n_
  std::vector<Letter> prev_free_;
  std::vector<LetterPair> stack_;
};

// Disjoint prefixes whose completions partition the full stream on n letters;
// grows the prefix depth until at least min_shards shards exist (or the space
// is too small to split further).
std::vector<std::vector<LetterPair>> matching_shards(std::size_t n_letters,
                                                     std::size_t min_shards);

} // namespace mapenum
