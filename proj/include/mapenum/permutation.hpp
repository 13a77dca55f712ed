#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mapenum {

using Letter = std::uint32_t;

// Bijection on the letters {0..n-1}. All in-memory letters are 0-based;
// cycle-notation text is 1-based.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<Letter> images);

  static Permutation identity(std::size_t n);
  // Cycles given as 0-based letters; letters not mentioned are fixed.
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<Letter>>& cycles);

  std::size_t size() const { return images_.size(); }
  Letter operator()(Letter x) const { return images_[x]; }
  std::span<const Letter> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_fixed_point_free_involution() const;

  bool operator==(const Permutation&) const = default;

private:
  std::vector<Letter> images_;
};

// result(x) = outer(inner(x)): inner applied first.
Permutation compose(const Permutation& outer, const Permutation& inner);

// r * p * r^-1; preserves cycle type.
Permutation conjugate(const Permutation& p, const Permutation& r);

// Canonical form: every cycle rotated so its smallest letter leads, cycles
// sorted by smallest letter, fixed points kept as 1-cycles.
struct CycleDecomposition {
  std::vector<std::vector<Letter>> cycles;

  std::size_t cycle_count() const { return cycles.size(); }
  std::vector<std::size_t> cycle_type() const; // lengths, descending
};

CycleDecomposition cycle_decomposition(const Permutation& p);
std::size_t cycle_count(const Permutation& p);

// cycle id per letter plus the number of cycles; ids are assigned in
// ascending order of each cycle's smallest letter.
std::pair<std::vector<Letter>, Letter> cycle_ids(const Permutation& p);

// True iff the group generated acts transitively on {0..n-1}; computed as the
// forward-reachability closure of letter 0 (generators are bijections, so the
// closure is the group orbit).
bool orbit_is_full(const std::vector<Permutation>& generators,
                   std::size_t n_letters);

// Text form "(1 2 3)(4 5 6)": 1-based, canonical cycle order, fixed points
// printed as "(k)". parse_cycles and to_cycle_string round-trip exactly.
Permutation parse_cycles(std::string_view text);
std::string to_cycle_string(const Permutation& p);

} // namespace mapenum
