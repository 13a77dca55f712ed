#include "mapenum/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mapenum {

Permutation::Permutation(std::vector<Letter> images) : images_(std::move(images)) {
  const std::size_t n = images_.size();
  std::vector<bool> seen(n, false);
  for (Letter y : images_) {
    if (y >= n || seen[y])
      throw std::invalid_argument("Permutation: image sequence is not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Letter> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Letter>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<Letter>>& cycles) {
  std::vector<Letter> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Letter>(i);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    if (cycle.empty()) throw std::invalid_argument("from_cycles: empty cycle");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Letter a = cycle[i];
      Letter b = cycle[(i + 1) % cycle.size()];
      if (a >= n || used[a])
        throw std::invalid_argument("from_cycles: letter out of range or repeated");
      used[a] = true;
      images[a] = b;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Letter> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Letter>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::is_fixed_point_free_involution() const {
  const std::size_t n = images_.size();
  for (Letter x = 0; x < n; ++x) {
    Letter y = images_[x];
    if (y == x || images_[y] != x) return false;
  }
  return n > 0;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size())
    throw std::invalid_argument("compose: size mismatch");
  std::vector<Letter> images(outer.size());
  for (Letter x = 0; x < outer.size(); ++x) images[x] = outer(inner(x));
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& r) {
  if (p.size() != r.size())
    throw std::invalid_argument("conjugate: size mismatch");
  // (r p r^-1)(r(x)) = r(p(x)) for all x, so fill by image pairs.
  std::vector<Letter> images(p.size());
  for (Letter x = 0; x < p.size(); ++x) images[r(x)] = r(p(x));
  return Permutation(std::move(images));
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition out;
  const std::size_t n = p.size();
  std::vector<bool> visited(n, false);
  for (Letter start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<Letter> cycle;
    Letter x = start;
    do {
      visited[x] = true;
      cycle.push_back(x);
      x = p(x);
    } while (x != start);
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::size_t cycle_count(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<bool> visited(n, false);
  std::size_t count = 0;
  for (Letter start = 0; start < n; ++start) {
    if (visited[start]) continue;
    ++count;
    for (Letter x = start; !visited[x]; x = p(x)) visited[x] = true;
  }
  return count;
}

std::vector<std::size_t> CycleDecomposition::cycle_type() const {
  std::vector<std::size_t> lengths;
  lengths.reserve(cycles.size());
  for (const auto& c : cycles) lengths.push_back(c.size());
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::pair<std::vector<Letter>, Letter> cycle_ids(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<Letter> ids(n, 0);
  std::vector<bool> visited(n, false);
  Letter next_id = 0;
  for (Letter start = 0; start < n; ++start) {
    if (visited[start]) continue;
    for (Letter x = start; !visited[x]; x = p(x)) {
      visited[x] = true;
      ids[x] = next_id;
    }
    ++next_id;
  }
  return {std::move(ids), next_id};
}

bool orbit_is_full(const std::vector<Permutation>& generators,
                   std::size_t n_letters) {
  for (const auto& g : generators)
    if (g.size() != n_letters)
      throw std::invalid_argument("orbit_is_full: generator size mismatch");
  if (n_letters == 0) return true;
  if (generators.empty()) return n_letters == 1;

  std::vector<bool> reached(n_letters, false);
  std::vector<Letter> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Letter x = stack.back();
    stack.pop_back();
    for (const auto& g : generators) {
      Letter y = g(x);
      if (!reached[y]) {
        reached[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n_letters;
}

Permutation parse_cycles(std::string_view text) {
  std::vector<std::vector<Letter>> cycles; // 1-based letters while parsing
  std::size_t i = 0;
  const std::size_t len = text.size();
  auto skip_ws = [&] {
    while (i < len && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == len) throw std::invalid_argument("parse_cycles: empty input");
  while (i < len) {
    if (text[i] != '(')
      throw std::invalid_argument("parse_cycles: expected '('");
    ++i;
    std::vector<Letter> cycle;
    for (;;) {
      skip_ws();
      if (i < len && text[i] == ')') {
        ++i;
        break;
      }
      if (i == len || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("parse_cycles: expected letter or ')'");
      std::uint64_t v = 0;
      while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 0xffffffffull)
          throw std::invalid_argument("parse_cycles: letter too large");
        ++i;
      }
      if (v == 0) throw std::invalid_argument("parse_cycles: letters are 1-based");
      cycle.push_back(static_cast<Letter>(v));
    }
    if (cycle.empty()) throw std::invalid_argument("parse_cycles: empty cycle");
    cycles.push_back(std::move(cycle));
    skip_ws();
  }

  Letter max_letter = 0;
  for (const auto& c : cycles)
    for (Letter v : c) max_letter = std::max(max_letter, v);
  std::vector<std::vector<Letter>> zero_based;
  zero_based.reserve(cycles.size());
  for (auto& c : cycles) {
    for (Letter& v : c) --v;
    zero_based.push_back(std::move(c));
  }
  // Canonical text covers every letter exactly once (fixed points included).
  std::vector<bool> seen(max_letter, false);
  for (const auto& c : zero_based)
    for (Letter v : c) {
      if (seen[v]) throw std::invalid_argument("parse_cycles: repeated letter");
      seen[v] = true;
    }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("parse_cycles: missing letter");
  return Permutation::from_cycles(max_letter, zero_based);
}

std::string to_cycle_string(const Permutation& p) {
  auto decomposition = cycle_decomposition(p);
  std::ostringstream out;
  for (const auto& cycle : decomposition.cycles) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << ' ';
      out << cycle[i] + 1;
    }
    out << ')';
  }
  return out.str();
}

} // namespace mapenum
