#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thoma {

/// Which copy of the natural numbers a label lives in. `plain` labels are the
/// points of a single countable set; `plus`/`minus` are the two halves of a
/// disjoint union N+ ⊔ N-.
enum class LabelTag : std::uint8_t { plain, plus, minus };

/// Tag regime of a permutation's support. Plain and signed labels never mix.
enum class Regime : std::uint8_t { plain, signed_labels };

inline constexpr Regime regime_of(LabelTag tag) noexcept {
  return tag == LabelTag::plain ? Regime::plain : Regime::signed_labels;
}

struct Label {
  std::uint32_t index = 1;  // 1-based
  LabelTag tag = LabelTag::plain;

  static constexpr Label plain(std::uint32_t i) noexcept { return {i, LabelTag::plain}; }
  static constexpr Label plus(std::uint32_t i) noexcept { return {i, LabelTag::plus}; }
  static constexpr Label minus(std::uint32_t i) noexcept { return {i, LabelTag::minus}; }

  constexpr Regime regime() const noexcept { return regime_of(tag); }

  friend constexpr auto operator<=>(const Label&, const Label&) = default;

  std::string to_string() const;
};

/// A bijection of a countable label set that fixes all but finitely many
/// points. Stored canonically: only moved points are kept, so two permutations
/// are equal iff their stored maps are equal.
///
/// Composition convention: (p * q)(x) = p(q(x)).
class Permutation {
 public:
  /// The identity.
  Permutation() = default;

  /// Builds a permutation from an explicit finite map. Fixed points are
  /// dropped. Throws std::invalid_argument if the map is not a bijection of
  /// its key set onto itself or if it mixes plain and signed labels.
  static Permutation from_map(const std::map<Label, Label>& mapping);

  /// Builds the permutation of {1..n} (plain labels) sending i to images[i-1].
  static Permutation from_images(const std::vector<std::uint32_t>& images);

  Label apply(Label x) const;
  Label operator()(Label x) const { return apply(x); }

  bool is_identity() const noexcept { return map_.empty(); }

  /// nullopt for the identity, which is compatible with every regime.
  std::optional<Regime> regime() const noexcept;

  /// Moved points in increasing order.
  std::vector<Label> support() const;

  /// Largest label index among the moved points (0 for the identity).
  std::uint32_t max_index() const noexcept;

  const std::map<Label, Label>& mapping() const noexcept { return map_; }

  /// Cycle notation, e.g. "(1 2 3)(4 5)"; "e" for the identity. Each cycle
  /// starts at its smallest label and cycles are ordered by that label.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::map<Label, Label> map_;
};

/// Parses "e" or a product of parenthesized cycles such as "(1 2 3)(4 5)" or
/// "(1+ 2+)(1- 3-)". Cycles are composed right to left, matching compose().
Permutation parse_permutation(std::string_view text);

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// Lengths of the nontrivial cycles, in decreasing order.
std::vector<int> cycle_type(const Permutation& p);

/// Number of labels x with sigma(x) != tau(x).
std::size_t moved_count(const Permutation& sigma, const Permutation& tau);

/// +1 or -1: (-1)^(sum over cycles of (length - 1)).
int sign(const Permutation& p);

/// All permutations of the plain labels {1..n}, in lexicographic order of
/// their image sequences.
std::vector<Permutation> all_permutations(std::uint32_t n);

}  // namespace thoma
