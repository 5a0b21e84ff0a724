#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thoma/permutation.hpp"
#include "thoma/sparse_tensor.hpp"

namespace thoma {

/// The four spherical pairs built from affine isometric actions.
///
///   A: G = S x S acting on l2 (x) l2, K the diagonal,
///      eta = s * sum_j e_j (x) e_j.
///   B: G = S(N+ u N-) acting on each factor of H (x) H, K the hyperoctahedral
///      subgroup, eta = s * sum_j (e_j+ (x) e_j- + e_j- (x) e_j+).
///   C: same G, K the subgroup preserving ordered pairs (j+, j-),
///      eta = s * sum_j e_j+ (x) e_j- + t * sum_j e_j- (x) e_j+.
///   D: G = S x S x S acting on l2 (x) l2 (x) l2, K the diagonal,
///      eta = s * sum_j e_j (x) e_j (x) e_j.
enum class PairKind { A, B, C, D };

std::string to_string(PairKind kind);
PairKind parse_pair_kind(std::string_view text);

class PairSpec {
 public:
  /// s > 0 always; t is required for kind C and rejected otherwise.
  static PairSpec make(PairKind kind, double s, std::optional<double> t = std::nullopt);

  PairKind kind() const noexcept { return kind_; }
  double s() const noexcept { return s_; }
  double t() const noexcept { return t_; }

  /// Tensor arity of the ambient space: 3 for D, 2 otherwise.
  std::size_t arity() const noexcept;
  /// Number of permutations in a group element: 2 for A, 1 for B/C, 3 for D.
  std::size_t components() const noexcept;
  Regime regime() const noexcept;

 private:
  PairSpec(PairKind kind, double s, double t) : kind_(kind), s_(s), t_(t) {}

  PairKind kind_;
  double s_;
  double t_;
};

/// A tuple of permutations, multiplied componentwise.
struct GroupElement {
  std::vector<Permutation> parts;

  std::string to_string() const;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Permutations joined by '|', e.g. "(1 2)|e" or "(1+ 2+)(1- 2-)".
GroupElement parse_group_element(std::string_view text);

GroupElement identity_element(std::size_t components);
GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);

/// Throws std::invalid_argument unless g has the shape and tag regime of pair.
void check_shape(const PairSpec& pair, const GroupElement& g);

/// The j-th summand of the (never materialised) pattern vector eta, with
/// coefficients in the formal symbols s and t.
SparseTensor pattern_term(PairKind kind, std::uint32_t j);

/// U(g) applied to a tensor of the pair's ambient space.
SparseTensor act(const PairSpec& pair, const GroupElement& g, const SparseTensor& x);

/// The cocycle Xi(g) = U(g) eta - eta, summed over the finitely many pattern
/// terms that g can move; everything else cancels.
SparseTensor xi(const PairSpec& pair, const GroupElement& g);

/// Membership in the pair's subgroup K.
bool in_subgroup(const PairSpec& pair, const GroupElement& g);

/// Xi(g1 g2) - U(g1) Xi(g2) - Xi(g1). Zero for a genuine cocycle.
SparseTensor check_cocycle(const PairSpec& pair, const GroupElement& g1, const GroupElement& g2);

/// exp(-|Xi(g)|^2 / 2) at the pair's numeric s and t.
double spherical(const PairSpec& pair, const GroupElement& g);

/// The affine isometry h -> U(g) h + Xi(g), with the linear part kept as the
/// group element that induces it.
struct AffineAction {
  GroupElement linear;
  SparseTensor shift;

  SparseTensor apply(const PairSpec& pair, const SparseTensor& h) const;
};

AffineAction affine_action(const PairSpec& pair, const GroupElement& g);

/// (A1, v1) o (A2, v2) = (A1 A2, A1 v2 + v1).
AffineAction compose(const PairSpec& pair, const AffineAction& first, const AffineAction& second);

}  // namespace thoma
