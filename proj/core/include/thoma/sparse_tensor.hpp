#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "thoma/permutation.hpp"
#include "thoma/rational.hpp"

namespace thoma {

/// The formal linear form a*s + b*t with rational weights. The symbols s and
/// t stay symbolic; numeric values only enter through QuadraticNorm::evaluate.
struct Coefficient {
  Rational s;
  Rational t;

  static Coefficient of_s(Rational a = 1) { return {std::move(a), 0}; }
  static Coefficient of_t(Rational b = 1) { return {0, std::move(b)}; }

  bool is_zero() const { return s == 0 && t == 0; }

  Coefficient& operator+=(const Coefficient& o) {
    s += o.s;
    t += o.t;
    return *this;
  }
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(const Coefficient& a) { return {-a.s, -a.t}; }
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }
  friend bool operator==(const Coefficient&, const Coefficient&) = default;

  std::string to_string() const;
};

/// ss*s^2 + st*s*t + tt*t^2
struct QuadraticNorm {
  Rational ss;
  Rational st;
  Rational tt;

  double evaluate(double s, double t = 0.0) const;

  QuadraticNorm& operator+=(const QuadraticNorm& o) {
    ss += o.ss;
    st += o.st;
    tt += o.tt;
    return *this;
  }
  friend bool operator==(const QuadraticNorm&, const QuadraticNorm&) = default;

  std::string to_string() const;
};

QuadraticNorm product(const Coefficient& x, const Coefficient& y);

/// Basis tensor e_{l1} (x) ... (x) e_{lr}.
using TensorIndex = std::vector<Label>;

/// Finitely supported vector of an r-fold tensor power of l2, in the basis of
/// elementary tensors. Zero coefficients are never stored, so structural
/// equality is equality of vectors.
class SparseTensor {
 public:
  explicit SparseTensor(std::size_t arity);

  static SparseTensor basis(const TensorIndex& index, const Coefficient& c);

  std::size_t arity() const noexcept { return arity_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<TensorIndex, Coefficient>& entries() const noexcept { return entries_; }

  /// Coefficient at `index`, zero if absent.
  Coefficient at(const TensorIndex& index) const;

  /// Adds c to the entry at index, dropping it if it cancels.
  void accumulate(const TensorIndex& index, const Coefficient& c);

  SparseTensor& operator+=(const SparseTensor& o);
  SparseTensor& operator-=(const SparseTensor& o);
  friend SparseTensor operator+(SparseTensor a, const SparseTensor& b) { return a += b; }
  friend SparseTensor operator-(SparseTensor a, const SparseTensor& b) { return a -= b; }
  friend SparseTensor operator-(const SparseTensor& a);
  friend bool operator==(const SparseTensor&, const SparseTensor&) = default;

  std::string to_string() const;

 private:
  void check_index(const TensorIndex& index) const;

  std::size_t arity_;
  std::map<TensorIndex, Coefficient> entries_;
};

SparseTensor add(const SparseTensor& x, const SparseTensor& y);

/// Relabels every basis tensor. A single permutation acts on every factor
/// (diagonally); otherwise g must carry one permutation per factor.
SparseTensor act(std::span<const Permutation> g, const SparseTensor& x);

/// Orthonormal-basis pairing, expanded in s^2, st, t^2.
QuadraticNorm inner(const SparseTensor& x, const SparseTensor& y);
QuadraticNorm norm_sq(const SparseTensor& x);

}  // namespace thoma
