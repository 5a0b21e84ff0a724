#pragma once

#include <complex>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace thoma {

using Complex = std::complex<double>;

/// Exponents (a_1, ..., a_n) of the monomial z_1^a_1 ... z_n^a_n.
using MultiIndex = std::vector<unsigned>;

/// A vector of the n-variable Fock space F_n, kept as a polynomial of total
/// degree at most d. Embedding F_n -> F_{n+1} pads exponent tuples with zeros.
///
/// Monomials are stored packed, four bits per variable, which bounds the model
/// at 16 variables and degree 15.
class TruncatedPolynomial {
 public:
  static constexpr unsigned max_vars = 16;
  static constexpr unsigned max_degree = 15;

  TruncatedPolynomial(unsigned n, unsigned d);

  static TruncatedPolynomial constant(unsigned n, unsigned d, Complex c = 1.0);
  static TruncatedPolynomial monomial(unsigned n, unsigned d, const MultiIndex& a, Complex c = 1.0);
  static TruncatedPolynomial variable(unsigned n, unsigned d, unsigned i);

  unsigned vars() const noexcept { return n_; }
  unsigned degree_bound() const noexcept { return d_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Largest total degree of a stored monomial; 0 for the zero polynomial.
  unsigned degree() const noexcept;

  Complex coefficient(const MultiIndex& a) const;
  void add_term(const MultiIndex& a, Complex c);

  /// Terms in increasing packed-key order (deterministic).
  std::vector<std::pair<MultiIndex, Complex>> terms() const;

  /// Same vector viewed in F_m, m >= n.
  TruncatedPolynomial embed(unsigned m) const;

  /// Drops every monomial of total degree above d.
  TruncatedPolynomial truncate(unsigned d) const;

  TruncatedPolynomial& operator+=(const TruncatedPolynomial& o);
  TruncatedPolynomial& operator-=(const TruncatedPolynomial& o);
  TruncatedPolynomial& operator*=(Complex c);
  friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a += b; }
  friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a -= b; }
  friend TruncatedPolynomial operator*(TruncatedPolynomial a, Complex c) { return a *= c; }

  /// Product with every monomial above the left operand's degree bound dropped.
  friend TruncatedPolynomial multiply(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

  friend Complex fock_inner(const TruncatedPolynomial& f, const TruncatedPolynomial& g);

 private:
  using Key = std::uint64_t;

  Key pack(const MultiIndex& a) const;
  MultiIndex unpack(Key k) const;
  static unsigned key_degree(Key k) noexcept;
  void add_packed(Key k, Complex c);

  unsigned n_;
  unsigned d_;
  std::unordered_map<Key, Complex> coeffs_;
};

/// Gaussian inner product (1/pi^n) int f conj(g) exp(-|z|^2), evaluated on
/// monomials: <z^a, z^b> = delta_ab prod a_i!.
Complex fock_inner(const TruncatedPolynomial& f, const TruncatedPolynomial& g);

double fock_norm(const TruncatedPolynomial& f);

/// All monomials of total degree <= d in n variables, graded.
std::vector<MultiIndex> monomial_basis(unsigned n, unsigned d);

/// max |A^T A - I|.
double orthogonality_defect(const Eigen::MatrixXd& a);

/// Exp(A) f (z) = f(zA), z a row vector. Degree preserving, hence exact at any
/// truncation. Throws if A is not square of size f.vars() or not orthogonal to
/// 1e-12.
TruncatedPolynomial exp_orthogonal(const Eigen::MatrixXd& a, const TruncatedPolynomial& f);

/// Exp(v) f (z) = f(z + v) exp(-<z,v> - <v,v>/2), with the exponential
/// expanded as its power series to order d and the product truncated to total
/// degree d. Requires d >= degree(f).
TruncatedPolynomial exp_translation(const Eigen::VectorXd& v, const TruncatedPolynomial& f, unsigned d);

/// The affine isometry h -> A h + v of R^n.
struct AffinePoint {
  Eigen::MatrixXd a;
  Eigen::VectorXd v;

  /// Validates A orthogonal to 1e-12 and sizes consistent.
  static AffinePoint make(Eigen::MatrixXd a, Eigen::VectorXd v);
  static AffinePoint translation(Eigen::VectorXd v);

  unsigned dim() const { return static_cast<unsigned>(v.size()); }
};

/// (A1, v1) o (A2, v2) = (A1 A2, A1 v2 + v1).
AffinePoint compose(const AffinePoint& first, const AffinePoint& second);

/// <Exp(v) Exp(A) 1, 1> at truncation degree d. Converges to exp(-|v|^2/2).
Complex vacuum_coefficient(const AffinePoint& p, unsigned d);

/// sum_{k > d} (|v|^2/2)^k / k!, the bound on |vacuum_coefficient - exp(-|v|^2/2)|.
double vacuum_tail_bound(double norm_sq, unsigned d);

/// max over the degree-<=d monomial basis of
/// |<Exp(A) b_i, Exp(A) b_j> - delta_ij |b_i|^2|.
double unitarity_defect(const Eigen::MatrixXd& a, unsigned d);

}  // namespace thoma
