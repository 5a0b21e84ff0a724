#include "thoma/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace thoma {

namespace {

constexpr double kOrthogonalityTol = 1e-12;

double factorial(unsigned k) {
  double f = 1.0;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

void require_same_vars(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  if (a.vars() != b.vars()) {
    throw std::invalid_argument("Fock vectors in F_" + std::to_string(a.vars()) + " and F_" +
                                std::to_string(b.vars()) + " cannot be combined");
  }
}

}  // namespace

TruncatedPolynomial::TruncatedPolynomial(unsigned n, unsigned d) : n_(n), d_(d) {
  if (n > max_vars) throw std::invalid_argument("Fock model supports at most 16 variables");
  if (d > max_degree) throw std::invalid_argument("Fock model supports degree at most 15");
}

TruncatedPolynomial TruncatedPolynomial::constant(unsigned n, unsigned d, Complex c) {
  TruncatedPolynomial p(n, d);
  p.add_packed(0, c);
  return p;
}

TruncatedPolynomial TruncatedPolynomial::monomial(unsigned n, unsigned d, const MultiIndex& a, Complex c) {
  TruncatedPolynomial p(n, d);
  p.add_term(a, c);
  return p;
}

TruncatedPolynomial TruncatedPolynomial::variable(unsigned n, unsigned d, unsigned i) {
  if (i >= n) throw std::invalid_argument("variable index out of range");
  MultiIndex a(n, 0);
  a[i] = 1;
  return monomial(n, d, a);
}

TruncatedPolynomial::Key TruncatedPolynomial::pack(const MultiIndex& a) const {
  if (a.size() != n_) throw std::invalid_argument("multi-index has the wrong number of variables");
  Key k = 0;
  unsigned total = 0;
  for (unsigned i = 0; i < n_; ++i) {
    total += a[i];
    if (total > d_) throw std::invalid_argument("monomial exceeds the degree bound");
    k |= static_cast<Key>(a[i]) << (4 * i);
  }
  return k;
}

MultiIndex TruncatedPolynomial::unpack(Key k) const {
  MultiIndex a(n_);
  for (unsigned i = 0; i < n_; ++i) a[i] = static_cast<unsigned>((k >> (4 * i)) & 0xfu);
  return a;
}

unsigned TruncatedPolynomial::key_degree(Key k) noexcept {
  unsigned total = 0;
  for (; k != 0; k >>= 4) total += static_cast<unsigned>(k & 0xfu);
  return total;
}

void TruncatedPolynomial::add_packed(Key k, Complex c) {
  if (c == Complex(0.0)) return;
  auto [it, inserted] = coeffs_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0.0)) coeffs_.erase(it);
  }
}

unsigned TruncatedPolynomial::degree() const noexcept {
  unsigned deg = 0;
  for (const auto& kv : coeffs_) deg = std::max(deg, key_degree(kv.first));
  return deg;
}

Complex TruncatedPolynomial::coefficient(const MultiIndex& a) const {
  auto it = coeffs_.find(pack(a));
  return it == coeffs_.end() ? Complex(0.0) : it->second;
}

void TruncatedPolynomial::add_term(const MultiIndex& a, Complex c) { add_packed(pack(a), c); }

std::vector<std::pair<MultiIndex, Complex>> TruncatedPolynomial::terms() const {
  std::vector<std::pair<Key, Complex>> packed(coeffs_.begin(), coeffs_.end());
  std::sort(packed.begin(), packed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<MultiIndex, Complex>> out;
  out.reserve(packed.size());
  for (const auto& [k, c] : packed) out.emplace_back(unpack(k), c);
  return out;
}

TruncatedPolynomial TruncatedPolynomial::embed(unsigned m) const {
  if (m < n_) throw std::invalid_argument("embedding must not drop variables");
  TruncatedPolynomial out(m, d_);
  out.coeffs_ = coeffs_;  // new variables occupy higher nibbles with exponent 0
  return out;
}

TruncatedPolynomial TruncatedPolynomial::truncate(unsigned d) const {
  TruncatedPolynomial out(n_, std::min(d, d_));
  for (const auto& [k, c] : coeffs_) {
    if (key_degree(k) <= out.d_) out.coeffs_.emplace(k, c);
  }
  return out;
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& o) {
  require_same_vars(*this, o);
  if (o.degree() > d_) throw std::invalid_argument("sum exceeds the degree bound");
  for (const auto& [k, c] : o.coeffs_) add_packed(k, c);
  return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(const TruncatedPolynomial& o) {
  require_same_vars(*this, o);
  if (o.degree() > d_) throw std::invalid_argument("difference exceeds the degree bound");
  for (const auto& [k, c] : o.coeffs_) add_packed(k, -c);
  return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator*=(Complex c) {
  if (c == Complex(0.0)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& kv : coeffs_) kv.second *= c;
  return *this;
}

TruncatedPolynomial multiply(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  require_same_vars(a, b);
  using Key = TruncatedPolynomial::Key;
  std::vector<std::pair<Key, Complex>> rhs(b.coeffs_.begin(), b.coeffs_.end());
  std::vector<unsigned> rhs_degree(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs_degree[i] = TruncatedPolynomial::key_degree(rhs[i].first);

  TruncatedPolynomial out(a.n_, a.d_);
  out.coeffs_.reserve(a.coeffs_.size() * std::min<std::size_t>(rhs.size(), 8));
  for (const auto& [ka, ca] : a.coeffs_) {
    const unsigned da = TruncatedPolynomial::key_degree(ka);
    for (std::size_t i = 0; i < rhs.size(); ++i) {
      // Every exponent is at most the total degree <= 15, so nibble-wise
      // addition never carries.
      if (da + rhs_degree[i] <= out.d_) out.add_packed(ka + rhs[i].first, ca * rhs[i].second);
    }
  }
  return out;
}

Complex fock_inner(const TruncatedPolynomial& f, const TruncatedPolynomial& g) {
  require_same_vars(f, g);
  Complex sum = 0.0;
  for (const auto& [k, cf] : f.coeffs_) {
    auto it = g.coeffs_.find(k);
    if (it == g.coeffs_.end()) continue;
    double weight = 1.0;
    for (auto key = k; key != 0; key >>= 4) weight *= factorial(static_cast<unsigned>(key & 0xfu));
    sum += cf * std::conj(it->second) * weight;
  }
  return sum;
}

double fock_norm(const TruncatedPolynomial& f) { return std::sqrt(std::max(0.0, fock_inner(f, f).real())); }

std::vector<MultiIndex> monomial_basis(unsigned n, unsigned d) {
  std::vector<MultiIndex> out;
  MultiIndex a(n, 0);
  // Graded: all monomials of degree 0, then 1, ...
  for (unsigned deg = 0; deg <= d; ++deg) {
    auto rec = [&](auto&& self, unsigned i, unsigned remaining) -> void {
      if (i + 1 == n) {
        a[i] = remaining;
        out.push_back(a);
        return;
      }
      for (unsigned e = remaining + 1; e-- > 0;) {
        a[i] = e;
        self(self, i + 1, remaining - e);
      }
    };
    if (n == 0) {
      if (deg == 0) out.push_back(a);
      continue;
    }
    rec(rec, 0, deg);
  }
  return out;
}

double orthogonality_defect(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return (a.transpose() * a - Eigen::MatrixXd::Identity(a.rows(), a.cols())).cwiseAbs().maxCoeff();
}

TruncatedPolynomial exp_orthogonal(const Eigen::MatrixXd& a, const TruncatedPolynomial& f) {
  const unsigned n = f.vars();
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument("Exp(A): matrix size does not match F_n");
  if (n != 0 && orthogonality_defect(a) > kOrthogonalityTol) throw std::invalid_argument("Exp(A): matrix is not orthogonal");

  const unsigned d = f.degree_bound();
  // (zA)_j = sum_i z_i A_ij; powers[j][k] = ((zA)_j)^k.
  std::vector<std::vector<TruncatedPolynomial>> powers(n);
  for (unsigned j = 0; j < n; ++j) {
    TruncatedPolynomial linear(n, d);
    for (unsigned i = 0; i < n; ++i) {
      if (a(i, j) != 0.0) {
        MultiIndex e(n, 0);
        e[i] = 1;
        linear.add_term(e, a(i, j));
      }
    }
    powers[j].push_back(TruncatedPolynomial::constant(n, d));
    for (unsigned k = 1; k <= d; ++k) powers[j].push_back(multiply(powers[j].back(), linear));
  }

  TruncatedPolynomial out(n, d);
  for (const auto& [exps, c] : f.terms()) {
    TruncatedPolynomial term = TruncatedPolynomial::constant(n, d, c);
    for (unsigned j = 0; j < n; ++j) {
      if (exps[j] != 0) term = multiply(term, powers[j][exps[j]]);
    }
    out += term;
  }
  return out;
}

TruncatedPolynomial exp_translation(const Eigen::VectorXd& v, const TruncatedPolynomial& f, unsigned d) {
  const unsigned n = f.vars();
  if (v.size() != n) throw std::invalid_argument("Exp(v): vector size does not match F_n");
  if (f.degree() > d) throw std::invalid_argument("Exp(v): truncation degree below the degree of f");

  // f(z + v)
  std::vector<std::vector<TruncatedPolynomial>> shifted_powers(n);
  for (unsigned j = 0; j < n; ++j) {
    TruncatedPolynomial linear = TruncatedPolynomial::variable(n, d, j);
    linear += TruncatedPolynomial::constant(n, d, v(j));
    shifted_powers[j].push_back(TruncatedPolynomial::constant(n, d));
    for (unsigned k = 1; k <= f.degree(); ++k) shifted_powers[j].push_back(multiply(shifted_powers[j].back(), linear));
  }
  TruncatedPolynomial shifted(n, d);
  for (const auto& [exps, c] : f.terms()) {
    TruncatedPolynomial term = TruncatedPolynomial::constant(n, d, c);
    for (unsigned j = 0; j < n; ++j) {
      if (exps[j] != 0) term = multiply(term, shifted_powers[j][exps[j]]);
    }
    shifted += term;
  }

  // exp(g) with g(z) = -<z,v> - <v,v>/2, summed to order d.
  TruncatedPolynomial g = TruncatedPolynomial::constant(n, d, -0.5 * v.squaredNorm());
  for (unsigned i = 0; i < n; ++i) {
    if (v(i) != 0.0) g += TruncatedPolynomial::variable(n, d, i) * Complex(-v(i));
  }
  TruncatedPolynomial power = TruncatedPolynomial::constant(n, d);
  TruncatedPolynomial multiplier = power;
  for (unsigned k = 1; k <= d; ++k) {
    power = multiply(power, g) * Complex(1.0 / k);
    multiplier += power;
  }

  return multiply(shifted, multiplier);
}

AffinePoint AffinePoint::make(Eigen::MatrixXd a, Eigen::VectorXd v) {
  if (a.rows() != v.size() || a.cols() != v.size()) throw std::invalid_argument("affine point: sizes disagree");
  if (v.size() != 0 && orthogonality_defect(a) > kOrthogonalityTol) {
    throw std::invalid_argument("affine point: linear part is not orthogonal");
  }
  return {std::move(a), std::move(v)};
}

AffinePoint AffinePoint::translation(Eigen::VectorXd v) {
  const auto n = v.size();
  return make(Eigen::MatrixXd::Identity(n, n), std::move(v));
}

AffinePoint compose(const AffinePoint& first, const AffinePoint& second) {
  if (first.dim() != second.dim()) throw std::invalid_argument("affine points of different dimension");
  return AffinePoint::make(first.a * second.a, first.a * second.v + first.v);
}

Complex vacuum_coefficient(const AffinePoint& p, unsigned d) {
  const TruncatedPolynomial one = TruncatedPolynomial::constant(p.dim(), d);
  const TruncatedPolynomial rotated = exp_orthogonal(p.a, one);
  return fock_inner(exp_translation(p.v, rotated, d), one);
}

double vacuum_tail_bound(double norm_sq, unsigned d) {
  const double x = 0.5 * norm_sq;
  if (x == 0.0) return 0.0;
  double term = 1.0;
  for (unsigned k = 1; k <= d; ++k) term *= x / k;
  double tail = 0.0;
  for (unsigned k = d + 1;; ++k) {
    term *= x / k;
    tail += term;
    if (k > x && term <= tail * 1e-17) break;
  }
  return tail;
}

double unitarity_defect(const Eigen::MatrixXd& a, unsigned d) {
  const auto n = static_cast<unsigned>(a.rows());
  const auto basis = monomial_basis(n, d);
  std::vector<TruncatedPolynomial> images;
  images.reserve(basis.size());
  for (const auto& b : basis) images.push_back(exp_orthogonal(a, TruncatedPolynomial::monomial(n, d, b)));

  double defect = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      Complex expected = 0.0;
      if (i == j) {
        expected = 1.0;
        for (unsigned e : basis[i]) expected *= factorial(e);
      }
      defect = std::max(defect, std::abs(fock_inner(images[i], images[j]) - expected));
    }
  }
  return defect;
}

}  // namespace thoma
