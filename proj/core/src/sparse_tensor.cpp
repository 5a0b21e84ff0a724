#include "thoma/sparse_tensor.hpp"

#include <stdexcept>

namespace thoma {

std::string Coefficient::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (s != 0) out += format_rational(s) + "*s";
  if (t != 0) {
    if (!out.empty()) out += (t > 0 ? " + " : " ");
    out += format_rational(t) + "*t";
  }
  return out;
}

double QuadraticNorm::evaluate(double s, double t) const {
  return to_double(ss) * s * s + to_double(st) * s * t + to_double(tt) * t * t;
}

std::string QuadraticNorm::to_string() const {
  return format_rational(ss) + "*s^2 + " + format_rational(st) + "*s*t + " + format_rational(tt) + "*t^2";
}

QuadraticNorm product(const Coefficient& x, const Coefficient& y) {
  return {x.s * y.s, x.s * y.t + x.t * y.s, x.t * y.t};
}

SparseTensor::SparseTensor(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw std::invalid_argument("tensor arity must be positive");
}

SparseTensor SparseTensor::basis(const TensorIndex& index, const Coefficient& c) {
  SparseTensor out(index.size());
  out.accumulate(index, c);
  return out;
}

void SparseTensor::check_index(const TensorIndex& index) const {
  if (index.size() != arity_) {
    throw std::invalid_argument("tensor index of arity " + std::to_string(index.size()) +
                                " used with a tensor of arity " + std::to_string(arity_));
  }
  const Regime regime = index.front().regime();
  for (const Label& l : index) {
    if (l.regime() != regime) throw std::invalid_argument("tensor index mixes plain and signed labels");
  }
  if (!entries_.empty() && entries_.begin()->first.front().regime() != regime) {
    throw std::invalid_argument("tensor entries mix plain and signed labels");
  }
}

Coefficient SparseTensor::at(const TensorIndex& index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? Coefficient{} : it->second;
}

void SparseTensor::accumulate(const TensorIndex& index, const Coefficient& c) {
  check_index(index);
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

SparseTensor& SparseTensor::operator+=(const SparseTensor& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch in add");
  for (const auto& [index, c] : o.entries_) accumulate(index, c);
  return *this;
}

SparseTensor& SparseTensor::operator-=(const SparseTensor& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch in subtract");
  for (const auto& [index, c] : o.entries_) accumulate(index, -c);
  return *this;
}

SparseTensor operator-(const SparseTensor& a) {
  SparseTensor out(a.arity_);
  for (const auto& [index, c] : a.entries_) out.entries_.emplace(index, -c);
  return out;
}

std::string SparseTensor::to_string() const {
  if (entries_.empty()) return "0";
  std::string out;
  for (const auto& [index, c] : entries_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")e[";
    for (std::size_t i = 0; i < index.size(); ++i) {
      if (i != 0) out += ',';
      out += index[i].to_string();
    }
    out += ']';
  }
  return out;
}

SparseTensor add(const SparseTensor& x, const SparseTensor& y) { return x + y; }

SparseTensor act(std::span<const Permutation> g, const SparseTensor& x) {
  if (g.size() != 1 && g.size() != x.arity()) {
    throw std::invalid_argument("group element with " + std::to_string(g.size()) +
                                " components cannot act on a tensor of arity " + std::to_string(x.arity()));
  }
  SparseTensor out(x.arity());
  for (const auto& [index, c] : x.entries()) {
    TensorIndex image(index.size());
    for (std::size_t f = 0; f < index.size(); ++f) {
      image[f] = g[g.size() == 1 ? 0 : f].apply(index[f]);
    }
    out.accumulate(image, c);
  }
  return out;
}

QuadraticNorm inner(const SparseTensor& x, const SparseTensor& y) {
  if (x.arity() != y.arity()) throw std::invalid_argument("tensor arity mismatch in inner");
  QuadraticNorm q;
  const auto& small = x.size() <= y.size() ? x : y;
  const auto& large = x.size() <= y.size() ? y : x;
  for (const auto& [index, c] : small.entries()) {
    auto it = large.entries().find(index);
    if (it != large.entries().end()) q += product(c, it->second);
  }
  return q;
}

QuadraticNorm norm_sq(const SparseTensor& x) { return inner(x, x); }

}  // namespace thoma
