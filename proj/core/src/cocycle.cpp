#include "thoma/cocycle.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace thoma {

std::string to_string(PairKind kind) {
  switch (kind) {
    case PairKind::A: return "A";
    case PairKind::B: return "B";
    case PairKind::C: return "C";
    case PairKind::D: return "D";
  }
  return "?";
}

PairKind parse_pair_kind(std::string_view text) {
  if (text == "A" || text == "a") return PairKind::A;
  if (text == "B" || text == "b") return PairKind::B;
  if (text == "C" || text == "c") return PairKind::C;
  if (text == "D" || text == "d") return PairKind::D;
  throw std::invalid_argument("unknown pair kind \"" + std::string(text) + "\" (expected A, B, C or D)");
}

PairSpec PairSpec::make(PairKind kind, double s, std::optional<double> t) {
  if (!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("pair parameter s must be positive");
  if (kind == PairKind::C) {
    if (!t) throw std::invalid_argument("pair C needs the parameter t");
    if (!std::isfinite(*t)) throw std::invalid_argument("pair parameter t must be finite");
    return {kind, s, *t};
  }
  if (t) throw std::invalid_argument("t is not a parameter of pair " + to_string(kind));
  return {kind, s, 0.0};
}

std::size_t PairSpec::arity() const noexcept { return kind_ == PairKind::D ? 3 : 2; }

std::size_t PairSpec::components() const noexcept {
  switch (kind_) {
    case PairKind::A: return 2;
    case PairKind::D: return 3;
    default: return 1;
  }
}

Regime PairSpec::regime() const noexcept {
  return kind_ == PairKind::B || kind_ == PairKind::C ? Regime::signed_labels : Regime::plain;
}

std::string GroupElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += '|';
    out += parts[i].to_string();
  }
  return out;
}

GroupElement parse_group_element(std::string_view text) {
  GroupElement g;
  std::size_t start = 0;
  while (true) {
    const auto bar = text.find('|', start);
    g.parts.push_back(parse_permutation(text.substr(start, bar == text.npos ? text.npos : bar - start)));
    if (bar == text.npos) break;
    start = bar + 1;
  }
  return g;
}

GroupElement identity_element(std::size_t components) {
  return GroupElement{std::vector<Permutation>(components)};
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  if (g1.parts.size() != g2.parts.size()) throw std::invalid_argument("group elements of different shapes");
  GroupElement out;
  for (std::size_t i = 0; i < g1.parts.size(); ++i) out.parts.push_back(compose(g1.parts[i], g2.parts[i]));
  return out;
}

GroupElement inverse(const GroupElement& g) {
  GroupElement out;
  for (const auto& p : g.parts) out.parts.push_back(inverse(p));
  return out;
}

void check_shape(const PairSpec& pair, const GroupElement& g) {
  if (g.parts.size() != pair.components()) {
    throw std::invalid_argument("pair " + to_string(pair.kind()) + " expects " +
                                std::to_string(pair.components()) + " permutation(s), got " +
                                std::to_string(g.parts.size()));
  }
  for (const auto& p : g.parts) {
    if (p.regime() && *p.regime() != pair.regime()) {
      throw std::invalid_argument("pair " + to_string(pair.kind()) + " expects " +
                                  (pair.regime() == Regime::plain ? "plain" : "signed") + " labels, got " +
                                  p.to_string());
    }
  }
}

SparseTensor pattern_term(PairKind kind, std::uint32_t j) {
  const Label e = Label::plain(j);
  const Label plus = Label::plus(j);
  const Label minus = Label::minus(j);
  switch (kind) {
    case PairKind::A:
      return SparseTensor::basis({e, e}, Coefficient::of_s());
    case PairKind::B:
      return SparseTensor::basis({plus, minus}, Coefficient::of_s()) +
             SparseTensor::basis({minus, plus}, Coefficient::of_s());
    case PairKind::C:
      return SparseTensor::basis({plus, minus}, Coefficient::of_s()) +
             SparseTensor::basis({minus, plus}, Coefficient::of_t());
    case PairKind::D:
      return SparseTensor::basis({e, e, e}, Coefficient::of_s());
  }
  throw std::logic_error("unreachable pair kind");
}

SparseTensor act(const PairSpec& pair, const GroupElement& g, const SparseTensor& x) {
  check_shape(pair, g);
  return act(std::span<const Permutation>(g.parts), x);
}

namespace {

// Indices j whose pattern term touches a label moved by some component of g.
// Terms outside this set are fixed by U(g) and contribute nothing to Xi.
std::set<std::uint32_t> touched_indices(const GroupElement& g) {
  std::set<std::uint32_t> out;
  for (const auto& p : g.parts) {
    for (const auto& kv : p.mapping()) out.insert(kv.first.index);
  }
  return out;
}

}  // namespace

SparseTensor xi(const PairSpec& pair, const GroupElement& g) {
  check_shape(pair, g);
  SparseTensor out(pair.arity());
  for (std::uint32_t j : touched_indices(g)) {
    const SparseTensor term = pattern_term(pair.kind(), j);
    out += act(std::span<const Permutation>(g.parts), term);
    out -= term;
  }
  return out;
}

bool in_subgroup(const PairSpec& pair, const GroupElement& g) {
  check_shape(pair, g);
  switch (pair.kind()) {
    case PairKind::A:
    case PairKind::D:
      for (const auto& p : g.parts) {
        if (p != g.parts.front()) return false;
      }
      return true;
    case PairKind::B:
    case PairKind::C: {
      const Permutation& sigma = g.parts.front();
      for (std::uint32_t j : touched_indices(g)) {
        const Label a = sigma.apply(Label::plus(j));
        const Label b = sigma.apply(Label::minus(j));
        if (a.index != b.index || a.tag == b.tag) return false;
        if (pair.kind() == PairKind::C && a.tag != LabelTag::plus) return false;
      }
      return true;
    }
  }
  return false;
}

SparseTensor check_cocycle(const PairSpec& pair, const GroupElement& g1, const GroupElement& g2) {
  SparseTensor residual = xi(pair, compose(g1, g2));
  residual -= act(pair, g1, xi(pair, g2));
  residual -= xi(pair, g1);
  return residual;
}

double spherical(const PairSpec& pair, const GroupElement& g) {
  return std::exp(-0.5 * norm_sq(xi(pair, g)).evaluate(pair.s(), pair.t()));
}

SparseTensor AffineAction::apply(const PairSpec& pair, const SparseTensor& h) const {
  return act(pair, linear, h) + shift;
}

AffineAction affine_action(const PairSpec& pair, const GroupElement& g) {
  return {g, xi(pair, g)};
}

AffineAction compose(const PairSpec& pair, const AffineAction& first, const AffineAction& second) {
  return {compose(first.linear, second.linear), act(pair, first.linear, second.shift) + first.shift};
}

}  // namespace thoma
