#include "thoma/random.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace thoma {

namespace {

std::vector<std::uint32_t> shuffled(Rng& rng, std::uint32_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  for (std::uint32_t i = n; i > 1; --i) {
    std::uniform_int_distribution<std::uint32_t> pick(0, i - 1);
    std::swap(v[i - 1], v[pick(rng)]);
  }
  return v;
}

}  // namespace

Permutation random_permutation(Rng& rng, std::uint32_t window, Regime regime) {
  if (window == 0) return {};
  std::vector<Label> labels;
  for (std::uint32_t i = 1; i <= window; ++i) {
    if (regime == Regime::plain) {
      labels.push_back(Label::plain(i));
    } else {
      labels.push_back(Label::plus(i));
      labels.push_back(Label::minus(i));
    }
  }
  const auto order = shuffled(rng, static_cast<std::uint32_t>(labels.size()));
  std::map<Label, Label> m;
  for (std::size_t i = 0; i < labels.size(); ++i) m.emplace(labels[i], labels[order[i]]);
  return Permutation::from_map(m);
}

GroupElement random_element(Rng& rng, const PairSpec& pair, std::uint32_t window) {
  GroupElement g;
  for (std::size_t c = 0; c < pair.components(); ++c) g.parts.push_back(random_permutation(rng, window, pair.regime()));
  return g;
}

GroupElement random_subgroup_element(Rng& rng, const PairSpec& pair, std::uint32_t window) {
  switch (pair.kind()) {
    case PairKind::A:
    case PairKind::D: {
      const Permutation sigma = random_permutation(rng, window, Regime::plain);
      return GroupElement{std::vector<Permutation>(pair.components(), sigma)};
    }
    case PairKind::B:
    case PairKind::C: {
      const auto order = shuffled(rng, window);
      std::bernoulli_distribution flip(0.5);
      std::map<Label, Label> m;
      for (std::uint32_t j = 1; j <= window; ++j) {
        const std::uint32_t target = order[j - 1] + 1;
        const bool swap_signs = pair.kind() == PairKind::B && flip(rng);
        m.emplace(Label::plus(j), swap_signs ? Label::minus(target) : Label::plus(target));
        m.emplace(Label::minus(j), swap_signs ? Label::plus(target) : Label::minus(target));
      }
      return GroupElement{{Permutation::from_map(m)}};
    }
  }
  throw std::logic_error("unreachable pair kind");
}

}  // namespace thoma
