#include "thoma/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace thoma {

std::string Label::to_string() const {
  std::string out = std::to_string(index);
  if (tag == LabelTag::plus) out += '+';
  if (tag == LabelTag::minus) out += '-';
  return out;
}

namespace {

void require_same_regime(std::optional<Regime> a, std::optional<Regime> b, const char* what) {
  if (a && b && *a != *b) {
    throw std::invalid_argument(std::string(what) + ": plain and signed labels cannot be mixed");
  }
}

}  // namespace

Permutation Permutation::from_map(const std::map<Label, Label>& mapping) {
  std::optional<Regime> regime;
  std::set<Label> images;
  for (const auto& [from, to] : mapping) {
    for (Label l : {from, to}) {
      if (l.index == 0) throw std::invalid_argument("labels are 1-based");
      if (regime && *regime != l.regime()) {
        throw std::invalid_argument("permutation mixes plain and signed labels");
      }
      regime = l.regime();
    }
    if (!images.insert(to).second) {
      throw std::invalid_argument("mapping is not injective at " + to.to_string());
    }
  }
  for (const Label& image : images) {
    if (!mapping.contains(image)) {
      throw std::invalid_argument("mapping is not a bijection of its key set: " +
                                  image.to_string() + " has no image");
    }
  }
  Permutation p;
  for (const auto& [from, to] : mapping) {
    if (from != to) p.map_.emplace(from, to);
  }
  return p;
}

Permutation Permutation::from_images(const std::vector<std::uint32_t>& images) {
  std::map<Label, Label> m;
  for (std::size_t i = 0; i < images.size(); ++i) {
    m.emplace(Label::plain(static_cast<std::uint32_t>(i + 1)), Label::plain(images[i]));
  }
  return from_map(m);
}

Label Permutation::apply(Label x) const {
  if (map_.empty()) return x;
  if (map_.begin()->first.regime() != x.regime()) {
    throw std::invalid_argument("label " + x.to_string() + " does not match the permutation's tag regime");
  }
  auto it = map_.find(x);
  return it == map_.end() ? x : it->second;
}

std::optional<Regime> Permutation::regime() const noexcept {
  if (map_.empty()) return std::nullopt;
  return map_.begin()->first.regime();
}

std::vector<Label> Permutation::support() const {
  std::vector<Label> out;
  out.reserve(map_.size());
  for (const auto& kv : map_) out.push_back(kv.first);
  return out;
}

std::uint32_t Permutation::max_index() const noexcept {
  std::uint32_t m = 0;
  for (const auto& kv : map_) m = std::max(m, kv.first.index);
  return m;
}

std::string Permutation::to_string() const {
  if (map_.empty()) return "e";
  std::string out;
  std::set<Label> seen;
  for (const auto& kv : map_) {
    if (seen.contains(kv.first)) continue;
    out += '(';
    Label cur = kv.first;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += cur.to_string();
      seen.insert(cur);
      cur = map_.at(cur);
    } while (cur != kv.first);
    out += ')';
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> Permutation {
    throw std::invalid_argument("bad permutation \"" + std::string(text) + "\": " + why);
  };

  skip_ws();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip_ws();
    if (pos != text.size()) return fail("trailing characters after 'e'");
    return {};
  }
  if (pos == text.size()) return fail("empty input");

  std::vector<std::vector<Label>> cycles;
  std::set<Label> used;
  std::optional<Regime> regime;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') return fail("expected '('");
    ++pos;
    std::vector<Label> cycle;
    while (true) {
      skip_ws();
      if (pos == text.size()) return fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return fail("expected a label");
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > 0xffffffffULL) return fail("label index too large");
        ++pos;
      }
      if (value == 0) return fail("labels are 1-based");
      LabelTag tag = LabelTag::plain;
      if (pos < text.size() && text[pos] == '+') {
        tag = LabelTag::plus;
        ++pos;
      } else if (pos < text.size() && text[pos] == '-') {
        tag = LabelTag::minus;
        ++pos;
      }
      const Label label{static_cast<std::uint32_t>(value), tag};
      if (regime && *regime != label.regime()) return fail("mixed plain and signed labels");
      regime = label.regime();
      if (!used.insert(label).second) return fail("repeated label " + label.to_string());
      cycle.push_back(label);
    }
    if (cycle.empty()) return fail("empty cycle");
    cycles.push_back(std::move(cycle));
  }
  if (cycles.empty()) return fail("no cycles");

  // Labels are pairwise distinct, so the cycles are disjoint and commute.
  std::map<Label, Label> m;
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      m.emplace(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
  }
  return Permutation::from_map(m);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_regime(p.regime(), q.regime(), "compose");
  std::map<Label, Label> m;
  for (const auto& kv : q.mapping()) m.emplace(kv.first, p.apply(kv.second));
  for (const auto& kv : p.mapping()) {
    if (!q.mapping().contains(kv.first)) m.emplace(kv.first, kv.second);
  }
  return Permutation::from_map(m);
}

Permutation inverse(const Permutation& p) {
  std::map<Label, Label> m;
  for (const auto& [from, to] : p.mapping()) m.emplace(to, from);
  return Permutation::from_map(m);
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  std::set<Label> seen;
  for (const auto& kv : p.mapping()) {
    if (seen.contains(kv.first)) continue;
    int len = 0;
    Label cur = kv.first;
    do {
      seen.insert(cur);
      cur = p.apply(cur);
      ++len;
    } while (cur != kv.first);
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::size_t moved_count(const Permutation& sigma, const Permutation& tau) {
  require_same_regime(sigma.regime(), tau.regime(), "moved_count");
  std::set<Label> candidates;
  for (const auto& kv : sigma.mapping()) candidates.insert(kv.first);
  for (const auto& kv : tau.mapping()) candidates.insert(kv.first);
  return static_cast<std::size_t>(std::count_if(candidates.begin(), candidates.end(),
      [&](Label x) { return sigma.apply(x) != tau.apply(x); }));
}

int sign(const Permutation& p) {
  int transpositions = 0;
  for (int len : cycle_type(p)) transpositions += len - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

std::vector<Permutation> all_permutations(std::uint32_t n) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 1u);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace thoma
