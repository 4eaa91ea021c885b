#include "arcd/algebra.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "arcd/cupdiagram.hpp"

namespace arcd {

std::string OrientedTriple::str() const {
  return "(" + bottom.str() + "," + orient.str() + "," + top.str() + ")";
}

bool triple_oriented(const OrientedTriple& t) {
  if (t.bottom.size() != t.orient.size() || t.top.size() != t.orient.size())
    return false;
  return is_oriented(cup_diagram(t.bottom), t.orient) &&
         is_oriented(cup_diagram(t.top), t.orient);
}

int triple_degree(const OrientedTriple& t) {
  return degree(cup_diagram(t.bottom), t.orient) +
         degree(cup_diagram(t.top), t.orient);
}

std::vector<OrientedTriple> circle_basis(int n) {
  if (n == 0) return {OrientedTriple{}};
  std::vector<OrientedTriple> out;
  const std::vector<Weight> weights = all_weights(n);
  std::vector<CupDiagram> diagrams;
  diagrams.reserve(weights.size());
  for (const Weight& w : weights) diagrams.push_back(cup_diagram(w));

  for (size_t li = 0; li < weights.size(); ++li) {
    const CupDiagram& d = diagrams[li];
    // Exactly the 2^cups flips of the underlying weight orient the diagram.
    std::vector<Weight> orients;
    orients.reserve(size_t{1} << d.cups.size());
    orients.push_back(underlying_weight(d));
    for (const Arc& c : d.cups) {
      size_t have = orients.size();
      for (size_t i = 0; i < have; ++i)
        orients.push_back(orients[i].flipped2(c.l, c.r));
    }
    std::sort(orients.begin(), orients.end());
    for (const Weight& nu : orients)
      for (size_t mi = 0; mi < weights.size(); ++mi)
        if (is_oriented(diagrams[mi], nu))
          out.push_back({weights[li], nu, weights[mi]});
  }
  return out;
}

Element::Element(const OrientedTriple& t, GaussInt c) { add(t, c); }

GaussInt Element::coeff(const OrientedTriple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? GaussInt{} : it->second;
}

void Element::add(const OrientedTriple& t, GaussInt c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(t, c);
  if (!fresh && (it->second = it->second + c).is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

Element& Element::operator*=(GaussInt c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v = v * c;
  return *this;
}

Element operator-(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [t, c] : b.terms()) out.add(t, -c);
  return out;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [t, c] : terms_) {
    std::string piece;
    if (c == GaussInt{1, 0})
      piece = t.str();
    else if (c == GaussInt{-1, 0})
      piece = "-" + t.str();
    else if (c == GaussInt{0, 1})
      piece = "i*" + t.str();
    else if (c == GaussInt{0, -1})
      piece = "-i*" + t.str();
    else
      piece = "(" + c.str() + ")*" + t.str();
    if (out.empty())
      out = piece;
    else if (piece.front() == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out;
}

Element multiply(const OrientedTriple& a, const OrientedTriple& b,
                 const MultiplyOptions& opts) {
  if (a.bottom.size() != b.bottom.size())
    throw std::invalid_argument("product needs equal weight lengths");
  if (!triple_oriented(a) || !triple_oriented(b))
    throw std::invalid_argument("product of unoriented triples");
  if (!(a.top == b.bottom)) return {};

  StackedShape shape = stack_shapes(cup_diagram(a.bottom), cup_diagram(a.top),
                                    cup_diagram(b.top));
  std::map<StackedLabels, long long> terms{
      {StackedLabels{a.orient.bits(), b.orient.bits()}, 1}};

  std::mt19937_64 rng(opts.seed);
  while (!shape.pairs.empty() && !terms.empty()) {
    int idx = -1;
    if (opts.shuffle) {
      std::vector<int> open;
      for (int i = 0; i < static_cast<int>(shape.pairs.size()); ++i)
        if (surgery_admissible(shape, i)) open.push_back(i);
      idx = open[std::uniform_int_distribution<size_t>(0, open.size() - 1)(rng)];
    } else {
      idx = admissible_next(shape);
    }
    std::map<StackedLabels, long long> next;
    for (const auto& [labels, coeff] : terms) {
      SurgeryResult r =
          (opts.fast_path && local_idempotent_side(shape, labels, idx) >= 0)
              ? local_idempotent_fast_path(shape, labels, idx)
              : surgery(shape, labels, idx);
      for (const SurgeryTerm& term : r.terms) {
        auto it = next.emplace(term.labels, 0).first;
        it->second += coeff * term.coeff;
        if (it->second == 0) next.erase(it);
      }
    }
    shape = shape_after_surgery(shape, idx);
    terms = std::move(next);
  }

  Element out;
  for (const auto& [labels, coeff] : terms) {
    if (labels.row0 != labels.row1)
      throw std::logic_error("rows disagree after the last surgery");
    out.add({a.bottom, Weight(shape.n, labels.row0), b.top},
            {coeff, 0});
  }
  return out;
}

Element element_mul(const Element& x, const Element& y,
                    const MultiplyOptions& opts) {
  Element out;
  for (const auto& [tx, cx] : x.terms())
    for (const auto& [ty, cy] : y.terms()) {
      Element part = multiply(tx, ty, opts);
      part *= cx * cy;
      out += part;
    }
  return out;
}

Element unit_element(int n) {
  Element out;
  if (n == 0) {
    out.add(OrientedTriple{}, {1, 0});
    return out;
  }
  for (const Weight& lam : all_weights(n)) out.add({lam, lam, lam}, {1, 0});
  return out;
}

OrientedTriple contract_triple(const OrientedTriple& t, int k) {
  if (!is_contractible(t.bottom, k) || !is_contractible(t.orient, k) ||
      !is_contractible(t.top, k))
    throw std::invalid_argument("triple is not contractible at k=" +
                                std::to_string(k));
  OrientedTriple out{contract_weight(t.bottom, k), contract_weight(t.orient, k),
                     contract_weight(t.top, k)};
  if (!triple_oriented(out))
    throw std::logic_error("contraction broke the orientation");
  return out;
}

OrientedTriple star(const OrientedTriple& t) {
  return {t.top, t.orient, t.bottom};
}

Element star(const Element& x) {
  Element out;
  for (const auto& [t, c] : x.terms()) out.add(star(t), c);
  return out;
}

}  // namespace arcd
