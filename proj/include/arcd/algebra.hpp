#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arcd/scalars.hpp"
#include "arcd/stacked.hpp"
#include "arcd/weight.hpp"

namespace arcd {

// Basis vector of the arc algebra: the diagram of `bottom` below the weight
// line, the mirror of `top`'s diagram above it, both oriented by `orient`.
struct OrientedTriple {
  Weight bottom;
  Weight orient;
  Weight top;

  friend auto operator<=>(const OrientedTriple&, const OrientedTriple&) = default;
  std::string str() const;  // "(v^^v,v^^v,^^vv)"
};

// Whether orient really orients both halves.
bool triple_oriented(const OrientedTriple& t);

// Clockwise cups of the lower half plus clockwise caps of the upper half.
int triple_degree(const OrientedTriple& t);

// All basis triples of length n in a fixed order: bottom weight outermost,
// then the orientation, then the top weight, each in weight order. n = 0
// gives the single empty triple.
std::vector<OrientedTriple> circle_basis(int n);

// Linear combination of basis triples over the Gaussian integers. Zero
// coefficients are never stored, so the zero element has no terms.
class Element {
 public:
  Element() = default;
  explicit Element(const OrientedTriple& t, GaussInt c = {1, 0});

  bool is_zero() const { return terms_.empty(); }
  const std::map<OrientedTriple, GaussInt>& terms() const { return terms_; }
  GaussInt coeff(const OrientedTriple& t) const;
  void add(const OrientedTriple& t, GaussInt c);

  Element& operator+=(const Element& o);
  Element& operator*=(GaussInt c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(const Element& a, const Element& b);
  friend bool operator==(const Element&, const Element&) = default;
  std::string str() const;

 private:
  std::map<OrientedTriple, GaussInt> terms_;
};

// How a product walks its surgery steps. The canonical order always cuts the
// admissible pair with the largest left endpoint; shuffle picks uniformly
// among the admissible pairs instead (every order gives the same product, and
// the randomised walk exercises that). fast_path switches on the small-circle
// shortcut wherever it applies.
struct MultiplyOptions {
  bool fast_path = false;
  bool shuffle = false;
  uint64_t seed = 0;
};

// Product of two basis triples: zero unless a's top weight equals b's bottom
// weight, otherwise the two diagrams stack along the shared middle and the
// pairs are cut one at a time, each cut rewriting the label terms.
Element multiply(const OrientedTriple& a, const OrientedTriple& b,
                 const MultiplyOptions& opts = {});

// Bilinear extension to linear combinations.
Element element_mul(const Element& x, const Element& y,
                    const MultiplyOptions& opts = {});

// The identity: the sum of (lam, lam, lam) over all weights of length n.
Element unit_element(int n);

// Componentwise weight contraction at k; requires all three weights
// contractible there. The span of such triples is closed under products and
// this map respects them.
OrientedTriple contract_triple(const OrientedTriple& t, int k);

// The transpose involution: reflect a diagram in the weight line. On triples
// it swaps bottom and top; it extends coefficientwise to elements and
// reverses products.
OrientedTriple star(const OrientedTriple& t);
Element star(const Element& x);

}  // namespace arcd
