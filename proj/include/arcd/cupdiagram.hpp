#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "arcd/weight.hpp"

namespace arcd {

// One strand of a cup diagram: a cup joining positions l < r, or a ray from
// position l to the bottom edge (r = -1). Decorations live on the arc.
struct Arc {
  int l = 0;
  int r = -1;
  bool dec = false;

  static Arc cup(int l, int r, bool dec) { return {l, r, dec}; }
  static Arc ray(int at, bool dec) { return {at, -1, dec}; }
  bool is_cup() const { return r >= 0; }
  bool is_ray() const { return r < 0; }

  friend auto operator<=>(const Arc&, const Arc&) = default;
  std::string str() const;
};

struct CupDiagram {
  int n = 0;
  std::vector<Arc> cups;  // sorted by left endpoint
  std::vector<Arc> rays;  // sorted by position

  bool contains(const Arc& a) const;
  const Arc* cup_at(int pos) const;  // cup having pos as an endpoint
  const Arc* arc_at(int pos) const;
  friend bool operator==(const CupDiagram&, const CupDiagram&) = default;
};

// The diagram of a weight: match down..up pairs front to back, pair the
// leftover ups left to right into decorated cups, then draw rays (the last
// unpaired up decorated, leftover downs plain).
CupDiagram cup_diagram(const Weight& w);

// The unique weight orienting every cup anticlockwise (inverse of cup_diagram).
Weight underlying_weight(const CupDiagram& d);

// nu orients d: undecorated cups see opposite labels, decorated cups equal
// labels, undecorated rays down, decorated rays up.
bool is_oriented(const CupDiagram& d, const Weight& nu);

// Number of clockwise cups (right vertex labelled down). Throws unless
// is_oriented(d, nu). Caps use the same rule, so this serves both.
int degree(const CupDiagram& d, const Weight& nu);

// Half the span for an undecorated cup, half the coordinate sum plus the
// wall distance for a decorated one; in integer coordinates
// (r-l+1)/2 resp. (l+r+1)/2. Throws on rays.
int breadth(const Arc& a);

// q nested strictly inside p.
bool covers(const Arc& p, const Arc& q);

// p decorated and q entirely to its left.
bool doubly_covers(const Arc& p, const Arc& q);

// Symmetric commutation of two cups of mu: either some cup separates them
// ((i) nested between, (ii) between with double covers), or neither (doubly)
// covers the other.
bool commute(const CupDiagram& mu, const Arc& p, const Arc& q);

// Flips the two endpoint labels of p (a cup of the diagram of mu).
Weight remove_cup(const Weight& mu, const Arc& p);

// t (a cup of (mu - p)'s diagram) shares exactly one vertex with p.
bool adjacent(const Weight& mu, const Arc& p, const Arc& t);

// The cup of mu's diagram, other than p, sharing the left or right endpoint
// with t; empty when no such cup exists.
std::optional<Arc> generated_cup(const Weight& mu, const Arc& p, const Arc& t);

// kappa(lam, mu) = (l + r + 1) / 2 for the cup p of mu's diagram with
// lam = mu - p; validates that relationship.
int kappa(const Weight& lam, const Weight& mu);

// Image of an arc under the deletion of positions (k-1, k) (or (0, 1) for
// k = 0): endpoints above the gap shift down by two; the decoration flips
// exactly when the image's left endpoint is position 0 and k != 0, because
// every k != 0 deletion removes one up label and the parity fix then toggles
// the first remaining label. Throws if the arc touches the deleted positions.
Arc contract_cup(const Arc& p, int k);

// One token per position: '(' or '(*' opens a cup (star = decorated), ')'
// closes it, '|' is a ray, '!' a decorated ray.
std::string render(const CupDiagram& d);

}  // namespace arcd
