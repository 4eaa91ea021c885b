#include "arcd/cupdiagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcd {

std::string Arc::str() const {
  std::string out;
  if (is_cup())
    out = "(" + std::to_string(l) + "," + std::to_string(r) + ")";
  else
    out = "ray " + std::to_string(l);
  if (dec) out += "*";
  return out;
}

bool CupDiagram::contains(const Arc& a) const {
  const auto& where = a.is_cup() ? cups : rays;
  return std::find(where.begin(), where.end(), a) != where.end();
}

const Arc* CupDiagram::cup_at(int pos) const {
  for (const Arc& c : cups)
    if (c.l == pos || c.r == pos) return &c;
  return nullptr;
}

const Arc* CupDiagram::arc_at(int pos) const {
  if (const Arc* c = cup_at(pos)) return c;
  for (const Arc& r : rays)
    if (r.l == pos) return &r;
  return nullptr;
}

CupDiagram cup_diagram(const Weight& w) {
  CupDiagram d;
  d.n = w.size();
  std::vector<int> stack;
  std::vector<int> loose_ups;
  for (int j = 0; j < w.size(); ++j) {
    if (!w.up(j)) {
      stack.push_back(j);
    } else if (!stack.empty()) {
      d.cups.push_back(Arc::cup(stack.back(), j, false));
      stack.pop_back();
    } else {
      loose_ups.push_back(j);
    }
  }
  for (size_t a = 0; a + 1 < loose_ups.size(); a += 2)
    d.cups.push_back(Arc::cup(loose_ups[a], loose_ups[a + 1], true));
  if (loose_ups.size() % 2 == 1) d.rays.push_back(Arc::ray(loose_ups.back(), true));
  for (int p : stack) d.rays.push_back(Arc::ray(p, false));
  std::sort(d.cups.begin(), d.cups.end());
  std::sort(d.rays.begin(), d.rays.end());
  return d;
}

Weight underlying_weight(const CupDiagram& d) {
  uint32_t bits = 0;
  for (const Arc& c : d.cups) {
    bits |= 1u << c.r;
    if (c.dec) bits |= 1u << c.l;
  }
  for (const Arc& r : d.rays)
    if (r.dec) bits |= 1u << r.l;
  return Weight(d.n, bits);
}

bool is_oriented(const CupDiagram& d, const Weight& nu) {
  if (nu.size() != d.n) return false;
  for (const Arc& c : d.cups)
    if ((nu.up(c.l) == nu.up(c.r)) != c.dec) return false;
  for (const Arc& r : d.rays)
    if (nu.up(r.l) != r.dec) return false;
  return true;
}

int degree(const CupDiagram& d, const Weight& nu) {
  if (!is_oriented(d, nu))
    throw std::invalid_argument("degree of a non-oriented diagram");
  int clockwise = 0;
  for (const Arc& c : d.cups)
    if (!nu.up(c.r)) ++clockwise;
  return clockwise;
}

int breadth(const Arc& a) {
  if (a.is_ray()) throw std::invalid_argument("breadth of a ray");
  return a.dec ? (a.l + a.r + 1) / 2 : (a.r - a.l + 1) / 2;
}

bool covers(const Arc& p, const Arc& q) {
  if (p.is_ray() || q.is_ray()) throw std::invalid_argument("covers needs cups");
  return p.l < q.l && q.r < p.r;
}

bool doubly_covers(const Arc& p, const Arc& q) {
  if (p.is_ray() || q.is_ray()) throw std::invalid_argument("doubly_covers needs cups");
  return p.dec && q.r < p.l;
}

bool commute(const CupDiagram& mu, const Arc& p, const Arc& q) {
  if (!mu.contains(p) || !mu.contains(q) || p == q)
    throw std::invalid_argument("commute needs two distinct cups of the diagram");
  auto below = [](const Arc& a, const Arc& b) { return covers(b, a); };         // a nested in b
  auto far_below = [](const Arc& a, const Arc& b) { return doubly_covers(b, a); };
  for (const Arc& r : mu.cups) {
    if (r == p || r == q) continue;
    if (below(q, r) && below(r, p)) return true;
    if (below(p, r) && below(r, q)) return true;
    if (below(q, r) && far_below(r, p)) return true;
    if (below(p, r) && far_below(r, q)) return true;
    if (far_below(q, r) && far_below(r, p)) return true;
    if (far_below(p, r) && far_below(r, q)) return true;
  }
  return !covers(p, q) && !covers(q, p) && !doubly_covers(p, q) && !doubly_covers(q, p);
}

Weight remove_cup(const Weight& mu, const Arc& p) {
  if (!p.is_cup() || !cup_diagram(mu).contains(p))
    throw std::invalid_argument("remove_cup needs a cup of the diagram");
  return mu.flipped2(p.l, p.r);
}

bool adjacent(const Weight& mu, const Arc& p, const Arc& t) {
  if (!cup_diagram(mu).contains(p))
    throw std::invalid_argument("adjacent: p is not a cup of mu");
  if (!t.is_cup() || !cup_diagram(remove_cup(mu, p)).contains(t))
    throw std::invalid_argument("adjacent: t is not a cup of mu - p");
  int shared = (t.l == p.l || t.l == p.r) + (t.r == p.l || t.r == p.r);
  return shared == 1;
}

std::optional<Arc> generated_cup(const Weight& mu, const Arc& p, const Arc& t) {
  if (!adjacent(mu, p, t))
    throw std::invalid_argument("generated_cup needs an adjacent pair");
  std::optional<Arc> found;
  for (const Arc& u : cup_diagram(mu).cups) {
    if (u == p) continue;
    if (u.l == t.l || u.r == t.r) {
      if (found) throw std::logic_error("generated cup is not unique");
      found = u;
    }
  }
  return found;
}

int kappa(const Weight& lam, const Weight& mu) {
  if (lam.size() != mu.size()) throw std::invalid_argument("kappa needs equal n");
  uint32_t diff = lam.bits() ^ mu.bits();
  std::vector<int> pos;
  for (int j = 0; j < mu.size(); ++j)
    if ((diff >> j) & 1u) pos.push_back(j);
  if (pos.size() != 2) throw std::invalid_argument("kappa: weights do not differ by a cup");
  CupDiagram dmu = cup_diagram(mu);
  const Arc* p = dmu.cup_at(pos[0]);
  if (!p || p->l != pos[0] || p->r != pos[1] || remove_cup(mu, *p) != lam)
    throw std::invalid_argument("kappa: lam is not mu minus a cup");
  return (p->l + p->r + 1) / 2;
}

Arc contract_cup(const Arc& p, int k) {
  int lo = (k == 0) ? 0 : k - 1;
  auto shift = [&](int pos) {
    if (pos == lo || pos == lo + 1)
      throw std::invalid_argument("arc touches the contracted positions");
    return pos > lo ? pos - 2 : pos;
  };
  Arc out = p;
  out.l = shift(p.l);
  if (p.is_cup()) out.r = shift(p.r);
  if (out.l == 0 && k != 0) out.dec = !out.dec;
  return out;
}

bool is_contractible(const Weight& w, int k) {
  if (k < 0 || k >= w.size()) return false;
  CupDiagram d = cup_diagram(w);
  if (k == 0) return d.contains(Arc::cup(0, 1, true));
  return d.contains(Arc::cup(k - 1, k, false));
}

std::string render(const CupDiagram& d) {
  std::vector<std::string> tok(d.n);
  for (const Arc& c : d.cups) {
    tok[c.l] = c.dec ? "(*" : "(";
    tok[c.r] = ")";
  }
  for (const Arc& r : d.rays) tok[r.l] = r.dec ? "!" : "|";
  std::string out;
  for (const auto& t : tok) out += t;
  return out;
}

}  // namespace arcd
