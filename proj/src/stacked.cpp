#include "arcd/stacked.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace arcd {

namespace {

int vid(VertexRef v, int n) { return v.level * n + v.pos; }

// Union-find over the 2n vertices.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// One strand end seen from a vertex: either a neighbour with the label
// relation across the strand (equal for decorated arcs and verticals,
// opposite for plain cups and caps), or a boundary ray forcing the label.
struct Incidence {
  struct Edge {
    VertexRef to;
    bool equal;
  };
  std::vector<Edge> edges;
  std::optional<bool> forced_up;  // boundary ray: up iff decorated
};

Incidence incidence(const StackedShape& s, VertexRef v) {
  Incidence inc;
  if (v.level == 0) {
    const Arc* below = s.bottom.arc_at(v.pos);
    if (below == nullptr) throw std::logic_error("uncovered vertex");
    if (below->is_cup()) {
      int other = below->l == v.pos ? below->r : below->l;
      inc.edges.push_back({{other, 0}, below->dec});
    } else {
      inc.forced_up = below->dec;
    }
    if (const Arc* p = s.pair_at(v.pos)) {
      int other = p->l == v.pos ? p->r : p->l;
      inc.edges.push_back({{other, 0}, p->dec});
    } else {
      inc.edges.push_back({{v.pos, 1}, true});
    }
  } else {
    if (const Arc* p = s.pair_at(v.pos)) {
      int other = p->l == v.pos ? p->r : p->l;
      inc.edges.push_back({{other, 1}, p->dec});
    } else {
      inc.edges.push_back({{v.pos, 0}, true});
    }
    const Arc* above = s.top.arc_at(v.pos);
    if (above == nullptr) throw std::logic_error("uncovered vertex");
    if (above->is_cup()) {
      int other = above->l == v.pos ? above->r : above->l;
      inc.edges.push_back({{other, 1}, above->dec});
    } else {
      inc.forced_up = above->dec;
    }
  }
  return inc;
}

bool up_for(Orientation o) { return o == Orientation::AntiClockwise; }

}  // namespace

std::string VertexRef::str() const {
  return "[" + std::to_string(pos) + "," + std::to_string(level) + "]";
}

const Arc* StackedShape::pair_at(int pos) const {
  for (const Arc& p : pairs)
    if (p.l == pos || p.r == pos) return &p;
  return nullptr;
}

bool StackedShape::has_vertical(int pos) const {
  return std::binary_search(verticals.begin(), verticals.end(), pos);
}

void StackedShape::validate() const {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("bad length");
  if (bottom.n != n || top.n != n)
    throw std::invalid_argument("row length mismatch");
  std::vector<int> cover(n, 0);
  auto touch = [&](int pos) {
    if (pos < 0 || pos >= n) throw std::invalid_argument("position range");
    ++cover[pos];
  };
  for (size_t i = 0; i < pairs.size(); ++i) {
    const Arc& p = pairs[i];
    if (!p.is_cup() || p.l >= p.r) throw std::invalid_argument("bad pair");
    if (i > 0 && pairs[i - 1].l >= p.l)
      throw std::invalid_argument("pairs not sorted");
    touch(p.l);
    touch(p.r);
  }
  for (size_t i = 0; i < verticals.size(); ++i) {
    if (i > 0 && verticals[i - 1] >= verticals[i])
      throw std::invalid_argument("verticals not sorted");
    touch(verticals[i]);
  }
  for (int c : cover)
    if (c != 1) throw std::invalid_argument("middle row must cover each position once");
  for (size_t i = 0; i < pairs.size(); ++i)
    for (size_t j = i + 1; j < pairs.size(); ++j) {
      const Arc &a = pairs[i], &b = pairs[j];
      if (b.l < a.r && a.r < b.r) throw std::invalid_argument("crossing pairs");
    }
  for (const CupDiagram* d : {&bottom, &top}) {
    std::fill(cover.begin(), cover.end(), 0);
    for (const Arc& c : d->cups) {
      if (!c.is_cup() || c.l >= c.r) throw std::invalid_argument("bad cup");
      touch(c.l);
      touch(c.r);
    }
    for (const Arc& r : d->rays) {
      if (!r.is_ray()) throw std::invalid_argument("bad ray");
      touch(r.l);
    }
    for (int c : cover)
      if (c != 1) throw std::invalid_argument("outer row must cover each position once");
  }
}

StackedShape stack_shapes(const CupDiagram& bottom, const CupDiagram& middle,
                          const CupDiagram& top) {
  StackedShape s;
  s.n = middle.n;
  s.bottom = bottom;
  s.top = top;
  s.pairs = middle.cups;
  s.verticals.reserve(middle.rays.size());
  for (const Arc& r : middle.rays) s.verticals.push_back(r.l);
  std::sort(s.verticals.begin(), s.verticals.end());
  s.validate();
  return s;
}

uint32_t parse_label_row(const std::string& text) {
  if (text.size() > static_cast<size_t>(kMaxN))
    throw std::invalid_argument("row too long");
  uint32_t row = 0;
  for (size_t j = 0; j < text.size(); ++j) {
    if (text[j] == '^')
      row |= uint32_t{1} << j;
    else if (text[j] != 'v')
      throw std::invalid_argument("label rows use ^ and v only");
  }
  return row;
}

std::string label_row_str(uint32_t row, int n) {
  std::string out(static_cast<size_t>(n), 'v');
  for (int j = 0; j < n; ++j)
    if ((row >> j) & 1u) out[j] = '^';
  return out;
}

ComponentSet::ComponentSet(const StackedShape& s) : n_(s.n) {
  int total = 2 * s.n;
  Dsu dsu(total);
  struct Strand {
    VertexRef a, b;
    bool dec;
  };
  std::vector<Strand> strands;
  struct BoundaryEnd {
    VertexRef at;
    bool dec;
    bool south;
  };
  std::vector<BoundaryEnd> ends;
  for (const Arc& c : s.bottom.cups) strands.push_back({{c.l, 0}, {c.r, 0}, c.dec});
  for (const Arc& r : s.bottom.rays) ends.push_back({{r.l, 0}, r.dec, true});
  for (const Arc& p : s.pairs) {
    strands.push_back({{p.l, 0}, {p.r, 0}, p.dec});
    strands.push_back({{p.l, 1}, {p.r, 1}, p.dec});
  }
  for (int v : s.verticals) strands.push_back({{v, 0}, {v, 1}, false});
  for (const Arc& c : s.top.cups) strands.push_back({{c.l, 1}, {c.r, 1}, c.dec});
  for (const Arc& r : s.top.rays) ends.push_back({{r.l, 1}, r.dec, false});

  for (const Strand& e : strands) dsu.unite(vid(e.a, s.n), vid(e.b, s.n));

  std::vector<int> comp_of(total, -1);
  index_.assign(total, -1);
  for (int level = 0; level < 2; ++level)
    for (int pos = 0; pos < s.n; ++pos) {
      VertexRef v{pos, level};
      int root = dsu.find(vid(v, s.n));
      if (comp_of[root] == -1) {
        comp_of[root] = static_cast<int>(comps_.size());
        comps_.emplace_back();
      }
      int id = comp_of[root];
      index_[vid(v, s.n)] = id;
      comps_[id].vertices.push_back(v);
    }
  std::vector<int> south(comps_.size(), 0), north(comps_.size(), 0);
  for (const Strand& e : strands)
    if (e.dec) ++comps_[index_[vid(e.a, s.n)]].decorations;
  for (const BoundaryEnd& e : ends) {
    int id = index_[vid(e.at, s.n)];
    if (e.dec) ++comps_[id].decorations;
    ++(e.south ? south : north)[id];
  }
  for (size_t i = 0; i < comps_.size(); ++i) {
    Component& c = comps_[i];
    std::sort(c.vertices.begin(), c.vertices.end());
    c.tag = c.vertices.back();
    if (south[i] == 0 && north[i] == 0)
      c.kind = ComponentKind::Circle;
    else if (south[i] > 0 && north[i] > 0)
      c.kind = ComponentKind::PropagatingLine;
    else
      c.kind = ComponentKind::NonPropagatingLine;
  }
}

int ComponentSet::index_of(VertexRef v) const {
  if (v.pos < 0 || v.pos >= n_ || v.level < 0 || v.level > 1)
    throw std::out_of_range("vertex out of range");
  return index_[v.level * n_ + v.pos];
}

bool shape_orientable(const StackedShape& s) {
  ComponentSet cs(s);
  for (const Component& c : cs.all()) {
    bool odd = c.decorations % 2 != 0;
    if (odd != (c.kind == ComponentKind::NonPropagatingLine)) return false;
  }
  return true;
}

bool is_oriented(const StackedShape& s, const StackedLabels& l) {
  auto arc_ok = [&](const Arc& a, int level) {
    if (a.is_ray()) return l.up({a.l, level}) == a.dec;
    return (l.up({a.l, level}) == l.up({a.r, level})) == a.dec;
  };
  for (const Arc& a : s.bottom.cups)
    if (!arc_ok(a, 0)) return false;
  for (const Arc& a : s.bottom.rays)
    if (!arc_ok(a, 0)) return false;
  for (const Arc& a : s.top.cups)
    if (!arc_ok(a, 1)) return false;
  for (const Arc& a : s.top.rays)
    if (!arc_ok(a, 1)) return false;
  for (const Arc& p : s.pairs)
    if (!arc_ok(p, 0) || !arc_ok(p, 1)) return false;
  for (int v : s.verticals)
    if (l.up({v, 0}) != l.up({v, 1})) return false;
  return true;
}

Orientation orient_of(const StackedShape& s, const StackedLabels& l,
                      const Component& c) {
  if (c.kind != ComponentKind::Circle) return Orientation::AntiClockwise;
  (void)s;
  return l.up(c.tag) ? Orientation::AntiClockwise : Orientation::Clockwise;
}

int sign_at(const StackedShape& s, const StackedLabels& l,
            const ComponentSet& cs, VertexRef v) {
  Orientation o = orient_of(s, l, cs.at(v));
  return l.up(v) == up_for(o) ? 1 : -1;
}

std::optional<StackedLabels> orient_component(const StackedShape& s,
                                              StackedLabels l,
                                              const ComponentSet& cs,
                                              const Component& c,
                                              Orientation target) {
  bool circle = c.kind == ComponentKind::Circle;
  if (!circle && target == Orientation::Clockwise) return std::nullopt;

  VertexRef start = c.tag;
  bool start_up = up_for(target);
  if (!circle) {
    // Grow the forced labelling from one of the boundary rays.
    bool found = false;
    for (VertexRef v : c.vertices) {
      Incidence inc = incidence(s, v);
      if (inc.forced_up) {
        start = v;
        start_up = *inc.forced_up;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("line without a boundary ray");
  }

  std::vector<std::optional<bool>> assigned(2 * s.n);
  std::vector<VertexRef> queue{start};
  assigned[vid(start, s.n)] = start_up;
  while (!queue.empty()) {
    VertexRef v = queue.back();
    queue.pop_back();
    bool v_up = *assigned[vid(v, s.n)];
    Incidence inc = incidence(s, v);
    if (inc.forced_up && *inc.forced_up != v_up) return std::nullopt;
    for (const Incidence::Edge& e : inc.edges) {
      bool want = e.equal ? v_up : !v_up;
      auto& slot = assigned[vid(e.to, s.n)];
      if (!slot) {
        slot = want;
        queue.push_back(e.to);
      } else if (*slot != want) {
        return std::nullopt;
      }
    }
  }
  (void)cs;
  for (VertexRef v : c.vertices) {
    bool want = *assigned[vid(v, s.n)];
    if (l.up(v) != want) l.flip(v);
  }
  return l;
}

bool surgery_admissible(const StackedShape& s, int pair_index) {
  const Arc& cut = s.pairs.at(static_cast<size_t>(pair_index));
  for (size_t j = 0; j < s.pairs.size(); ++j) {
    if (static_cast<int>(j) == pair_index) continue;
    if (covers(s.pairs[j], cut) || doubly_covers(s.pairs[j], cut)) return false;
  }
  return true;
}

int admissible_next(const StackedShape& s) {
  if (s.pairs.empty()) return -1;
  for (int i = static_cast<int>(s.pairs.size()) - 1; i >= 0; --i)
    if (surgery_admissible(s, i)) return i;
  throw std::logic_error("no admissible pair");
}

StackedShape shape_after_surgery(const StackedShape& s, int pair_index) {
  StackedShape b = s;
  Arc cut = b.pairs.at(static_cast<size_t>(pair_index));
  b.pairs.erase(b.pairs.begin() + pair_index);
  b.verticals.insert(
      std::upper_bound(b.verticals.begin(), b.verticals.end(), cut.l), cut.l);
  b.verticals.insert(
      std::upper_bound(b.verticals.begin(), b.verticals.end(), cut.r), cut.r);
  return b;
}

SurgeryResult surgery(const StackedShape& s, const StackedLabels& l,
                      int pair_index) {
  if (!is_oriented(s, l)) throw std::logic_error("surgery on unoriented diagram");
  if (!surgery_admissible(s, pair_index))
    throw std::logic_error("surgery on inadmissible pair");
  const Arc cut = s.pairs.at(static_cast<size_t>(pair_index));
  const VertexRef cap_l{cut.l, 0}, cap_r{cut.r, 0};
  const VertexRef cup_l{cut.l, 1}, cup_r{cut.r, 1};

  ComponentSet cs(s);
  SurgeryResult out;
  out.shape = shape_after_surgery(s, pair_index);
  ComponentSet csb(out.shape);

  int i0 = cs.index_of(cap_l);
  int i1 = cs.index_of(cup_l);
  auto emit = [&](const StackedLabels& labels, int coeff) {
    if (!is_oriented(out.shape, labels))
      throw std::logic_error("surgery produced an unoriented labelling");
    out.terms.push_back({labels, coeff});
  };

  if (i0 != i1) {
    const Component& c0 = cs.all()[i0];
    const Component& c1 = cs.all()[i1];
    bool lines = c0.kind != ComponentKind::Circle && c1.kind != ComponentKind::Circle;
    if (lines) {
      out.kind = SurgeryKind::Reconnect;
      if (csb.size() != cs.size())
        throw std::logic_error("reconnect changed the component count");
      if (c0.kind == ComponentKind::PropagatingLine &&
          c1.kind == ComponentKind::PropagatingLine &&
          l.up(cap_l) == l.up(cup_l) && l.up(cap_r) == l.up(cup_r))
        emit(l, 1);
      return out;
    }
    out.kind = SurgeryKind::Merge;
    if (csb.size() != cs.size() - 1)
      throw std::logic_error("merge did not drop the component count");
    bool up0 = up_for(orient_of(s, l, c0));
    bool up1 = up_for(orient_of(s, l, c1));
    const Component& merged = csb.at(cap_l);
    if (up0 && up1) {
      auto relabel = orient_component(out.shape, l, csb, merged,
                                      Orientation::AntiClockwise);
      if (!relabel) throw std::logic_error("merged component rejects its labelling");
      emit(*relabel, 1);
    } else if (up0 != up1) {
      VertexRef probe = up1 ? cap_l : cup_l;
      auto relabel =
          orient_component(out.shape, l, csb, merged, Orientation::Clockwise);
      if (relabel)
        emit(*relabel,
             sign_at(s, l, cs, probe) * sign_at(out.shape, *relabel, csb, probe));
    }
    return out;
  }

  out.kind = SurgeryKind::Split;
  if (csb.size() != cs.size() + 1)
    throw std::logic_error("split did not raise the component count");
  const Component& c = cs.all()[i0];
  const Component& left = csb.at(cup_l);
  const Component& right = csb.at(cup_r);
  int base = cut.l % 2 == 0 ? 1 : -1;
  if (up_for(orient_of(s, l, c))) {
    auto first = orient_component(out.shape, l, csb, left,
                                  Orientation::AntiClockwise);
    if (first)
      first = orient_component(out.shape, *first, csb, right,
                               Orientation::Clockwise);
    if (first) emit(*first, base * sign_at(out.shape, *first, csb, cup_r));
    auto second =
        orient_component(out.shape, l, csb, left, Orientation::Clockwise);
    if (second)
      second = orient_component(out.shape, *second, csb, right,
                                Orientation::AntiClockwise);
    if (second)
      emit(*second, base * (cut.dec ? 1 : -1) *
                        sign_at(out.shape, *second, csb, cup_l));
  } else {
    auto both = orient_component(out.shape, l, csb, left, Orientation::Clockwise);
    if (both)
      both = orient_component(out.shape, *both, csb, right,
                              Orientation::Clockwise);
    if (both)
      emit(*both, base * sign_at(s, l, cs, cup_l) *
                      sign_at(out.shape, *both, csb, cup_l) *
                      sign_at(out.shape, *both, csb, cup_r));
  }
  return out;
}

int local_idempotent_side(const StackedShape& s, const StackedLabels& l,
                          int pair_index) {
  const Arc cut = s.pairs.at(static_cast<size_t>(pair_index));
  ComponentSet cs(s);
  for (int level : {0, 1}) {
    const Component& c = cs.at({cut.l, level});
    if (c.kind != ComponentKind::Circle || c.vertices.size() != 2) continue;
    if (orient_of(s, l, c) == Orientation::AntiClockwise) return level;
  }
  return -1;
}

SurgeryResult local_idempotent_fast_path(const StackedShape& s,
                                         const StackedLabels& l,
                                         int pair_index) {
  if (!is_oriented(s, l))
    throw std::logic_error("fast path on unoriented diagram");
  if (!surgery_admissible(s, pair_index))
    throw std::logic_error("fast path on inadmissible pair");
  int side = local_idempotent_side(s, l, pair_index);
  if (side < 0)
    throw std::logic_error("no small anticlockwise circle at the pair");
  const Arc cut = s.pairs.at(static_cast<size_t>(pair_index));

  SurgeryResult out;
  out.kind = SurgeryKind::Merge;
  out.shape = shape_after_surgery(s, pair_index);
  // The deleted circle's two positions become verticals; the surviving
  // component keeps its labels, so the freed positions read across from the
  // other row and every sign cancels.
  StackedLabels labels = l;
  for (int pos : {cut.l, cut.r}) {
    VertexRef mine{pos, side};
    if (labels.up(mine) != labels.up({pos, 1 - side})) labels.flip(mine);
  }
  if (!is_oriented(out.shape, labels))
    throw std::logic_error("fast path produced an unoriented labelling");
  out.terms.push_back({labels, 1});
  return out;
}

}  // namespace arcd
