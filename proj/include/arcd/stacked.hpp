#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcd/cupdiagram.hpp"

namespace arcd {

// A vertex of a stacked diagram: position 0..n-1 on level 0 (lower weight
// line) or level 1 (upper weight line).
struct VertexRef {
  int pos = 0;
  int level = 0;

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
  std::string str() const;
};

// The shape of a height-one stacked circle diagram. A cup diagram hangs
// below level 0 (its rays reach the southern edge), a cap diagram sits above
// level 1 (rays reach the northern edge), and the doubled middle row lies
// between the levels: each pair contributes a cap on level 0 and a cup on
// level 1, both carrying the pair's decoration, while verticals are plain
// interior strands.
struct StackedShape {
  int n = 0;
  CupDiagram bottom;
  CupDiagram top;
  std::vector<Arc> pairs;      // sorted by left endpoint
  std::vector<int> verticals;  // sorted

  const Arc* pair_at(int pos) const;  // pair having pos as an endpoint
  bool has_vertical(int pos) const;
  void validate() const;  // throws std::invalid_argument

  friend bool operator==(const StackedShape&, const StackedShape&) = default;
};

// Stacks one circle diagram on top of another along a shared middle diagram:
// middle cups double into pairs, middle rays fuse into verticals (the two
// ray decorations cancel).
StackedShape stack_shapes(const CupDiagram& bottom, const CupDiagram& middle,
                          const CupDiagram& top);

// Labels of a stacked diagram: one symbol row per level, bit j set = up at
// position j. Rows are raw bit masks, not Weight values, because component
// relabelling is defined on arbitrary rows.
struct StackedLabels {
  uint32_t row0 = 0;
  uint32_t row1 = 0;

  bool up(VertexRef v) const {
    return ((v.level == 0 ? row0 : row1) >> v.pos) & 1u;
  }
  void flip(VertexRef v) {
    (v.level == 0 ? row0 : row1) ^= uint32_t{1} << v.pos;
  }

  friend auto operator<=>(const StackedLabels&, const StackedLabels&) = default;
};

// Parses one row of labels, "^" up and "v" down, leftmost character at
// position 0.
uint32_t parse_label_row(const std::string& text);
std::string label_row_str(uint32_t row, int n);

enum class ComponentKind { Circle, PropagatingLine, NonPropagatingLine };
enum class Orientation { Clockwise, AntiClockwise };

// A connected component of the strands: a circle avoids both outer edges, a
// propagating line joins them, a non-propagating line returns to the edge it
// started from. The tag is the rightmost vertex, upper level on ties.
struct Component {
  ComponentKind kind = ComponentKind::Circle;
  std::vector<VertexRef> vertices;  // sorted
  int decorations = 0;
  VertexRef tag;
};

class ComponentSet {
 public:
  explicit ComponentSet(const StackedShape& s);

  const std::vector<Component>& all() const { return comps_; }
  int size() const { return static_cast<int>(comps_.size()); }
  int index_of(VertexRef v) const;
  const Component& at(VertexRef v) const { return comps_[index_of(v)]; }

 private:
  std::vector<Component> comps_;
  std::vector<int> index_;
  int n_ = 0;
};

// A shape admits labels exactly when every circle and propagating line
// carries evenly many decorations and every non-propagating line oddly many.
bool shape_orientable(const StackedShape& s);

// Local rules: undecorated cup, cap or vertical sees equal-or-opposite labels
// (opposite for cups and caps, equal for verticals), decorated cups and caps
// equal labels, boundary rays force down when plain and up when decorated.
bool is_oriented(const StackedShape& s, const StackedLabels& l);

// Circles are clockwise when their tag reads down, anticlockwise when up;
// lines are always anticlockwise. Requires is_oriented.
Orientation orient_of(const StackedShape& s, const StackedLabels& l,
                      const Component& c);

// +1 when the label at v agrees with the component's travel symbol (up on an
// anticlockwise component, down on a clockwise one), -1 otherwise. For
// circles this is independent of which of the two labellings is in force.
int sign_at(const StackedShape& s, const StackedLabels& l,
            const ComponentSet& cs, VertexRef v);

// Relabels exactly the vertices of c so the component gets the requested
// orientation, leaving every other component untouched. Empty when no such
// labelling exists: lines cannot run clockwise, and a component with the
// wrong decoration parity has no consistent labelling at all.
std::optional<StackedLabels> orient_component(const StackedShape& s,
                                              StackedLabels l,
                                              const ComponentSet& cs,
                                              const Component& c,
                                              Orientation target);

// A pair can be cut out exactly when no other intact pair covers or doubly
// covers it; then the two fresh verticals land neither inside another pair
// nor to the left of a decorated one, so the remaining middle row is again a
// doubled cup diagram with the verticals as rays.
bool surgery_admissible(const StackedShape& s, int pair_index);

// Index of the admissible pair with the largest left endpoint, -1 when no
// pairs remain. Some pair is always admissible: the rightmost decorated
// outermost pair qualifies, and so does every outermost pair to its right.
int admissible_next(const StackedShape& s);

// The shape with the pair cut out and verticals at its two endpoints.
StackedShape shape_after_surgery(const StackedShape& s, int pair_index);

enum class SurgeryKind { Merge, Split, Reconnect };

struct SurgeryTerm {
  StackedLabels labels;
  int coeff = 0;  // always +1 or -1; zero terms are dropped
};

struct SurgeryResult {
  SurgeryKind kind = SurgeryKind::Merge;
  StackedShape shape;
  std::vector<SurgeryTerm> terms;
};

// Cuts the pair out of an oriented diagram and rewrites the labels.
//
// The cap end and cup end of the pair sit on components c0 and c1. Distinct
// lines reconnect: the labels survive unchanged with coefficient 1 when both
// lines propagate and the fresh verticals read consistently, otherwise the
// result is zero. Distinct components otherwise merge into C:
//   (up, up)     -> +1 times C anticlockwise,
//   (down, up)   -> sign at the cap end before and after, C clockwise,
//   (up, down)   -> sign at the cup end before and after, C clockwise,
//   (down, down) -> zero,
// where a merged line that cannot run clockwise kills its term. A single
// component splits at the pair into C_l and C_r; with e the left endpoint,
// an anticlockwise C yields
//   (-1)^e [ sign'(right end) (C_l acw, C_r cw)
//            -+ sign'(left end) (C_l cw, C_r acw) ]
// with minus for a plain pair and plus for a decorated one, and a clockwise
// C yields (-1)^e sign(left end) sign'(left end) sign'(right end) times both
// pieces clockwise, primes read in the cut diagram. Unachievable labellings
// drop their term. Requires is_oriented and surgery_admissible; throws
// std::logic_error otherwise.
SurgeryResult surgery(const StackedShape& s, const StackedLabels& l,
                      int pair_index);

// Level (0 or 1) on which an end of the pair lies on an anticlockwise circle
// through exactly two vertices, or -1 when neither end does. Such a circle
// acts as a local idempotent: cutting the pair merely deletes it. Requires
// is_oriented.
int local_idempotent_side(const StackedShape& s, const StackedLabels& l,
                          int pair_index);

// Shortcut for that case, bypassing the sign bookkeeping: a single term with
// coefficient 1 whose labels copy the opposite row's values onto the two
// freed positions, everything else untouched. Same preconditions as surgery
// plus local_idempotent_side(s, l, pair_index) >= 0; throws std::logic_error
// otherwise. Agrees with surgery wherever it applies.
SurgeryResult local_idempotent_fast_path(const StackedShape& s,
                                         const StackedLabels& l,
                                         int pair_index);

}  // namespace arcd
