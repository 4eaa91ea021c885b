#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcd/algebra.hpp"
#include "arcd/cupdiagram.hpp"
#include "arcd/scalars.hpp"
#include "arcd/weight.hpp"

namespace arcd {

// Generator of the diagrammatic presentation: one idempotent per weight, one
// lowering and one raising arrow per pair (lam, mu) with lam = mu minus a cup.
struct HeckeGen {
  enum class Kind { Idempotent, Down, Up };
  Kind kind = Kind::Idempotent;
  Weight lower;  // the smaller weight (equal to upper for idempotents)
  Weight upper;

  std::string str() const;
};

HeckeGen idempotent_gen(const Weight& mu);
// Arrow from mu down to lam; throws unless lam = mu minus a cup.
HeckeGen down_gen(const Weight& lam, const Weight& mu);
// Arrow from lam up to mu; same validation.
HeckeGen up_gen(const Weight& lam, const Weight& mu);

// The dictionary into the arc algebra. Idempotents go to (mu, mu, mu); both
// arrows between lam and mu pick up i^kappa(lam, mu), the lowering arrow
// landing on (lam, lam, mu) and the raising arrow on (mu, lam, lam).
Element psi(const HeckeGen& g);

// Half the exponent bookkeeping of the presentation lives in kappa; the other
// half in this constant: C(p, q) = 2(2 b(q) + kappa(mu-q, mu) - kappa(mu-p, mu))
// for cups p, q of mu's diagram. The closed form recovers it from endpoint
// coordinates alone; the two routes are compared in tests.
int sign_constant_C(const Weight& mu, const Arc& p, const Arc& q);
int sign_constant_C_closed(const Weight& mu, const Arc& p, const Arc& q);

// Scalar a lowering arrow picks up under deletion of the index-k pair, for a
// cup p of the upper diagram that survives the deletion: i raised to the drop
// of the exponent constant, so -1 when the deletion is left of the cup, i
// when it is inside, and 1 when it is right of it. Raising arrows pick up the
// same scalar. Requires p to survive the deletion.
GaussInt dilation_prefactor(const Arc& p, int k);

// Cellular basis element: the raising arrow from lam to mu composed with the
// lowering arrow from nu up at lam, pushed through the dictionary.
struct CellTriple {
  Weight mu;
  Weight lam;
  Weight nu;
  int degree = 0;

  friend bool operator==(const CellTriple&, const CellTriple&) = default;
};

// All cell triples of length n: lam outermost in weight order, then mu, then
// nu over the weights orienting lam's diagram. Degrees add the two halves.
std::vector<CellTriple> cell_triples(int n);

// Image of a cell triple under the dictionary.
Element psi_cell(const CellTriple& c);

// Product of the a-th and b-th cell triples of length n, as an element of the
// arc algebra.
Element hecke_product(int n, std::size_t a, std::size_t b);

// q^(degree of lam orienting mu's diagram), or 0 if it does not orient.
LaurentPoly kl_poly(const Weight& lam, const Weight& mu);

// The defining relation families, checked one instantiation at a time.
enum class RelationFamily {
  Idempotent,
  Commuting,
  NonCommuting,
  DoublyNonCommuting,
  SelfDual,
  Adjacent,
};

std::string family_name(RelationFamily f);
std::optional<RelationFamily> family_from_name(const std::string& name);

struct VerifyReport {
  std::vector<std::string> lines;  // one line per instantiation
  long long checked = 0;
  long long mismatches = 0;
};

// Checks every instantiation of one relation family at length n, both the
// relation itself and its transpose. jobs > 1 splits the outer weight loop
// over a thread pool; the report is identical for every job count.
VerifyReport verify_relations(int n, RelationFamily family, int jobs = 1);

// All six families in order, reports concatenated.
VerifyReport verify_all_relations(int n, int jobs = 1);

// Deletion invariance of the sign constants: for every cup pair entering the
// adjacent relation, the difference C(p, <p,t>) - C(r, t) is congruent mod 8
// to its image under every admissible index-k deletion. Also recomputes each
// difference from the endpoint table as a cross-check.
VerifyReport check_mod8_congruence(int n);

// Informational survey: every orientation of a diagram should sit below the
// diagram's weight in the dominance order. Never fails the run.
VerifyReport triangularity_report(int n);

}  // namespace arcd
