#!/usr/bin/env python3
"""Independent reference implementation of the base combinatorics.

Generates tests/fixtures_generated.hpp, a frozen table of values the C++
library must reproduce: cup diagrams, orientation degrees, tile partitions,
commutation of cup pairs, weight contraction, and graded dimensions.

The values here are computed by deliberately simple, separately written code
paths (degree is computed twice, by the clockwise rule and by flip counting,
and the script aborts on any internal disagreement).  Regenerate only when
this script itself changes; the header is committed so the test suite does
not depend on Python at build time.
"""

import itertools
import sys
from collections import Counter

UP = "^"
DOWN = "v"


def all_weights(n):
    out = []
    for tup in itertools.product(DOWN + UP, repeat=n):
        w = "".join(tup)
        if w.count(UP) % 2 == 0:
            out.append(w)
    return out


def draw_cups(w):
    """Returns (cups, rays); cups are (left, right, decorated) sorted by left,
    rays are (pos, decorated)."""
    stack = []
    cups = []
    loose_ups = []
    for j, c in enumerate(w):
        if c == DOWN:
            stack.append(j)
        elif stack:
            cups.append((stack.pop(), j, False))
        else:
            loose_ups.append(j)
    loose_downs = list(stack)
    if loose_ups and loose_downs:
        assert max(loose_ups) < min(loose_downs)
    for a in range(0, len(loose_ups) - 1, 2):
        cups.append((loose_ups[a], loose_ups[a + 1], True))
    rays = []
    if len(loose_ups) % 2 == 1:
        rays.append((loose_ups[-1], True))
    rays.extend((p, False) for p in loose_downs)
    cups.sort()
    rays.sort()
    # A valid image never nests a decorated arc or a ray inside a cup, and
    # never puts a ray left of a decorated cup.
    for l, r, d in cups:
        for l2, r2, d2 in cups:
            if l < l2 and r2 < r:
                assert not d2, (w, cups)
        for p, pd in rays:
            assert not (l < p < r), (w, cups, rays)
            if d:
                assert p > l, (w, cups, rays)
    assert sum(1 for _, pd in rays if pd) <= 1
    return cups, rays


def render(w):
    cups, rays = draw_cups(w)
    tok = [""] * len(w)
    for l, r, d in cups:
        tok[l] = "(*" if d else "("
        tok[r] = ")"
    for p, d in rays:
        tok[p] = "!" if d else "|"
    assert all(tok)
    return "".join(tok)


def underlying(w):
    cups, rays = draw_cups(w)
    lab = [""] * len(w)
    for l, r, d in cups:
        lab[l], lab[r] = (UP, UP) if d else (DOWN, UP)
    for p, d in rays:
        lab[p] = UP if d else DOWN
    return "".join(lab)


def oriented(w, nu):
    cups, rays = draw_cups(w)
    for l, r, d in cups:
        if d and nu[l] != nu[r]:
            return False
        if not d and nu[l] == nu[r]:
            return False
    for p, d in rays:
        if nu[p] != (UP if d else DOWN):
            return False
    return True


def degree(w, nu):
    assert oriented(w, nu)
    cups, _ = draw_cups(w)
    clockwise = sum(1 for l, r, d in cups if nu[r] == DOWN)
    base = underlying(w)
    flipped = sum(1 for l, r, d in cups if (nu[l], nu[r]) != (base[l], base[r]))
    assert clockwise == flipped, (w, nu)
    return clockwise


def t_vector(w):
    n = len(w)
    return [sum(1 for j in range(i, n) if w[j] == UP) for i in range(1, n)]


def rows_of(w):
    n = len(w)
    t = t_vector(w)  # t[i-1] = t_i
    rows = []
    for r in range(1, n):
        length = 1 if r <= t[0] else 0
        for i in range(2, n):
            if i <= r <= i - 1 + t[i - 1]:
                length += 1
        rows.append(length)
    while rows and rows[-1] == 0:
        rows.pop()
    assert sum(rows) == sum(j for j, c in enumerate(w) if c == UP)
    return rows


def weight_from_rows(rows, n):
    t = [0] * (n + 1)  # t[i] = t_i, 1-based, t[n] = 0
    t[1] = sum(1 for r, le in enumerate(rows, start=1) if le == r)
    for i in range(2, n):
        t[i] = sum(1 for r, le in enumerate(rows, start=1) if r >= i and le >= r - i + 1)
    for i in range(1, n):
        assert t[i] - t[i + 1] in (0, 1), (rows, t)
    lab = [""]
    for j in range(1, n):
        lab.append(UP if t[j] > t[j + 1] else DOWN)
    ups = lab.count(UP)
    lab[0] = UP if ups % 2 == 1 else DOWN
    w = "".join(lab)
    assert rows_of(w) == list(rows), (rows, w)
    return w


def commute(w, p, q):
    """Reference: p and q commute iff each survives removal of the other."""

    def remove(weight, cup):
        flip = {UP: DOWN, DOWN: UP}
        ls = list(weight)
        ls[cup[0]] = flip[ls[cup[0]]]
        ls[cup[1]] = flip[ls[cup[1]]]
        return "".join(ls)

    def has(weight, cup):
        return cup in draw_cups(weight)[0]

    return has(remove(w, q), p) and has(remove(w, p), q)


def contractible(w, k):
    cups, _ = draw_cups(w)
    if k == 0:
        return (0, 1, True) in cups
    return (k - 1, k, False) in cups


def contract(w, k):
    assert contractible(w, k)
    lo = 0 if k == 0 else k - 1
    out = w[:lo] + w[lo + 2:]
    if out.count(UP) % 2 == 1:
        out = (UP if out[0] == DOWN else DOWN) + out[1:]
    assert out.count(UP) % 2 == 0
    return out


def poly_str(coeffs):
    items = sorted((e, c) for e, c in coeffs.items() if c != 0)
    if not items:
        return "0"
    parts = []
    for e, c in items:
        mag = abs(c)
        if e == 0:
            body = str(mag)
        elif mag == 1:
            body = f"q^{e}"
        else:
            body = f"{mag}*q^{e}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def poincare(n):
    ws = all_weights(n)
    coeffs = Counter()
    count = 0
    for lam in ws:
        for nu in ws:
            if not oriented(lam, nu):
                continue
            dl = degree(lam, nu)
            for mu in ws:
                if oriented(mu, nu):
                    coeffs[dl + degree(mu, nu)] += 1
                    count += 1
    return poly_str(coeffs), count


def main(out_path):
    lines = []
    a = lines.append
    a("#pragma once")
    a("// Generated by tools/oracle_cups.py; committed as a frozen reference.")
    a("// Do not edit by hand.")
    a("")
    a("namespace fixtures {")
    a("")
    a("struct WeightRow {")
    a("  int n;")
    a("  const char* weight;")
    a("  const char* diagram;   // token per position: ( (* ) | !")
    a("  const char* base;      // the unique weight orienting every arc anticlockwise")
    a("  const char* rows;      // comma separated tile partition row lengths")
    a("  int length;")
    a("};")
    a("inline constexpr WeightRow kWeightRows[] = {")
    for n in range(1, 7):
        for w in all_weights(n):
            rows = rows_of(w)
            weight_from_rows(rows, n)
            a('    {%d, "%s", "%s", "%s", "%s", %d},'
              % (n, w, render(w), underlying(w), ",".join(map(str, rows)), sum(rows)))
    a("};")
    a("")
    a("struct DegreeRow {")
    a("  int n;")
    a("  const char* diagram_weight;")
    a("  const char* orientation;")
    a("  int degree;  // -1 when the orientation is invalid")
    a("};")
    a("inline constexpr DegreeRow kDegreeRows[] = {")
    for n in range(1, 7):
        ws = all_weights(n)
        for lam in ws:
            for nu in ws:
                d = degree(lam, nu) if oriented(lam, nu) else -1
                a('    {%d, "%s", "%s", %d},' % (n, lam, nu, d))
    a("};")
    a("")
    a("struct CommuteRow {")
    a("  int n;")
    a("  const char* weight;")
    a("  int p;  // indices into the left-sorted cup list")
    a("  int q;")
    a("  bool commute;")
    a("};")
    a("inline constexpr CommuteRow kCommuteRows[] = {")
    for n in range(2, 8):
        for w in all_weights(n):
            cups, _ = draw_cups(w)
            for i in range(len(cups)):
                for j in range(i + 1, len(cups)):
                    a('    {%d, "%s", %d, %d, %s},'
                      % (n, w, i, j, "true" if commute(w, cups[i], cups[j]) else "false"))
    a("};")
    a("")
    a("struct ContractRow {")
    a("  int n;")
    a("  const char* weight;")
    a("  int k;")
    a("  const char* image;")
    a("};")
    a("// Complete list: (w, k) is contractible iff it appears here.")
    a("inline constexpr ContractRow kContractRows[] = {")
    for n in range(2, 7):
        for w in all_weights(n):
            for k in range(0, n):
                if contractible(w, k):
                    a('    {%d, "%s", %d, "%s"},' % (n, w, k, contract(w, k)))
    a("};")
    a("")
    a("struct GradedDimRow {")
    a("  int n;")
    a("  int basis_size;")
    a("  const char* poincare;")
    a("};")
    a("inline constexpr GradedDimRow kGradedDimRows[] = {")
    for n in range(1, 8):
        poly, count = poincare(n)
        a('    {%d, %d, "%s"},' % (n, count, poly))
    a("};")
    a("")
    a("}  // namespace fixtures")
    with open(out_path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {out_path}: {len(lines)} lines")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures_generated.hpp")
