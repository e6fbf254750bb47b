#!/usr/bin/env python3
"""Instantiate the closed-form classical-family results as golden cases.

Each case carries two independently stated pieces of data:
  * the decomposition of every grading level into V_l summands, and
  * the pole list, built as the union of the per-level pole progressions
    stated alongside each decomposition.
The double-pole windows stated for the non-Siegel cases are asserted
against the assembled pole list before anything is written.

Usage: gen_classical_golden.py [OUT_PATH]   (default data/golden/classical.json)
"""

import json
import sys
from collections import Counter
from fractions import Fraction as Q
from pathlib import Path


def progression(top, bottom, step):
    """Inclusive arithmetic progression from top down to bottom."""
    out = []
    v = top
    while v >= bottom:
        out.append(v)
        v -= step
    return out


def fmt(q):
    q = Q(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def case(kind, node, levels, poles, source):
    decomposition = {}
    for j, ls in sorted(levels.items()):
        counts = Counter(ls)
        if counts:
            decomposition[str(j)] = [[l, m] for l, m in sorted(counts.items())]
    pole_counts = Counter(poles)
    return {
        "type": kind,
        "node": node,
        "decomposition": decomposition,
        "poles": [[fmt(s), m] for s, m in sorted(pole_counts.items(), reverse=True)],
        "source": source,
    }


def check_window(poles, lo, hi):
    """Poles in [lo, hi] are double, all others simple."""
    counts = Counter(poles)
    for s, m in counts.items():
        assert m == (2 if lo <= s <= hi else 1), (poles, lo, hi)
    assert counts[lo] == 2 and counts[hi] == 2, (poles, lo, hi)


def type_a(n):
    out = []
    for a in range(0, n):
        b = n - 1 - a
        mn = min(a, b)
        levels = {1: progression(n - 1, n - 1 - 2 * mn, 2)}
        poles = [Q(n + 1, 2) - t for t in range(0, mn + 1)]
        out.append(case(f"A{n}", a + 1, levels, poles,
                        f"A_n formula, Levi A_{a} x A_{b}, n={n}"))
    return out


def type_b(n):
    out = []
    # Siegel: node n.
    levels = {1: progression(2 * (n - 1), 0 if n % 2 else 2, 4)}
    poles = [Q(s) for s in progression(n, 1 if n % 2 else 2, 2)]
    out.append(case(f"B{n}", n, levels, poles, f"B_n Siegel parabolic, n={n}"))
    for a in range(1, n):
        b = n - a
        r2 = progression(2 * (a - 1), 0 if a % 2 else 2, 4)
        r2_poles = [Q(a, 2) - t for t in range(0, len(r2))]
        assert r2_poles[-1] == (Q(1, 2) if a % 2 else 1)
        mn = min(a, 2 * b)
        r1 = progression(a + 2 * b - 2, a + 2 * b - 2 - 2 * (mn - 1), 2)
        r1_poles = [Q(a + 2 * b, 2) - t for t in range(0, mn)]
        poles = r1_poles + r2_poles
        if mn >= b + 1:
            check_window(poles, Q(a + 2 * b + 2, 2) - mn, Q(a, 2))
        else:
            assert max(Counter(poles).values()) == 1
        out.append(case(f"B{n}", a, {1: r1, 2: r2}, poles,
                        f"B_n non-Siegel parabolic, a={a}, b={b}"))
    return out


def type_c(n):
    out = []
    # Siegel: node n.
    r1 = [n - 1]
    r2 = progression(2 * (n - 2), 0 if n % 2 == 0 else 2, 4)
    poles = [Q(n + 1, 2)] + [Q(n - 1, 2) - t for t in range(0, len(r2))]
    assert poles[-1] == (Q(1, 2) if n % 2 == 0 else 1)
    out.append(case(f"C{n}", n, {1: r1, 2: r2}, poles, f"C_n Siegel parabolic, n={n}"))
    for a in range(1, n):
        b = n - a
        r2 = progression(2 * (a - 2), 0 if a % 2 == 0 else 2, 4)
        r2_poles = [Q(a - 1, 2) - t for t in range(0, len(r2))]
        mn = min(a, 2 * b + 1)
        r1 = progression(a + 2 * b - 1, a + 2 * b - 1 - 2 * (mn - 1), 2)
        r1_poles = [Q(a + 2 * b + 1, 2) - t for t in range(0, mn)]
        poles = r1_poles + r2_poles
        if mn >= b + 2:
            check_window(poles, Q(a + 2 * b + 3, 2) - mn, Q(a - 1, 2))
        else:
            assert max(Counter(poles).values()) == 1
        out.append(case(f"C{n}", a, {1: r1, 2: r2}, poles,
                        f"C_n non-Siegel parabolic, a={a}, b={b}"))
    return out


def type_d(n):
    out = []
    # Siegel-type: nodes n-1 and n give the same answer.
    levels = {1: progression(2 * (n - 2), 0 if n % 2 == 0 else 2, 4)}
    poles = [Q(s) for s in progression(n - 1, 1 if n % 2 == 0 else 2, 2)]
    for node in (n - 1, n):
        out.append(case(f"D{n}", node, levels, poles,
                        f"D_n Siegel-type parabolic (node {node}), n={n}"))
    for a in range(1, n - 1):
        b = n - a
        r2 = progression(2 * (a - 2), 0 if a % 2 == 0 else 2, 4)
        r2_poles = [Q(a - 1, 2) - t for t in range(0, len(r2))]
        mn = min(a, 2 * b - 1)
        r1 = [a - 1] + progression(a + 2 * b - 3, a + 2 * b - 3 - 2 * (mn - 1), 2)
        r1_poles = [Q(a + 1, 2)] + [Q(a + 2 * b - 1, 2) - t for t in range(0, mn)]
        poles = r1_poles + r2_poles
        if mn >= b:
            check_window(poles, Q(a + 2 * b + 1, 2) - mn, Q(a + 1, 2))
        out.append(case(f"D{n}", a, {1: r1, 2: r2}, poles,
                        f"D_n non-Siegel parabolic, a={a}, b={b}"))
    return out


def main():
    out_path = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("data/golden/classical.json")
    cases = []
    for n in range(2, 7):
        cases += type_a(n)
    for n in range(2, 7):
        cases += type_b(n)
    for n in range(2, 7):
        cases += type_c(n)
    for n in range(3, 7):
        cases += type_d(n)
    doc = {"description": "Classical families instantiated from closed-form results",
           "cases": cases}
    out_path.write_text(json.dumps(doc, indent=1) + "\n")
    print(f"wrote {len(cases)} cases to {out_path}")


if __name__ == "__main__":
    main()
