# Copyright 2026 The evs-lab Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reference values for the C++ tests, computed from the definitions.

Written separately from the library: intervals are brute-forced where that
is cheap, scalars are (re, im) pairs of Fractions. Run it to regenerate
derived_values.json; the tests read the frozen file.

    python3 tests/oracle/derive.py > tests/oracle/derived_values.json
"""

import json
import sys
from fractions import Fraction as F

INF = None


def fmt(q):
    q = F(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# Intervals are (lo, lo_closed, hi, hi_closed); hi None means +inf.
def iv_str(i):
    lo, lc, hi, hc = i
    return ("[" if lc else "(") + fmt(lo) + "," + ("inf" if hi is None else fmt(hi)) + ("]" if hc else ")")


def union_str(parts):
    return " U ".join(iv_str(p) for p in parts) if parts else "{}"


def iv_contains(i, x):
    lo, lc, hi, hc = i
    if x < lo or (x == lo and not lc):
        return False
    if hi is None:
        return True
    return x < hi or (x == hi and hc)


def canonical(parts):
    """Merge by scanning the boundary points; independent of the C++ merge."""
    parts = [p for p in parts if not (p[2] is not None and (p[2] < p[0] or (p[2] == p[0] and not (p[1] and p[3]))))]
    if not parts:
        return []
    pts = sorted({p[0] for p in parts} | {p[2] for p in parts if p[2] is not None})
    probes = []
    for k, a in enumerate(pts):
        probes.append(a)
        probes.append((a + pts[k + 1]) / 2 if k + 1 < len(pts) else a + 1)
    if pts[0] > 0:
        probes.insert(0, pts[0] / 2)
    inside = lambda x: any(iv_contains(p, x) for p in parts)
    out = []
    cur = None
    for x in probes:
        if inside(x):
            if cur is None:
                cur = [x, True, x, True]
            cur[2], cur[3] = x, True
        elif cur is not None:
            out.append(cur)
            cur = None
    if cur is not None:
        out.append(cur)
    # Probes are endpoints and midpoints: an open run starting at a midpoint
    # really starts at the endpoint before it, and so on at the right end.
    res = []
    for lo, _, hi, _ in out:
        k = probes.index(lo)
        if lo not in pts:
            lo, lc = probes[k - 1] if k else F(0), False
        else:
            lc = True
        j = probes.index(hi)
        if hi not in pts:
            if j + 1 == len(probes):
                hi, hc = None, False
            else:
                hi, hc = probes[j + 1], False
        else:
            hc = True
        res.append((lo, lc, hi, hc))
    return res


def scale(parts, t):
    t = abs(F(t))
    if t == 0:
        return [(F(0), True, F(0), True)] if parts else []
    return canonical([(p[0] * t, p[1], None if p[2] is None else p[2] * t, p[3]) for p in parts])


def msum(a, b):
    out = []
    for p in a:
        for q in b:
            hi = None if p[2] is None or q[2] is None else p[2] + q[2]
            out.append((p[0] + q[0], p[1] and q[1], hi, p[3] and q[3] and hi is not None))
    return canonical(out)


def up(parts):
    return [(parts[0][0], parts[0][1], None, False)]


def down(parts):
    last = parts[-1]
    return [(F(0), True, last[2], last[3])]


def translate(parts, x):
    return [(p[0] + x, p[1], None if p[2] is None else p[2] + x, p[3]) for p in parts]


def subset(a, b):
    probes = set()
    for p in a:
        probes.add(p[0])
        if p[2] is not None:
            probes.add(p[2])
    for q in b:
        probes.add(q[0])
        if q[2] is not None:
            probes.add(q[2])
    pts = sorted(probes)
    cands = pts + [(x + y) / 2 for x, y in zip(pts, pts[1:])] + [pts[-1] + 1]
    return all(any(iv_contains(q, x) for q in b) for x in cands if any(iv_contains(p, x) for p in a))


def mod(re, im):
    """Exact modulus when rational."""
    m2 = F(re) ** 2 + F(im) ** 2
    n, d = m2.numerator, m2.denominator
    rn, rd = int(round(n ** 0.5)), int(round(d ** 0.5))
    assert rn * rn == n and rd * rd == d
    return F(rn, rd)


def cases():
    c = {}
    # instances
    c["halfline.scale(-1,3)"] = fmt(mod(-1, 0) * 3)
    c["halfline.scale((3+4i)/5,2)"] = fmt(mod(F(3, 5), F(4, 5)) * 2)
    c["cone.scale(-2,(1,(1)))"] = f"({fmt(mod(-2, 0) * 1)},({fmt(-2 * 1)}))"
    c["twisted.scale(i,(2,(1)))"] = "(2,(i))"
    c["twisted.x+(-1)x at (2,(1))"] = f"({fmt(2 + 2)},({fmt(1 - 1)}))"
    c["dict.x+(-1)x at (1,1)"] = f"({fmt(1 + mod(-1, 0))},{fmt(1 + mod(-1, 0))})"
    c["cone.primitives((2,(a)))"] = "(0,(a))"
    c["cone.P(2x) at x=(1,(3))"] = f"(0,({fmt(2 * 3)}))"

    # set algebra
    a = canonical([(F(0), True, F(1), False), (F(2), True, F(3), True)])
    c["scaleSet(-2,[0,1) U [2,3])"] = union_str(scale(a, -2))
    c["[0,1)+[0,1)"] = union_str(msum([(F(0), True, F(1), False)], [(F(0), True, F(1), False)]))
    c["[1,2]+[3,4]"] = union_str(msum([(F(1), True, F(2), True)], [(F(3), True, F(4), True)]))
    c["[0,1)+[2,3]"] = union_str(msum([(F(0), True, F(1), False)], [(F(2), True, F(3), True)]))
    b = canonical([(F(1), True, F(2), False), (F(3), True, F(4), False)])
    c["up([1,2) U [3,4))"] = union_str(up(b))
    c["down([1,2))"] = union_str(down([(F(1), True, F(2), False)]))
    c["[0,1) U [1,2)"] = union_str(canonical([(F(0), True, F(1), False), (F(1), True, F(2), False)]))
    c["scaleSet(-3,[0,1])"] = union_str(scale([(F(0), True, F(1), True)], -3))
    c["[0,1) n [0,1/2]"] = union_str([(F(0), True, F(1, 2), True)])
    # Balanced witness x = 2, alpha = 3/4: alpha x must leave [0,1) U [2,3].
    c["balanced witness image"] = fmt(F(3, 4) * 2)
    c["balanced witness image in A"] = str(any(iv_contains(p, F(3, 2)) for p in a)).lower()

    # radial separators
    x, y = (F(3), F(1)), (F(2), F(5))
    lo = min(x, y)
    r = (x[0] + y[0]) / 2
    c["dict separator ((3,1),(2,5))"] = f"[0,{fmt(r)})x[0,{fmt(lo[1] + 1)})"
    c["halfline separator (1,2)"] = f"[0,{fmt(F(3, 2))})"

    # topology
    g = [(F(1), False, F(2), False)]
    xx = F(3, 2)
    c["U_x for G=(1,2), x=3/2"] = union_str([(F(0), True, g[0][2] - xx, False)])
    c["halving [0,2/3)"] = union_str([(F(0), True, F(2, 3) / 2, False)])
    d = (F(2) - F(1)) / 2
    c["separation (2,1)"] = union_str([(F(0), True, d, False)])
    c["up(2+U)"] = union_str(up(translate([(F(0), True, d, False)], F(2))))
    c["down(1+V)"] = union_str(down(translate([(F(0), True, d, False)], F(1))))
    # Continuity G=(1,3), x=2, alpha=1: any eps, u with (1-eps)2 >= 1 and
    # (1+eps)(2+u) <= 3 works; the image interval is then inside (1,3).
    eps, u = F(1, 8), F(1, 3)
    c["continuity example image"] = union_str([((1 - eps) * 2, False, (1 + eps) * (2 + u), False)])
    c["continuity example inside G"] = str(subset([((1 - eps) * 2, False, (1 + eps) * (2 + u), False)], [(F(1), False, F(3), False)])).lower()
    c["[0,5] U [7,9) sup"] = fmt(F(9))
    c["[0,1]+[2,3]"] = union_str(msum([(F(0), True, F(1), True)], [(F(2), True, F(3), True)]))
    # Audit escapes: [1,2) pulled below 1, [0,1] pushed above 1.
    c["audit [1,2) t*1 in G"] = str(iv_contains((F(1), True, F(2), False), F(1, 2))).lower()
    c["audit [0,1] t*1 in G"] = str(iv_contains((F(0), True, F(1), True), F(3, 2))).lower()
    # Local base (v): lambda in B(1,eps) with |lambda| < 1 sends 1 below 1 + W.
    c["localbase v escape"] = str(iv_contains((F(1), True, F(2), False), 1 - F(1, 2 ** 12) / 2)).lower()
    # Doubling transports [0,1) to [0,2).
    c["doubling [0,1)"] = union_str(scale([(F(0), True, F(1), False)], 2))
    c["family doubled [0,1/n)"] = [union_str(scale([(F(0), True, F(1, n), False)], 2)) for n in range(1, 9)]
    return c


if __name__ == "__main__":
    json.dump(cases(), sys.stdout, indent=1, sort_keys=True)
    sys.stdout.write("\n")
