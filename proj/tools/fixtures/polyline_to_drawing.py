#!/usr/bin/env python3
"""Convert a polyline sketch of a drawing into the drawing file format.

Input (JSON):
  {"vertices": {"name": [x, y], ...},
   "edges": [{"id": "e", "source": "a", "target": "b", "via": [[x, y], ...]}, ...],
   "outer": {"edge": "e", "segment": 0, "reverse": false}      # optional
  }

Every edge is the polyline source -> via... -> target. Crossings are computed
exactly (rational arithmetic), ordered along each edge, and signed: +1 when the
other edge passes from the left of this edge to its right. Rotations are the
counterclockwise order of the first polyline piece leaving each vertex. When
"outer" is omitted the face at infinity is used; the lowest point of the sketch
must then be a vertex.
"""
import json
import math
import sys
from fractions import Fraction as Q


def orient(a, b, c):
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def intersect(p, q, r, s):
    """Parameter t on pq of a proper crossing with rs, or None."""
    o1, o2, o3, o4 = orient(p, q, r), orient(p, q, s), orient(r, s, p), orient(r, s, q)
    if 0 in (o1, o2, o3, o4):
        if {p, q} & {r, s} and not (o1 == 0 and o2 == 0):
            return None  # pieces meeting at a shared endpoint
        if o1 == 0 and o2 == 0:
            raise SystemExit(f"collinear overlap between {p}{q} and {r}{s}")
        if (o1 == 0 or o2 == 0) and o3 != o4 or (o3 == 0 or o4 == 0) and o1 != o2:
            raise SystemExit(f"degenerate touch between {p}{q} and {r}{s}")
        return None
    if o1 == o2 or o3 == o4:
        return None
    den = (q[0] - p[0]) * (s[1] - r[1]) - (q[1] - p[1]) * (s[0] - r[0])
    t = ((r[0] - p[0]) * (s[1] - r[1]) - (r[1] - p[1]) * (s[0] - r[0])) / den
    return t, o1  # o1: side of r relative to pq


def main():
    src = json.load(open(sys.argv[1]))
    pos = {k: (Q(str(v[0])), Q(str(v[1]))) for k, v in src["vertices"].items()}
    edges = src["edges"]
    poly = {}
    for e in edges:
        pts = [pos[e["source"]]] + [(Q(str(x)), Q(str(y))) for x, y in e.get("via", [])] + [pos[e["target"]]]
        poly[e["id"]] = pts
    ends = {e["id"]: {e["source"], e["target"]} for e in edges}
    hits = {e["id"]: [] for e in edges}
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            pe, pf = poly[e["id"]], poly[f["id"]]
            found = []
            for a in range(len(pe) - 1):
                for b in range(len(pf) - 1):
                    r = intersect(pe[a], pe[a + 1], pf[b], pf[b + 1])
                    if r is None:
                        continue
                    t, side = r
                    u = intersect(pf[b], pf[b + 1], pe[a], pe[a + 1])[0]
                    found.append((a + t, b + u, side))
            if not found:
                continue
            if len(found) > 1 or ends[e["id"]] & ends[f["id"]]:
                raise SystemExit(f"non-simple pair {e['id']} / {f['id']}")
            te, tf, side = found[0]
            # side: +1 when f's piece starts left of e's piece, i.e. f passes left -> right
            s = 1 if side > 0 else -1
            hits[e["id"]].append((te, f["id"], s))
            hits[f["id"]].append((tf, e["id"], -s))
    crossings = {}
    for k, lst in hits.items():
        lst.sort()
        if lst:
            crossings[k] = [{"edge": o, "sign": s} for _, o, s in lst]
    rot = {}
    for v in src["vertices"]:
        darts = []
        for e in edges:
            pts = poly[e["id"]]
            if e["source"] == v:
                a, b = pts[0], pts[1]
            elif e["target"] == v:
                a, b = pts[-1], pts[-2]
            else:
                continue
            darts.append((math.atan2(float(b[1] - a[1]), float(b[0] - a[0])), e["id"]))
        darts.sort()
        rot[v] = [d[1] for d in darts]
    outer = src.get("outer")
    if outer is None:
        low = min(src["vertices"], key=lambda k: (pos[k][1], pos[k][0]))
        for e in edges:
            for p in poly[e["id"]][1:-1]:
                if (p[1], p[0]) < (pos[low][1], pos[low][0]):
                    raise SystemExit("lowest sketch point is a bend; give 'outer' explicitly")
        # the face at infinity touches `low` in the sector containing the downward
        # direction; it is the left face of the last dart at or before -pi/2 ccw
        angles = []
        for e in edges:
            pts = poly[e["id"]]
            if e["source"] == low:
                a, b, fwd = pts[0], pts[1], True
            elif e["target"] == low:
                a, b, fwd = pts[-1], pts[-2], False
            else:
                continue
            angles.append((math.atan2(float(b[1] - a[1]), float(b[0] - a[0])), e["id"], fwd))
        angles.sort()
        # every dart points upward (angles in [0, pi]) since `low` is lowest;
        # the sector from the largest angle ccw to the smallest contains -pi/2
        _, eid, fwd = angles[-1]
        seg = 0 if fwd else len(crossings.get(eid, []))
        outer = {"edge": eid, "segment": seg, "reverse": not fwd}
    out = {
        "vertices": list(src["vertices"].keys()),
        "edges": [{"id": e["id"], "source": e["source"], "target": e["target"]} for e in edges],
        "crossings": crossings,
        "rotations": rot,
        "outer": outer,
    }
    json.dump(out, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
