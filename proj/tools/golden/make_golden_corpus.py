#!/usr/bin/env python3
"""Writes the hand-built golden corpus under data/golden.

Rooms are drawn as explicit polygons in meters. The boundary is their union,
circulation segments are listed per plan and every other boundary edge is
facade unless marked adiabatic. Doors sit centered on the longest shared wall,
the same rule the pipeline uses when it realizes doors on a fitted plan.

Hypergraphs are produced with `hyperplan encode`, so the CLI must be built.
"""

import argparse
import json
import math
import random
import shutil
import subprocess
import sys
from pathlib import Path

import shapely
from shapely.geometry import LineString, Polygon
from shapely.geometry.base import BaseGeometry
from shapely.geometry.polygon import orient
from shapely.ops import linemerge, unary_union

DOOR = 0.9
GEOMETRY_UNITS = {"length": "m", "angle": "rad"}


def rect(x0, y0, x1, y1):
    return [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]


def moved(layout, new_id, f):
    out = dict(layout, id=new_id)
    out["rooms"] = [(rid, prog, [f(*pt) for pt in pts]) for rid, prog, pts in layout["rooms"]]
    for key in ("circulation", "adiabatic"):
        out[key] = [(f(*a), f(*b)) for a, b in layout.get(key, [])]
    return out


def ring(poly):
    pts = list(orient(poly, 1.0).exterior.coords)[:-1]
    return [[round(x, 9), round(y, 9)] for x, y in pts]


def clean(poly):
    geom = poly if isinstance(poly, BaseGeometry) else Polygon(poly)
    return shapely.set_precision(geom, 1e-9).simplify(0.0)


def edges(points):
    return [(points[i], points[(i + 1) % len(points)]) for i in range(len(points))]


def longest_piece(geom):
    if geom.is_empty:
        return None
    if geom.geom_type in ("MultiLineString", "GeometryCollection"):
        lines = [g for g in getattr(geom, "geoms", []) if g.geom_type == "LineString"]
        if not lines:
            return None
        geom = linemerge(lines)
    lines = [geom] if geom.geom_type == "LineString" else list(getattr(geom, "geoms", []))
    straight = []
    for line in lines:
        coords = list(line.simplify(0.0).coords)
        straight += [LineString([coords[i], coords[i + 1]]) for i in range(len(coords) - 1)]
    return max(straight, key=lambda g: g.length) if straight else None


def centered(line, width):
    (ax, ay), (bx, by) = line.coords[0], line.coords[-1]
    length = line.length
    ux, uy = (bx - ax) / length, (by - ay) / length
    mx, my = (ax + bx) / 2, (ay + by) / 2
    h = width / 2
    return [[round(mx - h * ux, 9), round(my - h * uy, 9)], [round(mx + h * ux, 9), round(my + h * uy, 9)]]


def overlap_interval(a, b, seg, tol=1e-9):
    # Parameter range of edge a->b covered by a collinear segment, if any.
    dx, dy = b[0] - a[0], b[1] - a[1]
    length2 = dx * dx + dy * dy
    ts = []
    for p in seg:
        cross = (p[0] - a[0]) * dy - (p[1] - a[1]) * dx
        if abs(cross) > tol * math.sqrt(length2):
            return None
        ts.append(((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / length2)
    lo, hi = max(min(ts), 0.0), min(max(ts), 1.0)
    return (lo, hi) if hi - lo > 1e-9 else None


def build_plan(layout):
    rooms = {rid: clean(pts) for rid, _, pts in layout["rooms"]}
    boundary = clean(unary_union(list(rooms.values())))
    if boundary.geom_type != "Polygon" or len(boundary.interiors):
        raise SystemExit(f"{layout['id']}: rooms do not form a simple polygon")
    bpts = ring(boundary)
    circulation = [[list(a), list(b)] for a, b in layout["circulation"]]
    skip = layout["circulation"] + layout.get("adiabatic", [])
    facade = []
    for a, b in edges(bpts):
        free = [(0.0, 1.0)]
        for s in skip:
            cut = overlap_interval(a, b, s)
            if cut:
                free = [piece for lo, hi in free for piece in ((lo, min(hi, cut[0])), (max(lo, cut[1]), hi))
                        if piece[1] - piece[0] > 1e-9]
        for lo, hi in free:
            p0 = [round(a[0] + lo * (b[0] - a[0]), 9), round(a[1] + lo * (b[1] - a[1]), 9)]
            p1 = [round(a[0] + hi * (b[0] - a[0]), 9), round(a[1] + hi * (b[1] - a[1]), 9)]
            facade.append([p0, p1])

    doors = []
    entrance = layout["entrance"]
    frontage = [rooms[entrance].boundary.intersection(LineString(c)) for c in layout["circulation"]]
    best = max((longest_piece(g) for g in frontage if longest_piece(g) is not None), key=lambda g: g.length)
    if best.length < DOOR:
        raise SystemExit(f"{layout['id']}: entrance frontage too short")
    doors.append({"rooms": [entrance, "ENTRANCE"], "segment": centered(best, DOOR), "width": DOOR})
    for a, b in layout["access"]:
        wall = longest_piece(rooms[a].boundary.intersection(rooms[b].boundary))
        if wall is None or wall.length < DOOR:
            raise SystemExit(f"{layout['id']}: no door wall between {a} and {b}")
        doors.append({"rooms": [a, b], "segment": centered(wall, DOOR), "width": DOOR})

    return {
        "format": "hyperplan.plan",
        "version": 1,
        "units": GEOMETRY_UNITS,
        "id": layout["id"],
        "boundary": bpts,
        "rooms": [{"id": rid, "program": prog, "polygon": ring(rooms[rid])} for rid, prog, _ in layout["rooms"]],
        "facade": facade,
        "circulation": circulation,
        "doors": doors,
    }


# Each entry: rooms (id, program, polygon), circulation segments, access pairs,
# entrance room. Bottom edges face the corridor unless stated otherwise.
PLANS = [
    {
        "id": "two_room",
        "rooms": [
            ("living", "living", rect(0, 0, 6.0, 5.2)),
            ("bath", "bath", rect(6.0, 0, 8.4, 5.2)),
        ],
        "circulation": [((0, 0), (6.0, 0))],
        "adiabatic": [((6.0, 0), (8.4, 0))],
        "access": [("living", "bath")],
        "entrance": "living",
    },
    {
        "id": "studio_a",
        "rooms": [
            ("living", "living", rect(0, 0, 5.6, 5.4)),
            ("kitchen", "kitchen", rect(5.6, 2.6, 8.4, 5.4)),
            ("bath", "bath", rect(5.6, 0, 8.4, 2.6)),
        ],
        "circulation": [((0, 0), (5.6, 0))],
        "adiabatic": [((5.6, 0), (8.4, 0))],
        "access": [("living", "kitchen"), ("living", "bath")],
        "entrance": "living",
    },
    {
        "id": "studio_step",
        "rooms": [
            ("living", "living", rect(0, 0, 5.8, 5.4)),
            ("kitchen", "kitchen", rect(5.8, 2.6, 8.6, 6.2)),
            ("bath", "bath", rect(5.8, 0, 8.6, 2.6)),
        ],
        "circulation": [((0, 0), (5.8, 0))],
        "adiabatic": [((5.8, 0), (8.6, 0))],
        "access": [("living", "kitchen"), ("living", "bath")],
        "entrance": "living",
    },
    {
        "id": "studio_foyer",
        "rooms": [
            ("foyer", "foyer", rect(0, 0, 1.6, 3.0)),
            ("bath", "bath", rect(1.6, 0, 4.4, 3.0)),
            ("living", "living", rect(0, 3.0, 6.0, 8.2)),
            ("kitchen", "kitchen", rect(4.4, 0, 7.4, 3.0)),
        ],
        "circulation": [((0, 0), (1.6, 0))],
        "adiabatic": [((1.6, 0), (7.4, 0)), ((0, 0), (0, 3.0))],
        "access": [("foyer", "living"), ("foyer", "bath"), ("living", "kitchen")],
        "entrance": "foyer",
    },
    {
        # 53.6 m2: one bedroom at exactly 1.6 times its minimum furniture area
        "id": "onebed_compact",
        "furnishable": False,
        "rooms": [
            ("bedroom", "bedroom", rect(0, 2.4, 3.6, 6.7)),
            ("bath", "bath", rect(0, 0, 3.6, 2.4)),
            ("living", "living", rect(3.6, 0, 8.0, 4.3)),
            ("kitchen", "kitchen", rect(3.6, 4.3, 8.0, 6.7)),
        ],
        "circulation": [((3.6, 0), (8.0, 0))],
        "adiabatic": [((0, 0), (3.6, 0)), ((0, 0), (0, 2.4))],
        "access": [("living", "bedroom"), ("bedroom", "bath"), ("living", "kitchen")],
        "entrance": "living",
    },
    {
        "id": "onebed_a",
        "rooms": [
            ("bedroom", "bedroom", rect(0, 2.6, 3.0, 8.2)),
            ("bath", "bath", rect(0, 0, 3.0, 2.6)),
            ("living", "living", rect(3.0, 0, 7.8, 5.4)),
            ("kitchen", "kitchen", rect(3.0, 5.4, 7.8, 8.2)),
        ],
        "circulation": [((3.0, 0), (7.8, 0))],
        "adiabatic": [((0, 0), (3.0, 0)), ((0, 0), (0, 2.6))],
        "access": [("living", "bedroom"), ("bedroom", "bath"), ("living", "kitchen")],
        "entrance": "living",
    },
    {
        "id": "onebed_z",
        "rooms": [
            ("bedroom", "bedroom", rect(0, 2.6, 3.6, 8.4)),
            ("living", "living", rect(3.6, 0, 9.8, 5.6)),
            ("kitchen", "kitchen", rect(3.6, 5.6, 9.8, 8.4)),
            ("bath", "bath", rect(9.8, 0, 12.6, 2.6)),
        ],
        "circulation": [((3.6, 0), (9.8, 0))],
        "adiabatic": [((9.8, 0), (12.6, 0)), ((12.6, 0), (12.6, 2.6))],
        "access": [("living", "bedroom"), ("living", "bath"), ("living", "kitchen")],
        "entrance": "living",
    },
    {
        "id": "onebed_slant",
        "rooms": [
            ("bedroom", "bedroom", rect(0, 2.6, 3.2, 8.2)),
            ("bath", "bath", rect(0, 0, 3.2, 2.6)),
            ("living", "living", rect(3.2, 0, 8.2, 5.4)),
            ("kitchen", "kitchen", [(3.2, 5.4), (8.2, 5.4), (8.2, 8.8), (3.2, 8.2)]),
        ],
        "circulation": [((3.2, 0), (8.2, 0))],
        "adiabatic": [((0, 0), (3.2, 0)), ((0, 0), (0, 2.6))],
        "access": [("living", "bedroom"), ("bedroom", "bath"), ("living", "kitchen")],
        "entrance": "living",
    },
    {
        "id": "onebed_extra",
        "rooms": [
            ("bedroom", "bedroom", rect(0, 2.6, 3.2, 8.2)),
            ("bath", "bath", rect(0, 0, 3.2, 2.6)),
            ("living", "living", rect(3.2, 0, 8.2, 5.4)),
            ("kitchen", "kitchen", rect(3.2, 5.4, 8.2, 8.2)),
            ("storage", "extra", rect(8.2, 5.4, 10.2, 8.2)),
        ],
        "circulation": [((3.2, 0), (8.2, 0))],
        "adiabatic": [((0, 0), (3.2, 0)), ((0, 0), (0, 2.6))],
        "access": [("living", "bedroom"), ("bedroom", "bath"), ("living", "kitchen"), ("kitchen", "storage")],
        "entrance": "living",
    },
    {
        "id": "twobed_hall",
        "rooms": [
            ("bed1", "bedroom", rect(0, 4.6, 4.2, 10.0)),
            ("living", "living", rect(4.2, 4.6, 11.0, 10.0)),
            ("kitchen", "kitchen", rect(11.0, 4.6, 14.2, 10.0)),
            ("bed2", "bedroom", rect(0, 0, 4.2, 4.6)),
            ("hall", "foyer", rect(4.2, 0, 5.8, 4.6)),
            ("bath1", "bath", rect(5.8, 0, 8.6, 2.6)),
            ("bath2", "bath", rect(5.8, 2.6, 8.6, 4.6)),
        ],
        "circulation": [((4.2, 0), (5.8, 0))],
        "adiabatic": [((5.8, 0), (8.6, 0)), ((8.6, 0), (8.6, 4.6))],
        "access": [("hall", "bed2"), ("hall", "bath1"), ("hall", "bath2"), ("hall", "living"), ("living", "bed1"),
                   ("living", "kitchen")],
        "entrance": "hall",
    },
    {
        "id": "twobed_six",
        "rooms": [
            ("bed1", "bedroom", rect(0, 4.6, 4.2, 10.0)),
            ("living", "living", rect(4.2, 4.6, 11.0, 10.0)),
            ("kitchen", "kitchen", rect(11.0, 4.6, 14.2, 10.0)),
            ("bed2", "bedroom", rect(0, 0, 4.2, 4.6)),
            ("hall", "foyer", rect(4.2, 0, 5.8, 4.6)),
            ("bath", "bath", rect(5.8, 0, 8.6, 4.6)),
        ],
        "circulation": [((4.2, 0), (5.8, 0))],
        "adiabatic": [((5.8, 0), (8.6, 0)), ((8.6, 0), (8.6, 4.6))],
        "access": [("hall", "bed2"), ("hall", "bath"), ("hall", "living"), ("living", "bed1"), ("living", "kitchen")],
        "entrance": "hall",
    },
    {
        "id": "twobed_t",
        "rooms": [
            ("bed1", "bedroom", rect(0, 4.6, 4.2, 10.0)),
            ("living", "living", rect(4.2, 4.6, 11.0, 10.0)),
            ("kitchen", "kitchen", rect(11.0, 4.6, 14.2, 10.0)),
            ("bed2", "bedroom", rect(2.0, 0, 6.2, 4.6)),
            ("hall", "foyer", rect(6.2, 0, 7.8, 4.6)),
            ("bath1", "bath", rect(7.8, 0, 10.6, 2.6)),
            ("bath2", "bath", rect(7.8, 2.6, 10.6, 4.6)),
        ],
        "circulation": [((6.2, 0), (7.8, 0))],
        "adiabatic": [((7.8, 0), (10.6, 0)), ((10.6, 0), (10.6, 4.6))],
        "access": [("hall", "bed2"), ("hall", "bath1"), ("hall", "bath2"), ("hall", "living"), ("living", "bed1"),
                   ("living", "kitchen")],
        "entrance": "hall",
    },
    {
        "id": "threebed_a",
        "rooms": [
            ("bed1", "bedroom", rect(0, 4.6, 4.2, 10.0)),
            ("living", "living", rect(4.2, 4.6, 11.2, 10.0)),
            ("kitchen", "kitchen", rect(11.2, 4.6, 15.8, 10.0)),
            ("bed2", "bedroom", rect(0, 0, 4.2, 4.6)),
            ("hall", "foyer", rect(4.2, 0, 5.8, 4.6)),
            ("bath1", "bath", rect(5.8, 0, 8.6, 2.6)),
            ("bath2", "bath", rect(5.8, 2.6, 8.6, 4.6)),
            ("bed3", "bedroom", rect(8.6, 0, 12.6, 4.6)),
        ],
        "circulation": [((4.2, 0), (5.8, 0))],
        "adiabatic": [((5.8, 0), (8.6, 0))],
        "access": [("hall", "bed2"), ("hall", "bath1"), ("hall", "bath2"), ("hall", "living"), ("living", "bed1"),
                   ("living", "kitchen"), ("living", "bed3")],
        "entrance": "hall",
    },
    {
        "id": "threebed_u",
        "rooms": [
            ("bed1", "bedroom", rect(0, 5.0, 4.2, 10.0)),
            ("bed2", "bedroom", rect(0, 0, 4.2, 5.0)),
            ("hall", "foyer", rect(4.2, 0, 5.8, 3.0)),
            ("bath1", "bath", rect(5.8, 0, 8.4, 3.0)),
            ("bath2", "bath", rect(8.4, 0, 11.2, 3.0)),
            ("living", "living", rect(4.2, 3.0, 11.2, 8.4)),
            ("kitchen", "kitchen", rect(11.2, 5.0, 15.6, 10.0)),
            ("bed3", "bedroom", rect(11.2, 0, 15.6, 5.0)),
        ],
        "circulation": [((4.2, 0), (5.8, 0))],
        "adiabatic": [((5.8, 0), (11.2, 0))],
        "access": [("hall", "bed2"), ("hall", "bath1"), ("hall", "living"), ("living", "bed1"), ("living", "kitchen"),
                   ("living", "bed3"), ("bed3", "bath2")],
        "entrance": "hall",
    },
]

# Same layouts on other orientations: the corridor on the west side, and a
# skewed frame.
PLANS.append(moved(PLANS[5], "onebed_rot", lambda x, y: (8.2 - y, x)))
PLANS.append(moved(PLANS[9], "twobed_rot", lambda x, y: (-y, x)))
PLANS.append(moved(PLANS[1], "studio_skew",
                   lambda x, y: (round(0.8 * x - 0.6 * y, 12), round(0.6 * x + 0.8 * y, 12))))


def performance(plans, seed):
    # Synthetic stand-ins for simulated EUI and sDA; not physical results.
    rng = random.Random(seed)
    records = []
    for plan in plans:
        eui_s = round(rng.uniform(55.0, 95.0), 2)
        eui_hp = round(eui_s - rng.uniform(8.0, 30.0), 2)
        sda = {r["id"]: round(rng.uniform(0.2, 0.95), 3) for r in plan["rooms"]
               if r["program"] in ("living", "kitchen", "bedroom", "foyer")}
        records.append({"apartment_id": plan["id"], "eui_standard": eui_s, "eui_high": eui_hp, "sda": sda,
                        "provenance": "synthetic"})
    return {"format": "hyperplan.performance", "version": 1,
            "units": {"eui": "kWh/m2/yr", "sda": "fraction"}, "records": records}


def self_fit(cli, plan_path, corpus, plan_id):
    res = subprocess.run([cli, "fit", str(plan_path), str(corpus), "--all"], capture_output=True, text=True)
    for line in res.stdout.splitlines()[1:]:
        cols = line.split(",")
        if cols[1] == f"{plan_id}/{plan_id}":
            return cols[4], cols[5], cols[-1]
    return "missing", "", res.stderr.strip()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cli", default="build/hyperplan")
    ap.add_argument("--out", default="data/golden")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    out = Path(args.out)
    for sub in ("plans", "hypergraphs"):
        shutil.rmtree(out / sub, ignore_errors=True)
        (out / sub).mkdir(parents=True)
    manifest = {
        "format": "hyperplan.corpus",
        "version": 1,
        "units": {"length": "m", "area": "m2", "angle": "rad"},
        "provenance": "hand-built test plans; tools/golden/make_golden_corpus.py",
        "plans": [p["id"] for p in PLANS],
    }
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")

    failed = False
    plans = []
    for layout in PLANS:
        plan = build_plan(layout)
        plans.append(plan)
        path = out / "plans" / f"{layout['id']}.json"
        path.write_text(json.dumps(plan, indent=2) + "\n")
        hg = out / "hypergraphs" / f"{layout['id']}.json"
        res = subprocess.run([args.cli, "encode", str(path), "-o", str(hg)], capture_output=True, text=True)
        if res.returncode != 0:
            print(f"{layout['id']}: {res.stderr.strip()}", file=sys.stderr)
            failed = True
    (out / "performance.json").write_text(json.dumps(performance(plans, args.seed), indent=2) + "\n")

    for layout in PLANS:
        stage, delta, detail = self_fit(args.cli, out / "plans" / f"{layout['id']}.json", out, layout["id"])
        expected = "accepted" if layout.get("furnishable", True) else "rejected"
        mark = "ok" if stage == expected else "UNEXPECTED"
        print(f"{layout['id']:>16} {stage:>12} {delta:>22} {mark} {detail}")
        failed |= stage != expected
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
