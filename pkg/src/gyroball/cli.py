"""Batch front end: JSON scene in, JSON results out, optional SVG.

A scene names 2D ball points, designates three of them as the
reference gyrotriangle, and lists queries to run against it.  Results
come back one record per query, in query order, with the residuals of
the identities each construction is supposed to satisfy.  Rendering
draws the Klein disk, where gyrolines are straight chords and
gyrocircles are sampled closed paths.
"""

import argparse
import json
import math
import sys

import numpy as np

from . import barycentric, cevian, circle, triangle
from .einstein import ModelParams, gyroangle, gyrodistance
from .errors import (
    GeometryError,
    RenderUnsupportedDimension,
    SceneValidationError,
)

QUERY_KINDS = (
    "circumcircle",
    "classify",
    "tangents",
    "circumcevian",
    "chords-check",
    "inscribed",
    "render",
)

CIRCLE_SAMPLES = 256


def _finite(x):
    x = float(x)
    return None if not math.isfinite(x) else x


def _canonical(w):
    w = np.asarray(w, dtype=np.float64)
    return list(w / w[int(np.argmax(np.abs(w)))])


def _coords(v):
    return [float(v[0]), float(v[1])]


class Scene:
    """Validated scene: parameters, named points, triangle, queries."""

    def __init__(self, s, tol, points, triangle_names, queries):
        self.params = ModelParams(s=s, tol_rel=tol)
        self.points = points
        self.triangle_names = triangle_names
        self.queries = queries


def parse_scene(obj, s_override=None, tol=1e-10):
    """Build a Scene from parsed JSON, collecting every invalid path."""
    paths = []
    if not isinstance(obj, dict):
        raise SceneValidationError("scene must be a JSON object", paths=("",))
    s = obj.get("s", 1.0)
    if s_override is not None:
        s = s_override
    if not isinstance(s, (int, float)) or not math.isfinite(s) or s <= 0:
        paths.append("/s")
        s = 1.0
    raw_points = obj.get("points")
    points = {}
    if not isinstance(raw_points, dict) or not raw_points:
        paths.append("/points")
        raw_points = {}
    for name, xy in raw_points.items():
        ok = (
            isinstance(xy, (list, tuple))
            and len(xy) == 2
            and all(isinstance(c, (int, float)) and math.isfinite(c) for c in xy)
        )
        if not ok:
            paths.append("/points/%s" % name)
            continue
        v = np.array(xy, dtype=np.float64)
        if np.linalg.norm(v) >= s * (1.0 - 1e-12):
            paths.append("/points/%s" % name)
            continue
        points[name] = v
    tri = obj.get("triangle")
    if not (isinstance(tri, list) and len(tri) == 3 and all(isinstance(n, str) for n in tri)):
        paths.append("/triangle")
        tri = []
    else:
        for k, name in enumerate(tri):
            if name not in points:
                paths.append("/triangle/%d" % k)
    queries = obj.get("queries", [])
    if not isinstance(queries, list):
        paths.append("/queries")
        queries = []
    for i, q in enumerate(queries):
        if not isinstance(q, dict):
            paths.append("/queries/%d" % i)
            continue
        kind = q.get("kind")
        if kind not in QUERY_KINDS:
            paths.append("/queries/%d/kind" % i)
            continue
        if kind in ("classify", "tangents"):
            has_point = "point" in q
            has_weights = "weights" in q
            if has_point == has_weights:
                paths.append("/queries/%d" % i)
            elif has_point and q["point"] not in points:
                paths.append("/queries/%d/point" % i)
            elif has_weights and not (
                isinstance(q["weights"], list)
                and len(q["weights"]) == 3
                and all(isinstance(c, (int, float)) and math.isfinite(c) for c in q["weights"])
                and any(c != 0 for c in q["weights"])
            ):
                paths.append("/queries/%d/weights" % i)
        if kind in ("circumcevian", "chords-check"):
            t1 = q.get("t1")
            if not (isinstance(t1, (int, float)) and math.isfinite(t1) and 0 <= t1 <= 1):
                paths.append("/queries/%d/t1" % i)
    if paths:
        raise SceneValidationError("scene failed validation", paths=tuple(paths))
    return Scene(float(s), float(tol), points, tuple(tri), queries)


def _error_record(index, kind, exc):
    rec = {
        "index": index,
        "kind": kind,
        "error": {"type": type(exc).__name__, "message": str(exc)},
    }
    detail = getattr(exc, "detail", None)
    if detail is not None:
        rec["error"]["detail"] = detail
    return rec


def _triangle_of(scene):
    A1, A2, A3 = (scene.points[n] for n in scene.triangle_names)
    return triangle.GyroTriangle(A1, A2, A3, p=scene.params)


def _query_weights(scene, T, q):
    if "point" in q:
        P = scene.points[q["point"]]
        return barycentric.weights_from_point(T.vertices, P, scene.params), P
    w = np.array(q["weights"], dtype=np.float64)
    rep = barycentric.GyroBaryRep(T.vertices, w, scene.params)
    return w, barycentric.evaluate(rep)


def _do_circumcircle(scene, T):
    C = triangle.circumcircle_of(T)
    R, gR = triangle.circumradius(T)
    d3, h3 = triangle.d3_h3(T)
    diag = triangle.existence_diagnostics(T)
    resid = max(
        abs(gyrodistance(C.center, V, scene.params)[0] - R) for V in T.vertices
    )
    return {
        "center": _coords(C.center),
        "radius": R,
        "gamma_R": gR,
        "d3": d3,
        "h3": h3,
        "existence": {
            "exists": diag.exists,
            "determinant": diag.determinant,
            "sine_sum": diag.sine_sum,
            "sine_product": diag.sine_product,
            "gamma_sum_square": diag.gamma_sum_square,
            "gamma_pair_square": diag.gamma_pair_square,
            "agree": diag.agree,
        },
        "weights_gamma": _canonical(triangle.circumcenter_weights(T)),
        "weights_trig": _canonical(triangle.circumcenter_weights(T, form="trig")),
        "gyrosines_ratio": triangle.extended_gyrosines(T),
        "equidistance_residual": resid,
    }


def _do_classify(scene, T, q):
    w, P = _query_weights(scene, T, q)
    label = circle.classify(w, T)
    d = circle.dist_to_circumcenter(w, T)
    R, _ = triangle.circumradius(T)
    O = triangle.circumcenter(T)
    metric, _ = gyrodistance(P, O, scene.params)
    rec = {
        "weights": _canonical(w),
        "coords": _coords(P),
        "k_indicator": circle.k_indicator(w, T),
        "t_indicator": circle.t_indicator(w, T),
        "label": label.value,
        "distance": d,
        "radius": R,
        "distance_residual": abs(d - metric),
    }
    if "point" in q:
        rec["point"] = q["point"]
    return rec


def _secant_power(scene, T, wP, P):
    # tangent-secant check: a secant from P through two circle points
    for t in (0.25, 0.4, 0.65):
        try:
            w2 = circle.second_intersection(T, wP, t)
        except GeometryError:
            continue
        X = barycentric.evaluate(
            barycentric.GyroBaryRep(
                T.vertices, circle.circum_param(T, circle.CircleParamPoint("t-line", t)), scene.params
            )
        )
        Y = barycentric.evaluate(barycentric.GyroBaryRep(T.vertices, w2, scene.params))
        return circle.gyropower(P, X, Y, scene.params)
    return None


def _do_tangents(scene, T, q):
    w, P = _query_weights(scene, T, q)
    result = circle.tangency_points(T, w)
    rec = {"weights": _canonical(w), "coords": _coords(P)}
    if "point" in q:
        rec["point"] = q["point"]
    if result is None:
        rec["case"] = "none"
        return rec
    if isinstance(result, np.ndarray):
        rec["case"] = "single"
        rec["points"] = [{"weights": _canonical(result), "coords": _coords(P)}]
        rec["length"] = 0.0
        return rec
    gt, L = circle.tangent_length(T, w)
    O = triangle.circumcenter(T)
    pts = []
    for wt in result:
        X = barycentric.evaluate(barycentric.GyroBaryRep(T.vertices, wt, scene.params))
        pts.append(
            {
                "weights": _canonical(wt),
                "coords": _coords(X),
                "on_circle_residual": circle.k_indicator(wt, T),
                "perp_residual": abs(gyroangle(X, O, P, scene.params) - math.pi / 2.0),
            }
        )
    rec["case"] = "two"
    rec["points"] = pts
    rec["gamma_t"] = gt
    rec["length"] = L
    power = _secant_power(scene, T, w, P)
    if power is not None:
        rec["tangent_secant_residual"] = abs(gt * gt * L * L - 2.0 * power)
    return rec


def _do_circumcevian(scene, T, q):
    t1 = float(q["t1"])
    P = cevian.cevian_foot(T, t1)
    wQ = cevian.circumcevian(T, t1)
    Q = barycentric.evaluate(barycentric.GyroBaryRep(T.vertices, wQ, scene.params))
    u = Q - T.A3
    v = P - T.A3
    cross = abs(float(u[0] * v[1] - u[1] * v[0]))
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    coll = cross / (nu * nv) if nu > 0 and nv > 0 else 0.0
    d = cevian.cevian_distances(T, t1)
    gq, aq = cevian.circumcevian_length(T, t1)
    rec = {
        "t1": t1,
        "foot": _coords(P),
        "q_weights": _canonical(wQ),
        "q_coords": _coords(Q),
        "k_residual": circle.k_indicator(wQ, T),
        "collinearity_residual": coll,
        "distances": {
            "gamma_a1p": d.gamma1,
            "a1p": d.dist1,
            "gamma_a2p": d.gamma2,
            "a2p": d.dist2,
            "gamma_a3p": d.gamma3,
            "a3p": d.dist3,
            "gamma_a3q": gq,
            "a3q": aq,
        },
    }
    if 0.0 < t1 < 1.0:
        prod, pq = cevian.foot_to_circumcevian_distance(T, t1)
        rec["distances"]["gamma_pq_times_pq"] = prod
        rec["distances"]["pq"] = pq
    return rec


def _do_chords_check(scene, T, q):
    t1 = float(q["t1"])
    P = cevian.cevian_foot(T, t1)
    wQ = cevian.circumcevian(T, t1)
    Q = barycentric.evaluate(barycentric.GyroBaryRep(T.vertices, wQ, scene.params))
    p1 = circle.gyropower(P, T.A1, T.A2, scene.params)
    p2 = circle.gyropower(P, T.A3, Q, scene.params)
    closed = cevian.chord_power(T, t1)
    return {
        "t1": t1,
        "power_a1a2": p1,
        "power_a3q": p2,
        "closed_form": closed,
        "residual_pair": abs(p1 - p2),
        "residual_closed": max(abs(p1 - closed), abs(p2 - closed)),
    }


def _do_inscribed(scene, T):
    th, ph, lhs, rhs = circle.inscribed_angle_I(T)
    rec = {
        "first": {
            "theta": th,
            "phi": ph,
            "lhs": lhs,
            "rhs": rhs,
            "residual": abs(lhs - rhs),
        }
    }
    try:
        la, ra, case = circle.inscribed_angle_II(T)
        rec["second"] = {
            "lhs_angle": la,
            "rhs_angle": ra,
            "case": case,
            "sin_residual": abs(math.sin(la) - math.sin(ra)),
        }
    except GeometryError as exc:
        rec["second"] = {"error": {"type": type(exc).__name__, "message": str(exc)}}
    return rec


def execute(scene):
    """Run every query against the scene's triangle, errors in-band."""
    results = []
    try:
        T = _triangle_of(scene)
        tri_error = None
    except GeometryError as exc:
        T = None
        tri_error = exc
    for i, q in enumerate(scene.queries):
        kind = q["kind"]
        if kind == "render":
            n_bad = sum(1 for v in scene.points.values() if v.shape[0] != 2)
            results.append({"index": i, "kind": kind, "ok": n_bad == 0})
            continue
        if T is None:
            results.append(_error_record(i, kind, tri_error))
            continue
        try:
            if kind == "circumcircle":
                rec = _do_circumcircle(scene, T)
            elif kind == "classify":
                rec = _do_classify(scene, T, q)
            elif kind == "tangents":
                rec = _do_tangents(scene, T, q)
            elif kind == "circumcevian":
                rec = _do_circumcevian(scene, T, q)
            elif kind == "chords-check":
                rec = _do_chords_check(scene, T, q)
            else:
                rec = _do_inscribed(scene, T)
        except GeometryError as exc:
            results.append(_error_record(i, kind, exc))
            continue
        rec["index"] = i
        rec["kind"] = kind
        results.append(rec)
    return {
        "s": scene.params.s,
        "tol": scene.params.tol_rel,
        "triangle": list(scene.triangle_names),
        "results": results,
    }


def _svg_line(x1, y1, x2, y2, stroke, width="0.004", dash=None):
    d = ' stroke-dasharray="%s"' % dash if dash else ""
    return '<line x1="%.6f" y1="%.6f" x2="%.6f" y2="%.6f" stroke="%s" stroke-width="%s"%s/>' % (
        x1, y1, x2, y2, stroke, width, d,
    )


def render_svg(scene, results):
    """Klein-disk SVG: boundary, chords, sampled gyrocircles, markers."""
    s = scene.params.s
    for v in scene.points.values():
        if v.shape[0] != 2:
            raise RenderUnsupportedDimension("rendering is planar (n=2)")

    def u(v):
        return (float(v[0]) / s, -float(v[1]) / s)

    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.1 -1.1 2.2 2.2" width="640" height="640">',
        '<rect x="-1.1" y="-1.1" width="2.2" height="2.2" fill="white"/>',
        '<circle cx="0" cy="0" r="1" fill="none" stroke="black" stroke-width="0.006"/>',
    ]
    tri = [scene.points[n] for n in scene.triangle_names]
    for a, b in ((0, 1), (0, 2), (1, 2)):
        xa, ya = u(tri[a])
        xb, yb = u(tri[b])
        parts.append(_svg_line(xa, ya, xb, yb, "steelblue"))
    markers = [(name, scene.points[name]) for name in sorted(scene.points)]
    for rec in results["results"]:
        if "error" in rec:
            continue
        kind = rec["kind"]
        if kind == "circumcircle":
            C = triangle.GyroCircle(np.array(rec["center"]), rec["radius"])
            path = []
            for k in range(CIRCLE_SAMPLES):
                th = 2.0 * math.pi * k / CIRCLE_SAMPLES
                x, y = u(circle.circle_point(C, th, scene.params))
                path.append("%s%.6f %.6f" % ("M" if k == 0 else "L", x, y))
            parts.append(
                '<path d="%sZ" fill="none" stroke="darkorange" stroke-width="0.004" class="gyrocircle"/>'
                % "".join(path)
            )
            markers.append(("O", np.array(rec["center"])))
        elif kind == "tangents" and rec.get("case") == "two":
            P = np.array(rec["coords"])
            for j, pt in enumerate(rec["points"]):
                X = np.array(pt["coords"])
                xa, ya = u(P)
                xb, yb = u(X)
                parts.append(_svg_line(xa, ya, xb, yb, "seagreen"))
                markers.append(("T%d" % (j + 1), X))
            markers.append(("P", P))
        elif kind == "circumcevian":
            Q = np.array(rec["q_coords"])
            F = np.array(rec["foot"])
            xa, ya = u(tri[2])
            xb, yb = u(Q)
            parts.append(_svg_line(xa, ya, xb, yb, "firebrick", dash="0.02 0.012"))
            markers.append(("Q", Q))
            markers.append(("F", F))
    for name, v in markers:
        x, y = u(v)
        parts.append('<circle cx="%.6f" cy="%.6f" r="0.014" fill="black"/>' % (x, y))
        parts.append(
            '<text x="%.6f" y="%.6f" font-size="0.07" font-family="sans-serif">%s</text>'
            % (x + 0.02, y - 0.02, name)
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _strip_nonfinite(obj):
    if isinstance(obj, dict):
        return {k: _strip_nonfinite(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_strip_nonfinite(v) for v in obj]
    if isinstance(obj, float):
        return _finite(obj)
    return obj


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="gyroball",
        description="Run gyrocircle queries from a JSON scene.",
    )
    ap.add_argument("--input", default=None, help="scene JSON file (default stdin)")
    ap.add_argument("--output", default=None, help="results JSON file (default stdout)")
    ap.add_argument("--svg", default=None, help="optional SVG rendering file")
    ap.add_argument("--s", type=float, default=None, help="override the scene's ball parameter")
    ap.add_argument("--tol", type=float, default=1e-10, help="relative tolerance")
    args = ap.parse_args(argv)

    if args.input:
        with open(args.input, "r", encoding="utf-8") as fh:
            raw = fh.read()
    else:
        raw = sys.stdin.read()
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        print(json.dumps({"error": {"message": "invalid JSON: %s" % exc, "paths": [""]}}),
              file=sys.stderr)
        return 1
    try:
        scene = parse_scene(obj, s_override=args.s, tol=args.tol)
    except SceneValidationError as exc:
        print(
            json.dumps({"error": {"message": str(exc), "paths": list(exc.paths)}}),
            file=sys.stderr,
        )
        return 1
    results = _strip_nonfinite(execute(scene))
    text = json.dumps(results, indent=2, sort_keys=True, allow_nan=False) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.svg:
        svg = render_svg(scene, results)
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
