"""Grid evaluation of operators, eigenvalue level lines, plot emission.

Floating-point companion to the exact modules: evaluates an operator field
on a rectangular grid, classifies each node by the sign of the discriminant
(real-distinct / coincident / complex), extracts marching-squares level
lines of the two eigenvalue branches lambda+- = trace/2 +- sqrt(disc), and
writes deterministic CSV and SVG files.

Branches are labeled globally by lambda+ >= lambda-, accepting the known
non-smoothness of that labeling across the disc = 0 locus; this is exactly
the structure the level-line figures display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exact_poly import BivariatePolynomial, RationalFunction2
from .operator2 import OperatorField2

REGION_REAL = "real-distinct"
REGION_COMPLEX = "complex"
REGION_COINCIDENT = "coincident"
REGION_MASKED = "masked"

#: |disc| below this times the field scale counts as coincident, avoiding
#: floating-point sign flicker along the disc = 0 curve.
COINCIDENT_BAND = 1.0e-12

#: Nodes with |entry denominator| below this are masked / excluded.
DENOMINATOR_MARGIN = 1.0e-2

#: The level-line figure for the operator [[x, 3y^2], [y/3, 0]] has complex
#: region x^2 + 4y^3 < 0 by direct computation of trace^2/4 - det; a caption
#: stating x^2 + 16 y^3 < 0 does not match that operator.  The plot follows
#: the computed region and reports this note.
CAPTION_DISCREPANCY_NOTE = (
    "computed complex region is x^2 + 4*y^3 < 0; a published caption gives "
    "x^2 + 16*y^3 < 0, which does not match trace^2/4 - det of this operator"
)
#: disc of [[x, 3y^2], [y/3, 0]]: x^2/4 + y^3.
_CAPTION_DISCREPANCY_DISC = BivariatePolynomial({(2, 0): Fraction(1, 4), (0, 3): 1})


class VizError(Exception):
    pass


class AllNodesMasked(VizError):
    """Entry denominators vanish at every grid node."""


class SingularOnGrid(VizError):
    """No interior node clears the denominator margin."""


class IoError(VizError):
    pass


@dataclass(frozen=True)
class GridSpec:
    """Rectangular evaluation grid; nodes include both range endpoints."""

    x0: float = -1.0
    x1: float = 1.0
    y0: float = -1.0
    y1: float = 1.0
    nx: int = 201
    ny: int = 201

    def __post_init__(self):
        if not (
            math.isfinite(self.x0)
            and math.isfinite(self.x1)
            and math.isfinite(self.y0)
            and math.isfinite(self.y1)
        ):
            raise VizError("grid ranges must be finite")
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise VizError("grid ranges must be nonempty")
        if self.nx < 2 or self.ny < 2:
            raise VizError("grid resolution must be at least 2 x 2")

    def xs(self) -> np.ndarray:
        return np.linspace(self.x0, self.x1, self.nx)

    def ys(self) -> np.ndarray:
        return np.linspace(self.y0, self.y1, self.ny)

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.xs(), self.ys())


def eval_polynomial(p: BivariatePolynomial, xg: np.ndarray, yg: np.ndarray) -> np.ndarray:
    out = np.zeros_like(xg, dtype=float)
    for (i, j), c in p.terms.items():
        out += float(c) * xg**i * yg**j
    return out


def eval_rational(r: RationalFunction2, xg: np.ndarray, yg: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(values, |denominator|) with values NaN where the denominator is ~0."""
    num = eval_polynomial(r.num, xg, yg)
    den = eval_polynomial(r.den, xg, yg)
    absden = np.abs(den)
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = np.where(absden > 0, num / den, np.nan)
    return vals, absden


@dataclass
class EigenField:
    """Per-node discriminant, region tag and eigenvalue branches."""

    grid: GridSpec
    trace: np.ndarray
    det: np.ndarray
    disc: np.ndarray
    region: np.ndarray  # array of str tags, shape (ny, nx)
    lam_plus: np.ndarray  # NaN outside the real/coincident region
    lam_minus: np.ndarray


def eval_eigenfield(L: OperatorField2, grid: GridSpec) -> EigenField:
    """Evaluate trace, det, disc and eigenvalues of L over the grid.

    Nodes where an entry denominator (nearly) vanishes are masked.  The
    complex region is disc < 0 beyond the coincident band.
    """
    xg, yg = grid.mesh()
    masked = np.zeros(xg.shape, dtype=bool)
    values = []
    for entry in L.entries():
        vals, absden = eval_rational(entry, xg, yg)
        scale = np.nanmax(np.abs(eval_polynomial(entry.den, xg, yg))) if entry.den.terms else 1.0
        scale = max(float(scale), 1.0)
        masked |= absden <= 1.0e-13 * scale
        values.append(vals)
    if masked.all():
        raise AllNodesMasked("entry denominators vanish on the whole grid")
    a, b, c, d = values
    trace = a + d
    det = a * d - b * c
    disc = trace * trace / 4.0 - det

    finite = np.abs(disc[~masked])
    scale = float(finite.max()) if finite.size else 1.0
    scale = max(scale, 1.0)
    band = COINCIDENT_BAND * scale

    region = np.full(xg.shape, REGION_REAL, dtype=object)
    region[np.abs(disc) <= band] = REGION_COINCIDENT
    region[disc < -band] = REGION_COMPLEX
    region[masked] = REGION_MASKED

    real_like = (region == REGION_REAL) | (region == REGION_COINCIDENT)
    sqrt_disc = np.sqrt(np.where(real_like & (disc > 0), disc, 0.0))
    lam_plus = np.where(real_like, trace / 2.0 + sqrt_disc, np.nan)
    lam_minus = np.where(real_like, trace / 2.0 - sqrt_disc, np.nan)
    return EigenField(grid, trace, det, disc, region, lam_plus, lam_minus)


# ---------------------------------------------------------------------------
# Marching squares.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ContourLine:
    branch: str  # "plus" | "minus"
    level: float
    points: tuple[tuple[float, float], ...]


@dataclass
class ContourSet:
    lines: list[ContourLine]


def _cell_segments(values, corners, level):
    """Marching-squares segments for one cell.

    values: (v00, v10, v11, v01) at corners (x0,y0), (x1,y0), (x1,y1), (x0,y1);
    returns list of ((x,y), (x,y)) pairs.
    """
    v00, v10, v11, v01 = values
    (x0, y0), (x1, y1) = corners
    idx = (v00 > level) | ((v10 > level) << 1) | ((v11 > level) << 2) | ((v01 > level) << 3)
    if idx in (0, 15):
        return []

    def interp(pa, pb, va, vb):
        t = (level - va) / (vb - va)
        return (pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1]))

    p00, p10, p11, p01 = (x0, y0), (x1, y0), (x1, y1), (x0, y1)
    bottom = lambda: interp(p00, p10, v00, v10)
    right = lambda: interp(p10, p11, v10, v11)
    top = lambda: interp(p01, p11, v01, v11)
    left = lambda: interp(p00, p01, v00, v01)

    table = {
        1: [(left, bottom)],
        2: [(bottom, right)],
        3: [(left, right)],
        4: [(right, top)],
        6: [(bottom, top)],
        7: [(left, top)],
        8: [(top, left)],
        9: [(bottom, top)],
        11: [(bottom, right)],  # complement of 4
        12: [(right, left)],
        13: [(right, top)],  # complement of 2
        14: [(left, bottom)],  # complement of 1
    }
    if idx in (5, 10):
        # saddle: disambiguate with the cell-center value
        center = (v00 + v10 + v11 + v01) / 4.0
        if idx == 5:
            segs = [(left, top), (bottom, right)] if center > level else [(left, bottom), (right, top)]
        else:
            segs = [(bottom, left), (top, right)] if center > level else [(bottom, right), (top, left)]
        return [(a(), b()) for a, b in segs]
    return [(a(), b()) for a, b in table[idx]]


def _chain_segments(segments: list[tuple[tuple[float, float], tuple[float, float]]]):
    """Join segments sharing endpoints into polylines, deterministically."""
    if not segments:
        return []
    adjacency: dict[tuple[float, float], list[int]] = {}
    for k, (p, q) in enumerate(segments):
        adjacency.setdefault(p, []).append(k)
        adjacency.setdefault(q, []).append(k)
    used = [False] * len(segments)
    polylines = []

    order = sorted(range(len(segments)), key=lambda k: (segments[k][0], segments[k][1]))
    endpoints = sorted(p for p, ks in adjacency.items() if len(ks) == 1)

    def walk(start_seg: int, start_pt):
        chain = [start_pt]
        seg = start_seg
        pt = start_pt
        while True:
            used[seg] = True
            p, q = segments[seg]
            nxt = q if p == pt else p
            chain.append(nxt)
            candidates = [k for k in adjacency.get(nxt, []) if not used[k]]
            if not candidates:
                break
            seg = min(candidates)
            pt = nxt
        return chain

    for pt in endpoints:
        for k in adjacency[pt]:
            if not used[k]:
                polylines.append(walk(k, pt))
    for k in order:  # remaining loops
        if not used[k]:
            polylines.append(walk(k, segments[k][0]))
    return polylines


def extract_levels(field: EigenField, levels: Sequence[float]) -> ContourSet:
    """Marching-squares level lines of lambda+ and lambda-, clipped to the
    real region (cells touching NaN nodes are skipped)."""
    lines: list[ContourLine] = []
    xs = field.grid.xs()
    ys = field.grid.ys()
    for branch, data in (("plus", field.lam_plus), ("minus", field.lam_minus)):
        for level in levels:
            segments = []
            for jy in range(field.grid.ny - 1):
                for ix in range(field.grid.nx - 1):
                    vals = (
                        data[jy, ix],
                        data[jy, ix + 1],
                        data[jy + 1, ix + 1],
                        data[jy + 1, ix],
                    )
                    if any(math.isnan(v) for v in vals):
                        continue
                    corners = ((xs[ix], ys[jy]), (xs[ix + 1], ys[jy + 1]))
                    segments.extend(_cell_segments(vals, corners, level))
            for chain in _chain_segments(segments):
                lines.append(ContourLine(branch, float(level), tuple(chain)))
    return ContourSet(lines)


def default_levels(field: EigenField, count: int = 21) -> list[float]:
    """``count`` evenly spaced levels across the observed eigenvalue range."""
    finite = np.concatenate(
        [field.lam_plus[np.isfinite(field.lam_plus)], field.lam_minus[np.isfinite(field.lam_minus)]]
    )
    if finite.size == 0:
        return []
    lo, hi = float(finite.min()), float(finite.max())
    if lo == hi:
        return [lo]
    return [lo + (hi - lo) * k / (count - 1) for k in range(count)]


# ---------------------------------------------------------------------------
# Finite-difference torsion verification.
# ---------------------------------------------------------------------------


def fd_torsion_residual(L: OperatorField2, grid: GridSpec, h: float) -> float:
    """max |n1| + max |n2| over interior nodes, by central differences.

    Nodes where any entry denominator has |value| <= DENOMINATOR_MARGIN are
    excluded, keeping the evaluation away from poles.
    """
    if h <= 0:
        raise VizError("step h must be positive")
    xg, yg = grid.mesh()

    def entry_values(shift_x: float, shift_y: float):
        out = []
        ok = np.ones(xg.shape, dtype=bool)
        for entry in L.entries():
            num = eval_polynomial(entry.num, xg + shift_x, yg + shift_y)
            den = eval_polynomial(entry.den, xg + shift_x, yg + shift_y)
            ok &= np.abs(den) > DENOMINATOR_MARGIN
            with np.errstate(divide="ignore", invalid="ignore"):
                out.append(num / den)
        return out, ok

    (a0, b0, c0, d0), ok0 = entry_values(0.0, 0.0)
    (axp, bxp, cxp, dxp), okxp = entry_values(h, 0.0)
    (axm, bxm, cxm, dxm), okxm = entry_values(-h, 0.0)
    (ayp, byp, cyp, dyp), okyp = entry_values(0.0, h)
    (aym, bym, cym, dym), okym = entry_values(0.0, -h)
    valid = ok0 & okxp & okxm & okyp & okym
    if not valid.any():
        raise SingularOnGrid("no grid node clears the denominator margin")

    inv2h = 1.0 / (2.0 * h)
    a_y = (ayp - aym) * inv2h
    d_x = (dxp - dxm) * inv2h
    bc_y = (byp * cyp - bym * cym) * inv2h
    bc_x = (bxp * cxp - bxm * cxm) * inv2h
    tr_x = (axp + dxp - axm - dxm) * inv2h
    tr_y = (ayp + dyp - aym - dym) * inv2h
    n1 = a_y * (a0 - d0) + bc_y - tr_x * b0
    n2 = d_x * (a0 - d0) - bc_x + tr_y * c0
    n1 = np.where(valid, np.abs(n1), 0.0)
    n2 = np.where(valid, np.abs(n2), 0.0)
    return float(n1.max() + n2.max())


# ---------------------------------------------------------------------------
# File emission.
# ---------------------------------------------------------------------------


def _fmt(v: float) -> str:
    """17 significant digits; canonical text for NaN."""
    if math.isnan(v):
        return "nan"
    return f"{v:.17g}"


def emit_csv(field: EigenField, path: str) -> None:
    """Header x,y,disc,region,lambda_plus,lambda_minus; one row per node,
    row-major (y outer, x inner), 17 significant digits."""
    xs = field.grid.xs()
    ys = field.grid.ys()
    rows = ["x,y,disc,region,lambda_plus,lambda_minus"]
    for jy in range(field.grid.ny):
        for ix in range(field.grid.nx):
            rows.append(
                ",".join(
                    (
                        _fmt(float(xs[ix])),
                        _fmt(float(ys[jy])),
                        _fmt(float(field.disc[jy, ix])),
                        str(field.region[jy, ix]),
                        _fmt(float(field.lam_plus[jy, ix])),
                        _fmt(float(field.lam_minus[jy, ix])),
                    )
                )
            )
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(rows) + "\n")
    except OSError as exc:
        raise IoError(str(exc)) from exc


SVG_SIZE = 800.0


def emit_svg(field: EigenField, contours: ContourSet, path: str) -> None:
    """Deterministic SVG: shaded complex-region layer, then one path per
    polyline (plus branch solid blue, minus branch solid red)."""
    grid = field.grid
    sx = SVG_SIZE / (grid.x1 - grid.x0)
    sy = SVG_SIZE / (grid.y1 - grid.y0)

    def to_svg(p: tuple[float, float]) -> tuple[float, float]:
        # y axis points up in the plane, down in SVG
        return ((p[0] - grid.x0) * sx, SVG_SIZE - (p[1] - grid.y0) * sy)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SVG_SIZE:g} {SVG_SIZE:g}">',
        f'<rect width="{SVG_SIZE:g}" height="{SVG_SIZE:g}" fill="white"/>',
    ]

    # Complex region: one path of cell rectangles (cells whose four corners
    # are all complex), drawn as a single shaded layer.
    xs = grid.xs()
    ys = grid.ys()
    complex_mask = field.region == REGION_COMPLEX
    rects = []
    for jy in range(grid.ny - 1):
        for ix in range(grid.nx - 1):
            if (
                complex_mask[jy, ix]
                and complex_mask[jy, ix + 1]
                and complex_mask[jy + 1, ix]
                and complex_mask[jy + 1, ix + 1]
            ):
                x0s, y0s = to_svg((xs[ix], ys[jy + 1]))
                x1s, y1s = to_svg((xs[ix + 1], ys[jy]))
                rects.append(
                    f"M{_fmt(x0s)} {_fmt(y0s)}H{_fmt(x1s)}V{_fmt(y1s)}H{_fmt(x0s)}Z"
                )
    if rects:
        parts.append(f'<path d="{"".join(rects)}" fill="#c8c8e8" stroke="none"/>')

    colors = {"plus": "#2040c0", "minus": "#c03020"}
    ordered = sorted(
        contours.lines, key=lambda ln: (ln.branch, ln.level, ln.points[:1])
    )
    for line in ordered:
        if len(line.points) < 2:
            continue
        coords = [to_svg(p) for p in line.points]
        d = "M" + "L".join(f"{_fmt(px)} {_fmt(py)}" for px, py in coords)
        parts.append(
            f'<path d="{d}" fill="none" stroke="{colors[line.branch]}" stroke-width="1.2"/>'
        )
    parts.append("</svg>")
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(parts) + "\n")
    except OSError as exc:
        raise IoError(str(exc)) from exc


def caption_discrepancy_note(L: OperatorField2) -> str | None:
    """The known caption mismatch note when disc(L) == x^2/4 + y^3."""
    from .operator2 import characteristic_data

    disc = characteristic_data(L).disc
    if disc.is_polynomial() and disc.num == _CAPTION_DISCREPANCY_DISC:
        return CAPTION_DISCREPANCY_NOTE
    return None
