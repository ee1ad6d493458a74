"""Exhaustive agreement sweeps: normal-form verdicts vs exact division.

Backs the large acceptance sweeps.  A sweep case is a small integer
polynomial given as a tuple of (i, j, coeff) terms.  Two independent
decision routes run on every case:

* division route: does g_y divide g_x^2 - g exactly?  A sound univariate
  specialization filter (substituting integer values for x) rejects the
  bulk; survivors get the authoritative bivariate division.
* normal-form route: the Morse (resp. cubic) y-normalization residual
  through a staged truncation order; any nonzero residual coefficient
  proves the normal form is not reached, zero through the final stage is
  reported as locally reducible.

The two answer *different* questions (global polynomial divisibility vs
local reducibility); the sweep reports every disagreement.  Inputs like
y^2 + x*y^2 = (y sqrt(1+x))^2 are locally reducible while failing
division, so disagreements of that one-sided shape are expected.

Rationals use gmpy2.mpq when available (several times faster), otherwise
fractions.Fraction; tests cross-validate against the exact modules.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool

from .exact_poly import BivariatePolynomial, NotDivisible, exact_div

try:  # pragma: no cover - environment-dependent
    from gmpy2 import mpq as _QQ
except ImportError:  # pragma: no cover
    _QQ = Fraction


def to_fraction(value) -> Fraction:
    """Fraction from int, Fraction or gmpy2.mpq."""
    return Fraction(int(value.numerator), int(value.denominator)) if hasattr(
        value, "numerator"
    ) else Fraction(value)

Terms = tuple[tuple[int, int, int], ...]

#: Staged truncation orders for the normal-form residual.  Stage one is
#: tuned to catch the typical first nonzero residual coefficient of sparse
#: degree-<=6 inputs; later stages confirm survivors.
MORSE_STAGES = (5, 12, 28)
CUBIC_STAGES = (7, 12, 28)

#: Integer x-values for the sound specialization filter.
SPECIALIZATION_POINTS = (2, -3)

COEFFS = (1, -1, 2, -2)
MAX_TOTAL_DEGREE = 6
MAX_MONOMIALS = 4


# ---------------------------------------------------------------------------
# Case enumeration.
# ---------------------------------------------------------------------------


def _free_monomials(fixed_j: int) -> list[tuple[int, int]]:
    """Monomials with i + j <= MAX_TOTAL_DEGREE, except (0,0), (0,1), ...,
    (0, fixed_j): the origin-vanishing constraints plus the pinned slot."""
    out = []
    for i in range(MAX_TOTAL_DEGREE + 1):
        for j in range(MAX_TOTAL_DEGREE + 1 - i):
            if i == 0 and j <= fixed_j:
                continue
            out.append((i, j))
    return out


def _flip_y(terms: Terms) -> Terms:
    return tuple(sorted((i, j, c if j % 2 == 0 else -c) for i, j, c in terms))


def enumerate_cases(fixed_j: int, combo_slice: tuple[int, int] | None = None):
    """Yield (terms, multiplicity) with y-order exactly ``fixed_j`` at the
    origin; the canonical member of each y-flip pair carries multiplicity 2.

    Terms come out sorted: the pinned (0, fixed_j) monomial sorts first and
    support combinations are generated in sorted order.  Canonicality under
    the y-flip g(x, y) -> g(x, -y) is decided by the first odd-j term, so
    restricting that coefficient to negative values enumerates exactly one
    member per flip pair with no per-case comparison.

    ``combo_slice`` restricts to a range of support combinations so the
    enumeration can be sharded across processes.
    """
    free = _free_monomials(fixed_j)
    combos = [()]
    for size in range(1, MAX_MONOMIALS):
        combos.extend(itertools.combinations(free, size))
    lo, hi = combo_slice if combo_slice is not None else (0, len(combos))
    negative = (-1, -2)
    base_odd = fixed_j % 2 == 1
    lead_range = negative if base_odd else COEFFS
    for combo in combos[lo:hi]:
        n = len(combo)
        first_odd = None
        if not base_odd:
            for idx, (_, j) in enumerate(combo):
                if j % 2 == 1:
                    first_odd = idx
                    break
        mult = 2 if (base_odd or first_odd is not None) else 1
        ranges = [COEFFS] * n
        if first_odd is not None:
            ranges[first_odd] = negative
        for lead in lead_range:
            base = (0, fixed_j, lead)
            if n == 0:
                yield (base,), mult
                continue
            for coeffs in itertools.product(*ranges):
                yield (base,) + tuple(
                    (i, j, c) for (i, j), c in zip(combo, coeffs)
                ), mult


def combo_count(fixed_j: int) -> int:
    free = _free_monomials(fixed_j)
    total = 1
    for size in range(1, MAX_MONOMIALS):
        count = 1
        for k in range(size):
            count = count * (len(free) - k) // (k + 1)
        total += count
    return total


# ---------------------------------------------------------------------------
# Division route.
# ---------------------------------------------------------------------------


def _symbolic_numerator(terms: Terms) -> dict[tuple[int, int], int]:
    """g_x^2 - g as an integer term dict."""
    gx: dict[tuple[int, int], int] = {}
    for i, j, c in terms:
        if i > 0:
            e = (i - 1, j)
            gx[e] = gx.get(e, 0) + c * i
    num: dict[tuple[int, int], int] = {}
    items = list(gx.items())
    for (i1, j1), c1 in items:
        for (i2, j2), c2 in items:
            e = (i1 + i2, j1 + j2)
            num[e] = num.get(e, 0) + c1 * c2
    for i, j, c in terms:
        e = (i, j)
        num[e] = num.get(e, 0) - c
    return {e: c for e, c in num.items() if c}


def _gy_terms(terms: Terms) -> dict[tuple[int, int], int]:
    gy: dict[tuple[int, int], int] = {}
    for i, j, c in terms:
        if j > 0:
            e = (i, j - 1)
            gy[e] = gy.get(e, 0) + c * j
    return gy


def _divides_univariate(p: list[int], q: list[int]) -> bool:
    """Whether q divides p in Q[y] (integer pseudo-division)."""
    if not p:
        return True
    if not q:
        return False
    dq = len(q) - 1
    lead = q[-1]
    r = list(p)
    while True:
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dq or not r:
            break
        top = r[-1]
        shift = len(r) - 1 - dq
        r = [lead * c for c in r]
        for idx, qc in enumerate(q):
            r[shift + idx] -= top * qc
    return not any(r)


def _specialized_check(terms: Terms, x0: int) -> bool:
    """Divisibility of (g_x^2 - g)(x0, y) by g_y(x0, y): substitute first,
    then square univariately (substitution commutes with d/dy)."""
    top = max(j for _, j, _ in terms)
    gs = [0] * (top + 1)
    gxs = [0] * (top + 1)
    for i, j, c in terms:
        gs[j] += c * x0**i
        if i:
            gxs[j] += c * i * x0 ** (i - 1)
    p = [0] * (2 * top + 1)
    for j1, c1 in enumerate(gxs):
        if c1:
            for j2, c2 in enumerate(gxs):
                if c2:
                    p[j1 + j2] += c1 * c2
    for j, c in enumerate(gs):
        p[j] -= c
    q = [j * c for j, c in enumerate(gs)][1:]
    while p and p[-1] == 0:
        p.pop()
    while q and q[-1] == 0:
        q.pop()
    return _divides_univariate(p, q)


def division_verdict(terms: Terms) -> bool:
    """True iff g_y exactly divides g_x^2 - g in Q[x, y].

    Sound fast path: a failed division after substituting any integer for x
    proves bivariate failure; cases passing every specialization get the
    full bivariate check.
    """
    for x0 in SPECIALIZATION_POINTS:
        if not _specialized_check(terms, x0):
            return False
    num = _symbolic_numerator(terms)
    if not num:
        return True
    gy = _gy_terms(terms)
    p = BivariatePolynomial({e: Fraction(c) for e, c in num.items()})
    q = BivariatePolynomial({e: Fraction(c) for e, c in gy.items()})
    try:
        exact_div(p, q)
        return True
    except NotDivisible:
        return False


# ---------------------------------------------------------------------------
# Normal-form route (lean staged reimplementation of the jet recursions).
# ---------------------------------------------------------------------------


def _ser_mul(a, b, length):
    out = [0] * length
    lb = len(b)
    for i in range(min(len(a), length)):
        ca = a[i]
        if not ca:
            continue
        top = lb if lb < length - i else length - i
        for j in range(top):
            bj = b[j]
            if bj:
                out[i + j] += ca * bj
    return out


def _ser_submul(w, a, b, length):
    """w -= a * b, truncated to ``length`` (in place)."""
    lb = len(b)
    for i in range(min(len(a), length)):
        ca = a[i]
        if not ca:
            continue
        top = lb if lb < length - i else length - i
        for j in range(top):
            bj = b[j]
            if bj:
                w[i + j] -= ca * bj


def _sqrt1(u, length):
    m = [0] * length
    m[0] = _QQ(1)
    for l in range(1, length):
        acc = u[l] if l < len(u) else 0
        for i in range(1, l):
            acc -= m[i] * m[l - i]
        m[l] = acc / 2
    return m


def _cbrt1(u, length):
    m = [0] * length
    msq = [0] * length
    m[0] = _QQ(1)
    msq[0] = _QQ(1)
    for l in range(1, length):
        known = 0
        for i in range(1, l):
            known += m[i] * msq[l - i]
        inner = 0
        for p in range(1, l):
            inner += m[p] * m[l - p]
        ul = u[l] if l < len(u) else 0
        m[l] = (ul - known - inner) / 3
        msq[l] = 2 * m[l] + inner
    return m


def _recip1(m, length):
    r = [0] * length
    r[0] = _QQ(1)
    for l in range(1, length):
        acc = 0
        for i in range(1, l + 1):
            if i < len(m) and m[i]:
                acc += m[i] * r[l - i]
        r[l] = -acc
    return r


def _x_slices(terms: Terms, inv_lead, order: int) -> list[list]:
    gh = [[0] * (order - k + 1) for k in range(order + 1)]
    for i, j, c in terms:
        if i <= order and j <= order - i:
            gh[i][j] = c * inv_lead
    return gh


def morse_tau(terms: Terms, order: int) -> list:
    """True tau coefficients [tau_0 .. tau_order] of the Morse normalization."""
    lead = 0
    for i, j, c in terms:
        if (i, j) == (0, 2):
            lead = c
    a = _QQ(lead)
    gh = _x_slices(terms, 1 / a, order)
    u0 = gh[0][2:]
    m0 = _sqrt1(u0, max(order, 1))
    inv_m0 = _recip1(m0, max(order, 1))
    phi = [[0] + m0[:order]]
    tau = [0] * (order + 1)
    for k in range(1, order + 1):
        zlen = order - k + 1
        w = list(gh[k])
        for i in range(1, k):
            _ser_submul(w, phi[i], phi[k - i], zlen)
        tau[k] = a * w[0]
        pk = _ser_mul(w[1:], inv_m0, zlen - 1 if zlen > 1 else 0)
        phi.append([c / 2 for c in pk])
    return tau


def _morse_residual_zero(tau: list, order: int) -> bool:
    """(tau')^2 - tau == 0 through x^(order-1)."""
    for l in range(order):
        acc = -tau[l] if l < len(tau) else 0
        for p in range(l + 1):
            q = l - p
            tp = tau[p + 1] if p + 1 < len(tau) else 0
            tq = tau[q + 1] if q + 1 < len(tau) else 0
            if tp and tq:
                acc += (p + 1) * (q + 1) * tp * tq
        if acc:
            return False
    return True


def morse_verdict(terms: Terms, stages=MORSE_STAGES) -> bool:
    """Locally reducible to +-w^2 + {0, x^2/4}?  Decided by the normalization
    residual with staged escalation; an all-j>=2 support means tau == 0
    exactly (the critical branch is y = 0), which shortcuts to True."""
    if all(j >= 2 for _, j, _ in terms):
        return True
    for order in stages:
        if not _morse_residual_zero(morse_tau(terms, order), order):
            return False
    return True


def cubic_data(terms: Terms, order: int):
    """(scale b, t_hat list, true beta list) of the cubic normalization."""
    lead = 0
    for i, j, c in terms:
        if (i, j) == (0, 3):
            lead = c
    b = _QQ(lead)
    gh = _x_slices(terms, 1 / b, order)
    u0 = gh[0][3:]
    m0 = _cbrt1(u0, max(order, 1))
    m0sq = _ser_mul(m0, m0, max(order, 1))
    inv_m0sq = _recip1(m0sq, max(order, 1))
    phi = [[0] + m0[:order]]
    pair_sums = [_ser_mul(phi[0], phi[0], order + 1)]
    t_hat = [0] * (order + 1)
    beta = [0] * (order + 1)
    for k in range(1, order + 1):
        zlen = order - k + 1
        w = list(gh[k])
        s_k = [0] * zlen
        half = k // 2
        for i in range(1, half + 1):
            j = k - i
            if i == j:
                sq = _ser_mul(phi[i], phi[i], zlen)
                for l in range(zlen):
                    s_k[l] += sq[l]
            else:
                prod = _ser_mul(phi[i], phi[j], zlen)
                for l in range(zlen):
                    s_k[l] += 2 * prod[l]
        _ser_submul(w, phi[0], s_k, zlen)
        for l in range(1, k):
            _ser_submul(w, phi[l], pair_sums[k - l], zlen)
        for i in range(1, k):
            ti = t_hat[i]
            if ti:
                src = phi[k - i]
                for l in range(min(zlen, len(src))):
                    w[l] -= ti * src[l]
        beta[k] = b * w[0]
        tk = w[1] if zlen > 1 else 0
        t_hat[k] = tk
        rem = w[2:]
        if tk:
            rem = [
                rem[l] - tk * m0[l + 1] if l + 1 < len(m0) else rem[l]
                for l in range(len(rem))
            ]
        pk = _ser_mul(rem, inv_m0sq, zlen - 2 if zlen > 2 else 0)
        pk = [c / 3 for c in pk]
        phi.append(pk)
        full = s_k
        extra = _ser_mul(phi[0], pk, zlen)
        for l in range(zlen):
            full[l] += 2 * extra[l]
        pair_sums.append(full)
    return b, t_hat, beta


def _cubic_residuals_zero(b, t_hat, beta, order: int) -> bool:
    """R1 = 3 t' beta' - t and R2 = -b^2 t (t')^2 + 3 (beta')^2 - 3 beta
    both zero through x^(order-1)."""
    # R1
    for l in range(order):
        acc = -t_hat[l] if l < len(t_hat) else 0
        for p in range(l + 1):
            q = l - p
            tp = t_hat[p + 1] if p + 1 < len(t_hat) else 0
            bq = beta[q + 1] if q + 1 < len(beta) else 0
            if tp and bq:
                acc += 3 * (p + 1) * (q + 1) * tp * bq
        if acc:
            return False
    # (t')^2 and (beta')^2 up to order-1
    tsq = [0] * order
    bsq = [0] * order
    for l in range(order):
        at = 0
        ab = 0
        for p in range(l + 1):
            q = l - p
            tp = t_hat[p + 1] if p + 1 < len(t_hat) else 0
            tq = t_hat[q + 1] if q + 1 < len(t_hat) else 0
            bp = beta[p + 1] if p + 1 < len(beta) else 0
            bq = beta[q + 1] if q + 1 < len(beta) else 0
            if tp and tq:
                at += (p + 1) * (q + 1) * tp * tq
            if bp and bq:
                ab += (p + 1) * (q + 1) * bp * bq
        tsq[l] = at
        bsq[l] = ab
    b2 = b * b
    for l in range(order):
        acc = 3 * bsq[l] - 3 * (beta[l] if l < len(beta) else 0)
        conv = 0
        for p in range(l + 1):
            tl = t_hat[p] if p < len(t_hat) else 0
            if tl and tsq[l - p]:
                conv += tl * tsq[l - p]
        acc -= b2 * conv
        if acc:
            return False
    return True


def cubic_verdict(terms: Terms, stages=CUBIC_STAGES) -> bool:
    """Locally reducible to w^3 + {0, x^2/4}?  Staged residual decision;
    an all-j>=3 support shortcuts to True (t == beta == 0 exactly)."""
    if all(j >= 3 for _, j, _ in terms):
        return True
    for order in stages:
        b, t_hat, beta = cubic_data(terms, order)
        if not _cubic_residuals_zero(b, t_hat, beta, order):
            return False
    return True


# ---------------------------------------------------------------------------
# Sweep drivers.
# ---------------------------------------------------------------------------


@dataclass
class SweepReport:
    checked: int  # deduplicated cases decided
    represented: int  # including y-flip multiplicities
    admissible_local: int
    divisible: int
    mismatches: list[Terms]  # normal-form True / division False
    anomalies: list[Terms]  # division True / normal-form False (impossible)


def _run_shard(args) -> SweepReport:
    fixed_j, lo, hi = args
    verdict = morse_verdict if fixed_j == 2 else cubic_verdict
    checked = represented = adm = div = 0
    mismatches: list[Terms] = []
    anomalies: list[Terms] = []
    for terms, mult in enumerate_cases(fixed_j, (lo, hi)):
        local = verdict(terms)
        divides = division_verdict(terms)
        checked += 1
        represented += mult
        if local:
            adm += 1
        if divides:
            div += 1
        if local != divides:
            if divides and not local:
                anomalies.append(terms)
            else:
                mismatches.append(terms)
    return SweepReport(checked, represented, adm, div, mismatches, anomalies)


def run_sweep(fixed_j: int, processes: int = 2, shards_per_process: int = 8) -> SweepReport:
    """Full agreement sweep for y-order ``fixed_j`` (2: Morse, 3: cubic)."""
    total = combo_count(fixed_j)
    shards = max(processes * shards_per_process, 1)
    bounds = [
        (fixed_j, total * s // shards, total * (s + 1) // shards) for s in range(shards)
    ]
    if processes <= 1:
        reports = [_run_shard(b) for b in bounds]
    else:
        with Pool(processes) as pool:
            reports = pool.map(_run_shard, bounds)
    merged = SweepReport(0, 0, 0, 0, [], [])
    for r in reports:
        merged.checked += r.checked
        merged.represented += r.represented
        merged.admissible_local += r.admissible_local
        merged.divisible += r.divisible
        merged.mismatches.extend(r.mismatches)
        merged.anomalies.extend(r.anomalies)
    merged.mismatches.sort()
    merged.anomalies.sort()
    return merged


def terms_to_polynomial(terms: Terms) -> BivariatePolynomial:
    return BivariatePolynomial({(i, j): Fraction(c) for i, j, c in terms})


# ---------------------------------------------------------------------------
# Homogeneous sweep (linear-form-power test vs division).
# ---------------------------------------------------------------------------


def homogeneous_cases(degree: int):
    """All nonzero homogeneous integer polynomials of the given degree with
    coefficients in -2..2 and some y-dependence."""
    monos = [(degree - j, j) for j in range(degree + 1)]
    for coeffs in itertools.product(range(-2, 3), repeat=degree + 1):
        if all(c == 0 for c in coeffs[1:]):
            continue  # g_y == 0 (only the x^degree slot may be nonzero)
        yield tuple(
            (i, j, c) for (i, j), c in zip(monos, coeffs) if c
        )


def homogeneous_pattern_verdict(terms: Terms) -> bool:
    """x-multiplicity m != 1 and the cofactor is a k-th power of a linear
    form, tested by the exact proportionality q_y^k c^(k-1) == q^(k-1) (kc)^k."""
    m = min(i for i, _, _ in terms)
    q = BivariatePolynomial({(i - m, j): Fraction(c) for i, j, c in terms})
    k = int(q.degree())
    if m == 1 or k < 1:
        return False
    ck = q.coefficient(0, k)
    qy = q.partial_y()
    return qy**k * ck ** (k - 1) == q ** (k - 1) * (k * ck) ** k
