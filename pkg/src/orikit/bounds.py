"""Closed-form order bounds and coefficient threshold searches.

Real arithmetic goes through interval arithmetic with outward rounding
(mpmath's iv context), so every ceiling and sign decision is certified
instead of trusted to float rounding.  Inputs are exact ints or Fractions;
a precision ladder retries until an interval is tight enough to decide.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv

from .errors import BadT, DeltaOutOfRange, NoThreshold

_PRECISIONS = (120, 240, 480, 960, 1920)


class _Undecided(Exception):
    """Interval too wide at the current precision."""


def _with_ladder(fn):
    saved = iv.prec
    try:
        for prec in _PRECISIONS:
            iv.prec = prec
            try:
                return fn()
            except _Undecided:
                continue
        raise RuntimeError("interval precision ladder exhausted")
    finally:
        iv.prec = saved


def _iv_fraction(q: Fraction):
    return iv.mpf(q.numerator) / q.denominator


def _raw_to_fraction(raw) -> Fraction:
    sign, man, exp, _ = raw
    if not isinstance(exp, int):
        raise _Undecided
    val = Fraction(man << exp) if exp >= 0 else Fraction(man, 1 << -exp)
    return -val if sign else val


def _endpoints(x) -> tuple[Fraction, Fraction]:
    lo, hi = x._mpi_
    return _raw_to_fraction(lo), _raw_to_fraction(hi)


def _ceil_iv(x) -> int:
    lo, hi = _endpoints(x)
    cl, ch = math.ceil(lo), math.ceil(hi)
    if cl != ch:
        raise _Undecided
    return int(cl)  # mantissas may be gmpy2 ints; pin the public type


def _is_negative_iv(x) -> bool:
    lo, hi = _endpoints(x)
    if hi < 0:
        return True
    if lo >= 0:
        return False
    raise _Undecided


def parse_fraction(text: str) -> Fraction:
    """Exact rational from '3/10', '0.3', or '2'."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound: its inputs, exact integer value, and formula."""
    name: str
    inputs: tuple[tuple[str, object], ...]
    value: int
    formula: str


# ------------------------------------------------------------- order bounds

def full_part_order(t: int) -> int:
    """Part size ceil((33/10) * t^2 * 2^t) for full k-partite targets."""
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    return (33 * t * t * (1 << t) + 9) // 10


def bound_maxdeg(delta: int, eps: Fraction, case: int) -> BoundReport:
    """Oriented color budget for max degree delta, by structural case.

    Case 1 (degeneracy below delta): ceil((ln2+eps)*delta^2*2^delta).
    Case 2 (connected regular): case 1 plus two patch colors.
    Case 3 (regular, possibly disconnected): 2*ceil((ln2+eps)*(delta+1)^2*2^delta).
    """
    eps = Fraction(eps)
    if delta < 2:
        raise ValueError(f"need delta >= 2, got {delta}")
    if eps <= 0:
        raise ValueError(f"need eps > 0, got {eps}")
    inputs = (("delta", delta), ("eps", eps), ("case", case))
    if case in (1, 2):
        base = _with_ladder(
            lambda: _ceil_iv((iv.log(2) + _iv_fraction(eps))
                             * (delta * delta * (1 << delta))))
        if case == 1:
            return BoundReport("maxdeg-case1", inputs, base,
                               "ceil((ln(2)+eps)*delta^2*2^delta)")
        return BoundReport("maxdeg-case2", inputs, base + 2,
                           "ceil((ln(2)+eps)*delta^2*2^delta)+2")
    if case == 3:
        half = _with_ladder(
            lambda: _ceil_iv((iv.log(2) + _iv_fraction(eps))
                             * ((delta + 1) * (delta + 1) * (1 << delta))))
        return BoundReport("maxdeg-case3", inputs, 2 * half,
                           "2*ceil((ln(2)+eps)*(delta+1)^2*2^delta)")
    raise ValueError(f"case must be 1, 2 or 3, got {case}")


def bound_degeneracy(delta: int, alpha: Fraction) -> BoundReport:
    """Budget ceil(alpha*(2*alpha*ln2+2)*delta^2*2^(alpha*delta))."""
    alpha = Fraction(alpha)
    if delta < 2:
        raise ValueError(f"need delta >= 2, got {delta}")
    if not 0 < alpha <= 1:
        raise ValueError(f"need 0 < alpha <= 1, got {alpha}")

    def go():
        a = _iv_fraction(alpha)
        ad = alpha * delta
        if ad.denominator == 1:
            pow2 = iv.mpf(1 << ad.numerator)
        else:
            pow2 = iv.exp(_iv_fraction(ad) * iv.log(2))
        return _ceil_iv(a * (2 * a * iv.log(2) + 2)
                        * (delta * delta) * pow2)

    value = _with_ladder(go)
    return BoundReport(
        "degeneracy-ratio", (("delta", delta), ("alpha", alpha)), value,
        "ceil(alpha*(2*alpha*ln(2)+2)*delta^2*2^(alpha*delta))")


def bound_two_dipath(k: int, t: int) -> BoundReport:
    """Budget k*ceil((33/10)*t^2*2^t) for 2-dipath color count k, degeneracy t.

    Requires 2^t >= k (the guide coloring must fit into t-bit patterns);
    raises BadT otherwise.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if t < 1 or (1 << t) < k:
        raise BadT(k, t)
    value = k * full_part_order(t)
    return BoundReport("two-dipath", (("k", k), ("t", t)), value,
                       "k*ceil((33/10)*t^2*2^t)")


def prior_bounds(delta: int, d: int, chi2: int) -> tuple[BoundReport, ...]:
    """Earlier published budgets, for side-by-side comparison."""
    if not (1 <= d <= delta) or chi2 < 1:
        raise ValueError(f"need 1 <= d <= delta and chi2 >= 1, "
                         f"got d={d}, delta={delta}, chi2={chi2}")
    return (
        BoundReport("maxdeg-quadratic", (("delta", delta),),
                    2 * delta * delta * (1 << delta), "2*delta^2*2^delta"),
        BoundReport("maxdeg-degeneracy-product", (("delta", delta), ("d", d)),
                    16 * delta * d * (1 << d), "16*delta*d*2^d"),
        BoundReport("two-dipath-exponential", (("chi2", chi2),),
                    (1 << chi2) - 1, "2^chi2-1"),
        BoundReport("maxdeg-refined", (("delta", delta),),
                    (delta - 1) * (delta - 1) * (1 << delta) + 2,
                    "(delta-1)^2*2^delta+2"),
    )


# ------------------------------------------------- coefficient thresholds

def _full_log_bound(c: Fraction, t: int):
    """Certified sign of 1+(1+log2 c)t+2t*log2 t+(1-c*log2 e)t^2."""
    ln2 = iv.log(2)
    log2c = iv.log(_iv_fraction(c)) / ln2
    log2t = iv.log(t) / ln2 if t > 1 else iv.mpf(0)
    expr = (1 + (1 + log2c) * t + 2 * t * log2t
            + (1 - _iv_fraction(c) / ln2) * (t * t))
    return _is_negative_iv(expr)


def full_coefficient_threshold(c: Fraction, window: int = 16,
                               t_cap: int = 200_000) -> tuple[int, int]:
    """Smallest t making the union-bound exponent negative; returns (t, 2^t).

    A coefficient c in the part-size formula c*t^2*2^t works once
    1+(1+log2 c)t+2t*log2 t+(1-c*log2 e)t^2 < 0, which requires c > ln 2;
    below that NoThreshold is raised.  Negativity is re-checked on
    [t, t+window] so the returned t is not a transient dip.
    """
    c = Fraction(c)
    if c <= 0:
        raise ValueError(f"need c > 0, got {c}")

    def below_ln2():
        lo, hi = _endpoints(iv.log(2) - _iv_fraction(c))
        if lo > 0:
            return True
        if hi < 0:
            return False
        raise _Undecided

    if _with_ladder(below_ln2):
        raise NoThreshold(c)
    t = 1
    while t <= t_cap:
        if _with_ladder(lambda: _full_log_bound(c, t)):
            if all(_with_ladder(lambda j=j: _full_log_bound(c, j))
                   for j in range(t + 1, t + window + 1)):
                return t, 1 << t
        t += 1
    raise RuntimeError(f"no threshold found up to t={t_cap}")


def comprehensive_order(k: int, eps: Fraction) -> int:
    """Tournament order ceil((ln2+eps)*k^2*2^k) used by the threshold scans."""
    return _with_ladder(
        lambda: _ceil_iv((iv.log(2) + _iv_fraction(eps))
                         * (k * k * (1 << k))))


def _chained_log_bound(k: int, eps: Fraction):
    """Certified sign of k*ln(n) + 1/2 + k - L*k^2 - k^2/(4L*k^2+2)."""
    n = comprehensive_order(k, eps)
    ell = iv.log(2) + _iv_fraction(eps)
    expr = (k * iv.log(n) + 0.5 + k - ell * (k * k)
            - (k * k) / (4 * ell * (k * k) + 2))
    return _is_negative_iv(expr)


def _binomial_log_bound(k: int, eps: Fraction, dominators: int | None):
    """Certified sign of ln C(n,k-1) + (k-1)ln2 - mu*delta^2/2.

    mu = (n-k+1)/2^(k-1) and delta = 1 - D/mu are exact rationals; raises
    DeltaOutOfRange unless 0 < delta <= 1.
    """
    n = comprehensive_order(k, eps)
    d_req = dominators if dominators is not None else k + 1
    mu = Fraction(n - k + 1, 1 << (k - 1))
    delta = 1 - d_req / mu
    if not 0 < delta <= 1:
        raise DeltaOutOfRange(k, delta)
    r = k - 1
    ln_binom = -iv.log(math.factorial(r)) if r else iv.mpf(0)
    for i in range(r):
        ln_binom += iv.log(n - i)
    expr = ln_binom + r * iv.log(2) - _iv_fraction(mu * delta * delta / 2)
    return _is_negative_iv(expr)


def comprehensive_coefficient_threshold(
        eps: Fraction, variant: str = "chained", *,
        dominators: int | None = None, window: int = 16,
        k_cap: int = 192) -> int:
    """Smallest k where the chosen union-bound estimate goes negative.

    Negativity must hold on the whole window [k, k+window].  The chained
    variant folds the binomial into n^k; the binomial variant keeps
    C(n,k-1) and the exact Chernoff exponent (a k where the Chernoff
    ratio delta leaves (0,1] fails the window).
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError(f"need eps > 0, got {eps}")
    if variant not in ("chained", "binomial"):
        raise ValueError(f"unknown variant: {variant!r}")

    def holds(j: int) -> bool:
        try:
            if variant == "chained":
                return _with_ladder(lambda: _chained_log_bound(j, eps))
            return _with_ladder(
                lambda: _binomial_log_bound(j, eps, dominators))
        except DeltaOutOfRange:
            return False

    for k in range(2, k_cap + 1):
        if holds(k) and all(holds(j) for j in range(k + 1, k + window + 1)):
            return k
    raise RuntimeError(f"no threshold found up to k={k_cap}")


# ------------------------------------------------------------ table rows

REFERENCE_COMPREHENSIVE_THRESHOLDS: tuple[tuple[Fraction, int], ...] = (
    (Fraction(1), 4),
    (Fraction(1, 2), 11),
    (Fraction(2, 5), 15),
    (Fraction(3, 10), 22),
    (Fraction(11, 40), 25),
    (Fraction(1, 4), 28),
)

REFERENCE_FULL_THRESHOLDS: tuple[tuple[Fraction, int, int], ...] = (
    (Fraction(33, 10), 1, 2),
    (Fraction(3), 2, 4),
    (Fraction(5, 2), 2, 4),
    (Fraction(2), 3, 8),
    (Fraction(3, 2), 6, 2 ** 6),
    (Fraction(1), 23, 2 ** 23),
    (Fraction(3, 4), 193, 2 ** 193),
    (Fraction(7, 10), 2310, 2 ** 2310),
    (Fraction(139, 200), 10135, 2 ** 10135),
)


def comprehensive_table_rows() -> list[dict]:
    """Reference eps thresholds next to both recomputed variants."""
    rows = []
    for eps, ref_k in REFERENCE_COMPREHENSIVE_THRESHOLDS:
        chained = comprehensive_coefficient_threshold(eps, "chained")
        binomial = comprehensive_coefficient_threshold(eps, "binomial")
        rows.append({
            "eps": eps,
            "reference_k": ref_k,
            "chained_k": chained,
            "chained_dev": chained - ref_k,
            "binomial_k": binomial,
            "binomial_dev": binomial - ref_k,
            "within_2": min(abs(chained - ref_k), abs(binomial - ref_k)) <= 2,
        })
    return rows


def _is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def degeneracy_table_rows(deltas: tuple[int, ...] = (4, 16, 64)) -> list[dict]:
    """Leading-term budgets for four degeneracy regimes at sample deltas.

    Lower-order corrections are dropped, so these are formula evaluations
    for comparison, not certified bounds.
    """
    alpha = Fraction(1, 2)
    c = 2
    rows = [
        {"regime": "d <= alpha*delta", "parameter": f"alpha={alpha}",
         "formula": "ceil(alpha*(2*alpha*ln(2)+2)*delta^2*2^(alpha*delta))",
         "values": {d: bound_degeneracy(d, alpha).value for d in deltas}},
    ]

    def sub_exponential(d: int) -> int:
        s = math.isqrt(d)
        if s * s == d:
            return 2 * s ** 3 * (1 << s)
        return _with_ladder(
            lambda: _ceil_iv(2 * iv.sqrt(d * d * d)
                             * iv.exp(iv.sqrt(d) * iv.log(2))))

    rows.append(
        {"regime": "d <= delta^alpha", "parameter": f"alpha={alpha}",
         "formula": "2*delta^(1+alpha)*2^(delta^alpha)",
         "values": {d: sub_exponential(d) for d in deltas}})

    def logarithmic(d: int) -> int:
        if _is_power_of_two(d):
            return 2 * d * d * (d.bit_length() - 1)
        return _with_ladder(
            lambda: _ceil_iv(2 * (d * d) * iv.log(d) / iv.log(2)))

    rows.append(
        {"regime": "d <= log2(delta)", "parameter": "",
         "formula": "2*delta^2*log2(delta)",
         "values": {d: logarithmic(d) for d in deltas}})
    rows.append(
        {"regime": "d <= c", "parameter": f"c={c}",
         "formula": "2*c*2^c*delta",
         "values": {d: 2 * c * (1 << c) * d for d in deltas}})
    return rows


def full_table_rows() -> list[dict]:
    """Reference coefficient thresholds next to the recomputed scan."""
    rows = []
    for c, ref_t, ref_k in REFERENCE_FULL_THRESHOLDS:
        t, k = full_coefficient_threshold(c)
        rows.append({
            "coefficient": c,
            "t": t,
            "k": k,
            "k_display": f"2^{t}" if t >= 6 else str(k),
            "reference_t": ref_t,
            "reference_k": ref_k,
            "matches": t == ref_t and k == ref_k,
        })
    return rows
