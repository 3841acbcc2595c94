"""Truncated power series over an exact field (duck-typed coefficients).

A series is a plain list of coefficients [c0, ..., cN] representing a value
mod t^(N+1).  All helpers keep the input length.  Coefficients only need
+, -, *, / and truthiness, so Q(w) and its quadratic extensions both work.
"""

from __future__ import annotations

from typing import Sequence


def valuation(s: Sequence[object]) -> int | None:
    """Index of the first nonzero coefficient, or None for the zero window."""
    for i, c in enumerate(s):
        if c:
            return i
    return None


def add(a: Sequence[object], b: Sequence[object]) -> list[object]:
    return [x + y for x, y in zip(a, b)]


def sub(a: Sequence[object], b: Sequence[object]) -> list[object]:
    return [x - y for x, y in zip(a, b)]


def scale(a: Sequence[object], c: object) -> list[object]:
    return [c * x for x in a]


def mul(a: Sequence[object], b: Sequence[object]) -> list[object]:
    n = len(a)
    zero = a[0] * 0
    out = [zero] * n
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j in range(n - i):
            cb = b[j]
            if cb:
                out[i + j] = out[i + j] + ca * cb
    return out


def divide(num: Sequence[object], den: Sequence[object]) -> list[object]:
    """Exact truncated quotient; requires val(num) >= val(den).

    The result is correct mod t^(N+1-val(den)); higher coefficients are
    padded with zeros, which the Newton iteration tolerates because it
    re-verifies the residual at full precision.
    """
    n = len(num)
    v = valuation(den)
    if v is None:
        raise ZeroDivisionError("series division by zero window")
    vn = valuation(num)
    if vn is None:
        return [num[0] * 0] * n
    if vn < v:
        raise ValueError("division would produce a pole")
    zero = num[0] * 0
    nn = list(num[v:]) + [zero] * v
    dd = list(den[v:]) + [zero] * v
    lead = dd[0]
    out = [zero] * n
    for i in range(n):
        acc = nn[i]
        for j in range(i):
            if out[j] and dd[i - j]:
                acc = acc - out[j] * dd[i - j]
        out[i] = acc / lead
    return out


def eval_bivariate(
    poly: dict[tuple[int, int], object],
    u: Sequence[object],
    v: Sequence[object],
) -> list[object]:
    """Compose a bivariate polynomial with two series (same truncation)."""
    n = len(u)
    zero = u[0] * 0
    one_series = [zero] * n
    one_series[0] = zero + 1
    u_pows: list[list[object]] = [one_series]
    v_pows: list[list[object]] = [one_series]
    max_i = max((k[0] for k in poly), default=0)
    max_j = max((k[1] for k in poly), default=0)
    for _ in range(max_i):
        u_pows.append(mul(u_pows[-1], u))
    for _ in range(max_j):
        v_pows.append(mul(v_pows[-1], v))
    out = [zero] * n
    for (i, j), c in poly.items():
        term = mul(u_pows[i], v_pows[j])
        for k in range(n):
            if term[k]:
                out[k] = out[k] + c * term[k]
    return out
