"""Exact truncated power series over the integers, and the generating
functions the enumeration oracles are checked against.

Coefficients are plain Python ints, so nothing overflows no matter the
truncation order.  Multiplying by (1 +- q^e) and dividing by (1 - q^e) are
linear passes; everything else is built from those two kernels.  The
bivariate variant tracks an extra length-counting variable x, with the
coefficient of q^n stored as a sparse integer polynomial in x.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import DivergentProductError
from .membership import BressoudParams

# -- list kernels (coefficients c[0..qmax]) -----------------------------


def _mul_one_plus(c: list[int], e: int, sign: int = 1) -> None:
    """c *= (1 + sign*q^e), exactly, in place."""
    if e == 0:
        if sign == -1:
            for n in range(len(c)):
                c[n] = 0
        else:
            for n in range(len(c)):
                c[n] *= 2
        return
    for n in range(len(c) - 1, e - 1, -1):
        c[n] += sign * c[n - e]


def _div_one_minus(c: list[int], e: int) -> None:
    """c *= 1/(1 - q^e), exactly, in place."""
    if e <= 0:
        raise ValueError(f"geometric divisor needs a positive exponent, got {e}")
    for n in range(e, len(c)):
        c[n] += c[n - e]


def _mul(a: Sequence[int], b: Sequence[int], qmax: int) -> list[int]:
    out = [0] * (qmax + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > qmax:
            continue
        hi = min(len(b), qmax + 1 - i)
        for jj in range(hi):
            bj = b[jj]
            if bj:
                out[i + jj] += ai * bj
    return out


class TruncatedSeries:
    """Power series known exactly through q^qmax."""

    __slots__ = ("qmax", "coeffs")

    def __init__(self, coeffs: Sequence[int], qmax: Optional[int] = None):
        if qmax is None:
            qmax = len(coeffs) - 1
        c = list(coeffs[: qmax + 1]) + [0] * max(0, qmax + 1 - len(coeffs))
        self.qmax = qmax
        self.coeffs = tuple(int(x) for x in c)

    @classmethod
    def one(cls, qmax: int) -> "TruncatedSeries":
        return cls([1], qmax)

    @classmethod
    def zero(cls, qmax: int) -> "TruncatedSeries":
        return cls([], qmax)

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.qmax:
            raise IndexError(f"coefficient {n} beyond truncation order {self.qmax}")
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        q = min(self.qmax, other.qmax)
        return self.coeffs[: q + 1] == other.coeffs[: q + 1] and self.qmax == other.qmax

    def __hash__(self):
        return hash((self.qmax, self.coeffs))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.qmax >= 8 else ""
        return f"TruncatedSeries(qmax={self.qmax}, [{head}{tail}])"

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        q = min(self.qmax, other.qmax)
        return TruncatedSeries(
            [self.coeffs[n] + other.coeffs[n] for n in range(q + 1)], q
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        q = min(self.qmax, other.qmax)
        return TruncatedSeries(
            [self.coeffs[n] - other.coeffs[n] for n in range(q + 1)], q
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries([c * other for c in self.coeffs], self.qmax)
        q = min(self.qmax, other.qmax)
        return TruncatedSeries(_mul(self.coeffs, other.coeffs, q), q)

    __rmul__ = __mul__

    def shift(self, e: int) -> "TruncatedSeries":
        """Multiply by q^e (e >= 0)."""
        return TruncatedSeries([0] * e + list(self.coeffs), self.qmax)

    def reciprocal(self) -> "TruncatedSeries":
        """Inverse series; the constant term must be +-1 to stay integral."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError(f"reciprocal needs a unit constant term, got {c0}")
        out = [0] * (self.qmax + 1)
        out[0] = c0
        for n in range(1, self.qmax + 1):
            acc = sum(self.coeffs[i] * out[n - i] for i in range(1, n + 1))
            out[n] = -acc * c0
        return TruncatedSeries(out, self.qmax)

    def truncate(self, qmax: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[: qmax + 1], min(qmax, self.qmax))


def pochhammer(sign: int, c: int, step: int, n: Optional[int], qmax: int) -> TruncatedSeries:
    """Truncated product of (1 + sign*q^(c + i*step)) for i < n (n=None: infinite).

    Factors whose exponent exceeds qmax are skipped; a (1 - q^0) factor
    collapses the series to zero.  Infinite products demand exponents that
    eventually leave the window, i.e. step >= 1 and c >= 0.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +-1, got {sign}")
    coeffs = [1] + [0] * qmax
    if n is None:
        if step < 1:
            raise DivergentProductError(
                f"infinite product with step {step} never leaves [0, {qmax}]"
            )
        if c < 0:
            raise DivergentProductError(f"infinite product starting at exponent {c} < 0")
        e = c
        while e <= qmax:
            _mul_one_plus(coeffs, e, sign)
            e += step
        return TruncatedSeries(coeffs, qmax)
    if n < 0:
        raise ValueError(f"factor count must be >= 0, got {n}")
    for i in range(n):
        e = c + i * step
        if e < 0:
            raise ValueError(f"negative exponent {e} in finite product")
        if e <= qmax:
            _mul_one_plus(coeffs, e, sign)
    return TruncatedSeries(coeffs, qmax)


# -- bivariate ----------------------------------------------------------


def _badd_into(dst: dict, src: dict, scale: int = 1) -> None:
    for d, v in src.items():
        nv = dst.get(d, 0) + scale * v
        if nv:
            dst[d] = nv
        else:
            dst.pop(d, None)


class BivariateSeries:
    """Series in q (truncated) whose q^n coefficient is a polynomial in x."""

    __slots__ = ("qmax", "coeffs")

    def __init__(self, coeffs: Sequence[dict], qmax: Optional[int] = None):
        if qmax is None:
            qmax = len(coeffs) - 1
        cs = [dict(coeffs[n]) if n < len(coeffs) else {} for n in range(qmax + 1)]
        self.qmax = qmax
        self.coeffs = tuple(
            {d: v for d, v in c.items() if v} for c in cs
        )

    @classmethod
    def one(cls, qmax: int) -> "BivariateSeries":
        return cls([{0: 1}], qmax)

    @classmethod
    def zero(cls, qmax: int) -> "BivariateSeries":
        return cls([], qmax)

    def coefficient(self, n: int, xdeg: int) -> int:
        return self.coeffs[n].get(xdeg, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self.qmax == other.qmax and self.coeffs == other.coeffs

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        q = min(self.qmax, other.qmax)
        out = [dict(self.coeffs[n]) for n in range(q + 1)]
        for n in range(q + 1):
            _badd_into(out[n], other.coeffs[n])
        return BivariateSeries(out, q)

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        q = min(self.qmax, other.qmax)
        out: list[dict] = [{} for _ in range(q + 1)]
        for i in range(q + 1):
            ci = self.coeffs[i]
            if not ci:
                continue
            for jj in range(q + 1 - i):
                cj = other.coeffs[jj]
                if not cj:
                    continue
                dst = out[i + jj]
                for da, va in ci.items():
                    for db, vb in cj.items():
                        nd = da + db
                        nv = dst.get(nd, 0) + va * vb
                        if nv:
                            dst[nd] = nv
                        else:
                            dst.pop(nd, None)
        return BivariateSeries(out, q)

    def times_x(self, d: int) -> "BivariateSeries":
        return BivariateSeries(
            [{xd + d: v for xd, v in c.items()} for c in self.coeffs], self.qmax
        )

    def shift(self, e: int) -> "BivariateSeries":
        return BivariateSeries([{}] * e + [dict(c) for c in self.coeffs], self.qmax)

    def at_x1(self) -> TruncatedSeries:
        return TruncatedSeries([sum(c.values()) for c in self.coeffs], self.qmax)


def _bmul_one_plus_xq(coeffs: list[dict], e: int) -> None:
    """coeffs *= (1 + x*q^e), in place."""
    for n in range(len(coeffs) - 1, e - 1, -1):
        _badd_into(coeffs[n], {d + 1: v for d, v in coeffs[n - e].items()})


def _bdiv_one_minus(coeffs: list[dict], e: int) -> None:
    for n in range(e, len(coeffs)):
        _badd_into(coeffs[n], coeffs[n - e])


# -- the four generating-function constructions -------------------------


def _tuple_min_exponent(params: BressoudParams, values: list[int]) -> int:
    """Valuation of one multi-sum term: quadratic prefactor minus the shift
    absorbed from the negative-exponent finite products."""
    eta, r = params.eta, params.r
    base = eta * sum(v * v for v in values) + eta * sum(values[params.r - 1 :])
    neg = 0
    for s, a in enumerate(params.alphas, start=1):
        ns = values[s - 1]
        neg += a * ns + eta * (ns * (ns - 1)) // 2
    return base - neg


def bressoud_multisum(params: BressoudParams, qmax: int) -> TruncatedSeries:
    """The multi-sum generating function, summed over all index tuples whose
    term valuation fits under qmax."""
    eta, k, r = params.eta, params.k, params.r
    if k < 2:
        raise ValueError(f"multi-sum needs k >= 2, got k={k}")
    if params.lam > k - 1:
        raise ValueError(f"needs lambda <= k-1, got lambda={params.lam}, k={k}")
    total = [0] * (qmax + 1)
    values: list[int] = [0] * (k - 1)

    def term() -> None:
        base = _tuple_min_exponent(params, values)
        budget = qmax - base
        c = [1] + [0] * budget
        for s, a in enumerate(params.alphas, start=1):
            # (1 + q^(a + eta*(j-1))) for j = 1..N_s, exponents taken positive
            # after pulling their total into the valuation
            for jj in range(values[s - 1]):
                e = a + eta * jj
                if e <= budget:
                    _mul_one_plus(c, e)
        for s in range(2, params.lam + 1):
            e = eta - params.alphas[s - 1] + eta * values[s - 2]
            while e <= budget:
                _mul_one_plus(c, e)
                e += eta
        diffs = [values[i] - values[i + 1] for i in range(k - 2)] + [values[k - 2]]
        for d in diffs:
            for jj in range(1, d + 1):
                if eta * jj <= budget:
                    _div_one_minus(c, eta * jj)
        for n, v in enumerate(c):
            if v:
                total[base + n] += v

    def rec(i: int) -> None:
        if i == k - 1:
            term()
            return
        cap = values[i - 1] if i > 0 else None
        v = 0
        while cap is None or v <= cap:
            values[i] = v
            if _tuple_min_exponent(params, values[: i + 1] + [0] * (k - 2 - i)) > qmax:
                values[i] = 0
                break
            rec(i + 1)
            values[i] = 0
            v += 1

    rec(0)
    return TruncatedSeries(total, qmax)


def bressoud_product(params: BressoudParams, qmax: int) -> TruncatedSeries:
    """The infinite-product generating function.

    The triple-product exponents are half-integers when lambda is odd, so the
    whole computation runs on a doubled exponent grid and is halved at the
    end; a coefficient landing on an odd doubled exponent is an error.
    """
    eta, k, r, lam = params.eta, params.k, params.r, params.lam
    Q = 2 * qmax
    c = [1] + [0] * Q
    for a in params.alphas:
        e = 2 * a
        while e <= Q:
            _mul_one_plus(c, e)
            e += 2 * eta
    mod2 = eta * (2 * (2 * k - lam + 1))
    for start in (eta * (2 * r - lam), eta * (4 * k - 2 * r - lam + 2), mod2):
        if start < 0:
            raise ValueError(f"triple-product exponent {start/2} negative; invalid parameters")
        e = start
        while e <= Q:
            _mul_one_plus(c, e, -1)
            e += mod2
    e = 2 * eta
    while e <= Q:
        _div_one_minus(c, e)
        e += 2 * eta
    out = [0] * (qmax + 1)
    for n2, v in enumerate(c):
        if not v:
            continue
        if n2 % 2:
            raise ValueError(f"fractional exponent {n2}/2 survived in the product")
        out[n2 // 2] = v
    return TruncatedSeries(out, qmax)


def gg_companion_bivariate(qmax: int) -> BivariateSeries:
    """Length-refined generating function of the eta=2, k=r=3 family:
    sum over N1 >= N2 >= 0 of
    q^(2(N1^2+N2^2)) * x^(N1+N2) * prod(1 + x q^(1+2N2+2i)) /
    ((q^2;q^2)_(N1-N2) (q^2;q^2)_(N2))."""
    total: list[dict] = [{} for _ in range(qmax + 1)]
    n1 = 0
    while 2 * n1 * n1 <= qmax:
        n2 = 0
        while n2 <= n1 and 2 * (n1 * n1 + n2 * n2) <= qmax:
            base = 2 * (n1 * n1 + n2 * n2)
            budget = qmax - base
            c: list[dict] = [{n1 + n2: 1}] + [{} for _ in range(budget)]
            e = 1 + 2 * n2
            while e <= budget:
                _bmul_one_plus_xq(c, e)
                e += 2
            for d in (n1 - n2, n2):
                for jj in range(1, d + 1):
                    if 2 * jj <= budget:
                        _bdiv_one_minus(c, 2 * jj)
            for n, poly in enumerate(c):
                _badd_into(total[base + n], poly)
            n2 += 1
        n1 += 1
    return BivariateSeries(total, qmax)


def kursungoz_cell(counts: Sequence[int], r: int, qmax: int, track_x: bool = False):
    """Generating function of one marking cell (fixed row counts):
    x^(sum N_i) q^(2(sum N_i^2 + N_r + ... + N_(k-1))) / prod (q^2;q^2)-factors."""
    counts = tuple(int(v) for v in counts)
    if any(counts[i] < counts[i + 1] for i in range(len(counts) - 1)) or any(
        v < 0 for v in counts
    ):
        raise ValueError(f"row counts must be non-increasing and >= 0, got {counts}")
    k = len(counts) + 1
    if not (k >= r >= 1):
        raise ValueError(f"need k >= r >= 1, got k={k}, r={r}")
    base = 2 * (sum(v * v for v in counts) + sum(counts[r - 1 :]))
    xdeg = sum(counts)
    if base > qmax:
        c = [0] * (qmax + 1)
        return BivariateSeries([{}] * (qmax + 1), qmax) if track_x else TruncatedSeries(c, qmax)
    budget = qmax - base
    c = [1] + [0] * budget
    diffs = [counts[i] - counts[i + 1] for i in range(k - 2)] + [counts[k - 2]]
    for d in diffs:
        for jj in range(1, d + 1):
            if 2 * jj <= budget:
                _div_one_minus(c, 2 * jj)
    shifted = [0] * base + c
    if track_x:
        return BivariateSeries([{xdeg: v} if v else {} for v in shifted], qmax)
    return TruncatedSeries(shifted, qmax)
