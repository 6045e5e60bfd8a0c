"""Truncated multivariate power series with exact rational coefficients.

A monomial is ``z^a u^b x_1^c_1 ... x_p^c_p y_1^d_1 ... y_q^d_q`` and is stored
under the key ``(a, b, (c_1, ..., c_p), (d_1, ..., d_q))``.  Truncation is in
the z-degree (``N``) and optionally the u-degree (``U``; ``None`` = unbounded).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Mapping, Optional, Sequence, Union

Key = tuple[int, int, tuple[int, ...], tuple[int, ...]]
Number = Union[int, Fraction]


class TruncationError(ValueError):
    """Coefficient requested beyond the truncation order."""


@dataclass(frozen=True)
class Series:
    nx: int
    ny: int
    N: int
    U: Optional[int] = None
    terms: Mapping[Key, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for key, c in self.terms.items():
            a, b, xs, ys = key
            if len(xs) != self.nx or len(ys) != self.ny:
                raise ValueError(f"monomial {key} has the wrong number of variables")
            if a > self.N or (self.U is not None and b > self.U):
                continue
            c = Fraction(c)
            if c:
                clean[(a, b, tuple(xs), tuple(ys))] = c
        object.__setattr__(self, "terms", clean)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, nx: int, ny: int, N: int, U: Optional[int] = None) -> "Series":
        return cls(nx, ny, N, U, {})

    @classmethod
    def one(cls, nx: int, ny: int, N: int, U: Optional[int] = None) -> "Series":
        return cls(nx, ny, N, U, {(0, 0, (0,) * nx, (0,) * ny): Fraction(1)})

    @classmethod
    def monomial(cls, nx, ny, N, coeff=1, z=0, u=0, xs=None, ys=None, U=None) -> "Series":
        xs = tuple(xs) if xs is not None else (0,) * nx
        ys = tuple(ys) if ys is not None else (0,) * ny
        return cls(nx, ny, N, U, {(z, u, xs, ys): Fraction(coeff)})

    def _like(self, terms) -> "Series":
        return Series(self.nx, self.ny, self.N, self.U, terms)

    def _check(self, other: "Series"):
        if (self.nx, self.ny) != (other.nx, other.ny):
            raise ValueError("series over different variable sets")

    def _meet(self, other: "Series"):
        N = min(self.N, other.N)
        if self.U is None:
            U = other.U
        elif other.U is None:
            U = self.U
        else:
            U = min(self.U, other.U)
        return N, U

    # -- ring operations ------------------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        N, U = self._meet(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Series(self.nx, self.ny, N, U, out)

    def __neg__(self) -> "Series":
        return self._like({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def scale(self, c: Number) -> "Series":
        c = Fraction(c)
        return self._like({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "Series") -> "Series":
        return mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (self.nx, self.ny, self.N, self.U, self.terms) == (
            other.nx, other.ny, other.N, other.U, other.terms)

    def __hash__(self):
        return hash((self.nx, self.ny, self.N, self.U, frozenset(self.terms.items())))

    def constant_term(self) -> Fraction:
        return self.terms.get((0, 0, (0,) * self.nx, (0,) * self.ny), Fraction(0))

    def z_part(self, n: int) -> dict[tuple[int, tuple, tuple], Fraction]:
        """Coefficients of z^n keyed by (u, xs, ys)."""
        return {(b, xs, ys): c for (a, b, xs, ys), c in self.terms.items() if a == n}

    def dump(self) -> str:
        lines = []
        for (a, b, xs, ys), c in sorted(self.terms.items()):
            mon = [f"z^{a}", f"u^{b}"]
            mon += [f"x{i}^{e}" for i, e in enumerate(xs, 1)]
            mon += [f"y{i}^{e}" for i, e in enumerate(ys, 1)]
            lines.append(f"{c} * " + " ".join(mon))
        return "\n".join(lines)


def mul(a: Series, b: Series) -> Series:
    a._check(b)
    N, U = a._meet(b)
    out: dict[Key, Fraction] = {}
    for (za, ua, xa, ya), ca in a.terms.items():
        for (zb, ub, xb, yb), cb in b.terms.items():
            z = za + zb
            u = ua + ub
            if z > N or (U is not None and u > U):
                continue
            k = (z, u, tuple(p + q for p, q in zip(xa, xb)), tuple(p + q for p, q in zip(ya, yb)))
            out[k] = out.get(k, 0) + ca * cb
    return Series(a.nx, a.ny, N, U, out)


def log1p(a: Series) -> Series:
    """log(1 + a) for a series with zero constant term."""
    if a.constant_term() != 0:
        raise ValueError("log1p needs a zero constant term")
    if any(k[0] == 0 for k in a.terms):
        # nilpotence in z is what makes the truncated sum finite
        raise ValueError("log1p needs every term to carry a positive power of z")
    result = Series.zero(a.nx, a.ny, a.N, a.U)
    power = a
    k = 1
    while power.terms:
        result = result + power.scale(Fraction((-1) ** (k + 1), k))
        power = mul(power, a)
        k += 1
    return result


def exp_minus_one(a: Series) -> Series:
    """exp(a) - 1 for a series whose terms all carry a positive power of z."""
    if any(k[0] == 0 for k in a.terms):
        raise ValueError("exp_minus_one needs every term to carry a positive power of z")
    result = Series.zero(a.nx, a.ny, a.N, a.U)
    power = a
    k = 1
    while power.terms:
        result = result + power.scale(Fraction(1, factorial(k)))
        power = mul(power, a)
        k += 1
    return result


def z_dz(a: Series) -> Series:
    return a._like({k: k[0] * c for k, c in a.terms.items()})


@dataclass(frozen=True)
class LinearForm:
    """sum_j xs[j] * x'_j + u * u  over a new set of x variables."""

    xs: tuple[Fraction, ...]
    u: Fraction = Fraction(0)


def _form_power(form: LinearForm, e: int) -> dict[tuple[int, tuple[int, ...]], Fraction]:
    """Expand form^e into {(u-degree, x-degrees): coefficient}."""
    coeffs = list(form.xs) + [form.u]
    nvar = len(coeffs)
    out: dict[tuple[int, tuple[int, ...]], Fraction] = {}

    def rec(i, left, exps, mult, val):
        if i == nvar - 1:
            exps = exps + (left,)
            c = mult * val * Fraction(coeffs[-1]) ** left
            if c:
                key = (exps[-1], exps[:-1])
                out[key] = out.get(key, 0) + c
            return
        for k in range(left + 1):
            ck = Fraction(coeffs[i]) ** k
            if k and not ck:
                break
            rec(i + 1, left - k, exps + (k,), mult * comb(left, k), val * ck)

    rec(0, e, (), 1, Fraction(1))
    return out


def substitute(
    a: Series,
    x: Optional[Sequence[LinearForm]] = None,
    y: Union[None, Number, Sequence[Number]] = None,
    z: Optional[Number] = None,
) -> Series:
    """Exact substitution.

    ``x[i]`` replaces x_{i+1} by a linear form in new x variables and u; ``y``
    scales every y_i (scalar) or each one separately (sequence); ``z`` scales z.
    Omitted arguments leave those variables alone.
    """
    if x is None:
        nx_new = a.nx
        x_forms = None
    else:
        if len(x) != a.nx:
            raise ValueError(f"need {a.nx} x-assignments, got {len(x)}")
        widths = {len(f.xs) for f in x}
        if len(widths) > 1:
            raise ValueError("x-assignments must share one target variable set")
        nx_new = widths.pop() if widths else 0
        x_forms = x
    if y is None:
        y_scale = [Fraction(1)] * a.ny
    elif isinstance(y, (int, Fraction)):
        y_scale = [Fraction(y)] * a.ny
    else:
        if len(y) != a.ny:
            raise ValueError(f"need {a.ny} y-scalings")
        y_scale = [Fraction(v) for v in y]
    z_scale = Fraction(1 if z is None else z)

    out: dict[Key, Fraction] = {}
    cache: dict[tuple[int, int], dict] = {}
    for (za, ua, xs, ys), c in a.terms.items():
        c = c * z_scale**za
        for s, e in zip(y_scale, ys):
            c *= s**e
        if not c:
            continue
        if x_forms is None:
            parts = {(0, xs): Fraction(1)}
        else:
            parts = {(0, (0,) * nx_new): Fraction(1)}
            for i, e in enumerate(xs):
                if e == 0:
                    continue
                if (i, e) not in cache:
                    cache[(i, e)] = _form_power(x_forms[i], e)
                nxt: dict = {}
                for (ub, xb), cb in parts.items():
                    for (uf, xf), cf in cache[(i, e)].items():
                        k = (ub + uf, tuple(p + q for p, q in zip(xb, xf)))
                        nxt[k] = nxt.get(k, 0) + cb * cf
                parts = nxt
        for (du, xn), cp in parts.items():
            key = (za, ua + du, xn, ys)
            out[key] = out.get(key, 0) + c * cp
    return Series(nx_new, a.ny, a.N, a.U, out)


def coeff(a: Series, z: int = 0, u: int = 0, xs: Sequence[int] = None, ys: Sequence[int] = None) -> Fraction:
    """Stored coefficient, or 0; raises beyond the truncation order."""
    if z > a.N or (a.U is not None and u > a.U):
        raise TruncationError(f"z^{z} u^{u} lies beyond the truncation (N={a.N}, U={a.U})")
    xs = tuple(xs) if xs is not None else (0,) * a.nx
    ys = tuple(ys) if ys is not None else (0,) * a.ny
    return a.terms.get((z, u, xs, ys), Fraction(0))


def identity_forms(nx: int) -> list[LinearForm]:
    return [LinearForm(tuple(Fraction(int(i == j)) for j in range(nx))) for i in range(nx)]

