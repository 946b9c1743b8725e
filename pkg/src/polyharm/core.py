"""Truncated Almansi coefficient tables and pointwise calculus for planar
polyharmonic mappings.

A table of depth ``p`` and truncation ``J`` represents

    F(z) = sum_{n=1}^{p} |z|^(2(n-1)) sum_{j=1}^{J}
           ( a[n,j] * z**j + conj(b[n,j]) * conj(z)**j )

on the closed unit disk.  Every |z|^(2(n-1)) factor multiplies a harmonic
polynomial, so F solves the p-th iterated Laplace equation identically; the
finite-difference residual used by the test-suite lives in
:func:`polyharmonic_residual`.

The two Wirtinger derivatives of a single (n, j) term are

    d/dz:    (n+j-1) a z^(n+j-2) zbar^(n-1)  +  (n-1) conj(b) z^(n-2) zbar^(n+j-1)
    d/dzbar: (n-1)   a z^(n+j-1) zbar^(n-2)  +  (n+j-1) conj(b) z^(n-1) zbar^(n+j-2)

Monomials with zero exponent are 1 even at z = 0, and the factors that would
have a negative exponent carry the integer prefactor (n-1) = 0 exactly when
that happens, so they are skipped rather than formed.

All series are summed in fixed lexicographic (n, j) order with a balanced
pairwise reduction, which makes evaluation bitwise reproducible for a given
input and keeps rounding error low at these sizes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from ._search import golden_max
from .errors import DegenerateMap, InvalidParams, MalformedSpec

__all__ = [
    "CoefficientTable",
    "PolyharmonicMap",
    "DilatationPair",
    "build_map",
    "evaluate",
    "wirtinger",
    "jacobian",
    "dilatation",
    "quasiregularity_constant",
    "polyharmonic_residual",
    "conjugate_map",
    "scale_map",
]


def _tree_sum(terms: np.ndarray) -> np.ndarray:
    # Balanced pairwise sum over axis 0 with a bracketing that depends only
    # on the number of terms, never on the trailing shape.
    while terms.shape[0] > 1:
        k = terms.shape[0]
        half = terms[0:k - (k % 2):2] + terms[1:k:2]
        if k % 2:
            half = np.concatenate([half, terms[k - 1:k]], axis=0)
        terms = half
    return terms[0]


@dataclass(frozen=True)
class CoefficientTable:
    """Dense (p x J) coefficient arrays.

    ``a[n-1, j-1]`` multiplies ``z**j`` inside the ``|z|**(2(n-1))`` block and
    ``conj(b[n-1, j-1])`` multiplies ``conj(z)**j`` there.  Instances are
    immutable: the arrays are copied on construction and flagged read-only.
    """

    p: int
    J: int
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or not isinstance(self.J, (int, np.integer)):
            raise MalformedSpec("p and J must be integers")
        if self.p < 1 or self.J < 1:
            raise MalformedSpec(f"need p >= 1 and J >= 1, got p={self.p}, J={self.J}")
        a = np.array(self.a, dtype=np.complex128)
        b = np.array(self.b, dtype=np.complex128)
        shape = (int(self.p), int(self.J))
        if a.shape != shape or b.shape != shape:
            raise MalformedSpec(f"coefficient arrays must have shape {shape}, "
                                f"got {a.shape} and {b.shape}")
        if not (np.isfinite(a).all() and np.isfinite(b).all()):
            raise MalformedSpec("coefficients must be finite")
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "p", int(self.p))
        object.__setattr__(self, "J", int(self.J))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_terms(cls, p: int, J: int, terms) -> "CoefficientTable":
        """Build from an iterable of ``(n, j, a, b)`` entries; omitted entries
        are zero.  Indices are 1-based and must fall inside (p, J)."""
        if not isinstance(p, (int, np.integer)) or not isinstance(J, (int, np.integer)):
            raise MalformedSpec("p and J must be integers")
        if p < 1 or J < 1:
            raise MalformedSpec(f"need p >= 1 and J >= 1, got p={p}, J={J}")
        A = np.zeros((p, J), dtype=np.complex128)
        B = np.zeros((p, J), dtype=np.complex128)
        for entry in terms:
            try:
                n, j, av, bv = entry
            except (TypeError, ValueError) as exc:
                raise MalformedSpec(f"bad term entry {entry!r}") from exc
            if not (isinstance(n, (int, np.integer)) and isinstance(j, (int, np.integer))):
                raise MalformedSpec(f"term indices must be integers, got ({n!r}, {j!r})")
            if not (1 <= n <= p and 1 <= j <= J):
                raise MalformedSpec(f"term index (n={n}, j={j}) outside table (p={p}, J={J})")
            A[n - 1, j - 1] = complex(av)
            B[n - 1, j - 1] = complex(bv)
        return cls(int(p), int(J), A, B)

    def max_coefficient(self) -> float:
        """Largest coefficient modulus; the scale used by tolerance rules."""
        return float(max(np.abs(self.a).max(), np.abs(self.b).max()))


@dataclass(frozen=True)
class PolyharmonicMap:
    """An immutable coefficient table together with a label and free-form
    numeric metadata (truncation notes and the like)."""

    table: CoefficientTable
    label: str = ""
    meta: dict = field(default_factory=dict)

    @property
    def p(self) -> int:
        return self.table.p

    @property
    def J(self) -> int:
        return self.table.J

    def __call__(self, z):
        return evaluate(self, z)


@dataclass(frozen=True)
class DilatationPair:
    """Directional-derivative extrema at a point: ``lambda_small`` is
    | |F_z| - |F_zbar| | and ``lambda_big`` is |F_z| + |F_zbar|."""

    lambda_small: float
    lambda_big: float


def build_map(spec) -> PolyharmonicMap:
    """Construct a validated map from a :class:`~polyharm.mapspec.MappingSpec`.

    Builtin references resolve through the catalog; explicit tables are
    checked for index range and finiteness.
    """
    from .mapspec import MappingSpec  # deferred: mapspec is format-only
    if not isinstance(spec, MappingSpec):
        raise MalformedSpec(f"expected a MappingSpec, got {type(spec).__name__}")
    if spec.builtin is not None:
        from . import catalog  # deferred to keep the import graph acyclic
        F = catalog.builtin(spec.builtin, spec.params)
        if spec.label:
            F = replace(F, label=spec.label)
        return F
    if spec.p is None or spec.J is None:
        raise MalformedSpec("explicit table form needs both p and J")
    table = CoefficientTable.from_terms(spec.p, spec.J, spec.terms)
    label = spec.label or f"table(p={table.p},J={table.J})"
    return PolyharmonicMap(table, label=label)


def _power_table(zz: np.ndarray, top: int) -> list:
    # zz**k for k = 0..top by cumulative products; zz**0 is 1 even at 0
    out = [np.ones_like(zz)]
    for _ in range(top):
        out.append(out[-1] * zz)
    return out


def evaluate(F: PolyharmonicMap, z):
    """Value of the truncated series at ``z`` (scalar or ndarray)."""
    t = F.table
    zz = np.asarray(z, dtype=np.complex128)
    scalar = zz.ndim == 0
    zz = np.atleast_1d(zz)
    r2 = (zz * np.conj(zz)).real
    zp = _power_table(zz, t.J)
    rp = _power_table(r2, t.p - 1)
    terms = np.empty((t.p * t.J,) + zz.shape, dtype=np.complex128)
    idx = 0
    for n in range(1, t.p + 1):
        for j in range(1, t.J + 1):
            terms[idx] = rp[n - 1] * (t.a[n - 1, j - 1] * zp[j]
                                      + np.conj(t.b[n - 1, j - 1]) * np.conj(zp[j]))
            idx += 1
    out = _tree_sum(terms)
    return complex(out[0]) if scalar else out


def wirtinger(F: PolyharmonicMap, z):
    """Both Wirtinger derivatives ``(F_z, F_zbar)`` at ``z`` from the
    term-wise closed forms in the module docstring."""
    t = F.table
    zz = np.asarray(z, dtype=np.complex128)
    scalar = zz.ndim == 0
    zz = np.atleast_1d(zz)
    zp = _power_table(zz, t.p + t.J - 1)
    cp = [np.conj(q) for q in zp]
    terms_z = np.empty((t.p * t.J,) + zz.shape, dtype=np.complex128)
    terms_zb = np.empty_like(terms_z)
    idx = 0
    for n in range(1, t.p + 1):
        for j in range(1, t.J + 1):
            a = t.a[n - 1, j - 1]
            bc = np.conj(t.b[n - 1, j - 1])
            tz = ((n + j - 1) * a) * (zp[n + j - 2] * cp[n - 1])
            tzb = ((n + j - 1) * bc) * (zp[n - 1] * cp[n + j - 2])
            if n >= 2:
                # prefactor (n-1) vanishes identically for n = 1, which is
                # exactly when these exponents would have been negative
                tz = tz + ((n - 1) * bc) * (zp[n - 2] * cp[n + j - 1])
                tzb = tzb + ((n - 1) * a) * (zp[n + j - 1] * cp[n - 2])
            terms_z[idx] = tz
            terms_zb[idx] = tzb
            idx += 1
    fz = _tree_sum(terms_z)
    fzb = _tree_sum(terms_zb)
    if scalar:
        return complex(fz[0]), complex(fzb[0])
    return fz, fzb


def jacobian(F: PolyharmonicMap, z):
    """|F_z|^2 - |F_zbar|^2 at ``z`` (scalar or ndarray)."""
    fz, fzb = wirtinger(F, z)
    if np.ndim(fz) == 0:
        return abs(fz) ** 2 - abs(fzb) ** 2
    return np.abs(fz) ** 2 - np.abs(fzb) ** 2


def dilatation(F: PolyharmonicMap, z) -> DilatationPair:
    """Directional-derivative extrema at a single point."""
    fz, fzb = wirtinger(F, complex(z))
    m, mm = abs(fz), abs(fzb)
    return DilatationPair(abs(m - mm), m + mm)


def _lambda_grid(F: PolyharmonicMap, Z: np.ndarray):
    fz, fzb = wirtinger(F, Z)
    m = np.abs(fz)
    mm = np.abs(fzb)
    return np.abs(m - mm), m + mm


def quasiregularity_constant(F: PolyharmonicMap, r_max: float,
                             n_radii: int = 256, n_angles: int = 512,
                             refine_tol: float = 1e-10) -> float:
    """Supremum of lambda_big / lambda_small over |z| <= r_max.

    Polar grid scan (``n_radii`` x ``n_angles``) followed by golden-section
    refinement in radius and then angle around the best sample; the result is
    a lower bound for the true supremum at the refinement tolerance.  Raises
    :class:`DegenerateMap` as soon as lambda_small drops below
    ``1e-12 * (1 + max coefficient)`` at any probed point.
    """
    if not (0.0 < r_max <= 1.0):
        raise InvalidParams(f"r_max must lie in (0, 1], got {r_max}")
    tol_deg = 1e-12 * (1.0 + F.table.max_coefficient())
    radii = r_max * np.arange(1, n_radii + 1) / n_radii
    th = 2.0 * np.pi * np.arange(n_angles) / n_angles
    Z = radii[:, None] * np.exp(1j * th)[None, :]
    lam, big = _lambda_grid(F, Z)
    if lam.min() < tol_deg:
        i, j = np.unravel_index(int(np.argmin(lam)), lam.shape)
        raise DegenerateMap(f"lambda_small = {lam[i, j]:.3e} near z = {Z[i, j]:.6g}")
    ratio = big / lam
    i0, j0 = np.unravel_index(int(np.argmax(ratio)), ratio.shape)
    best = float(ratio[i0, j0])

    def ratio_at(r: float, theta: float) -> float:
        d = dilatation(F, r * complex(math.cos(theta), math.sin(theta)))
        if d.lambda_small < tol_deg:
            raise DegenerateMap(f"lambda_small = {d.lambda_small:.3e} at "
                                f"r = {r:.6g}, theta = {theta:.6g}")
        return d.lambda_big / d.lambda_small

    th0 = float(th[j0])
    r_lo = float(radii[i0 - 1]) if i0 > 0 else float(radii[0]) / n_radii
    r_hi = float(radii[i0 + 1]) if i0 + 1 < n_radii else r_max
    r_best, v_r = golden_max(lambda r: ratio_at(r, th0), r_lo, r_hi, refine_tol)
    dth = 2.0 * np.pi / n_angles
    _, v_th = golden_max(lambda s: ratio_at(r_best, s), th0 - dth, th0 + dth, refine_tol)
    return float(max(best, v_r, v_th))


def polyharmonic_residual(F: PolyharmonicMap, z, h: float, order: int | None = None):
    """Iterated 5-point discrete Laplacian of F at ``z``, applied ``order``
    times (default: the table depth).

    Exact polyharmonicity makes this O(h^2) as h -> 0; it is a diagnostic for
    the test-suite, not a construction-time validator.
    """
    times = F.table.p if order is None else int(order)

    def base(w):
        return evaluate(F, w)

    def laplacian(g):
        def out(w):
            return (g(w + h) + g(w - h) + g(w + 1j * h) + g(w - 1j * h)
                    - 4.0 * g(w)) / (h * h)
        return out

    g = base
    for _ in range(times):
        g = laplacian(g)
    return g(complex(z))


def conjugate_map(F: PolyharmonicMap) -> PolyharmonicMap:
    """The map with the a and b arrays swapped, which satisfies
    ``F'(z) = conj(F(z))`` for every z."""
    t = F.table
    table = CoefficientTable(t.p, t.J, t.b.copy(), t.a.copy())
    return PolyharmonicMap(table, label=f"conj({F.label})" if F.label else "conj",
                           meta=dict(F.meta))


def scale_map(F: PolyharmonicMap, c) -> PolyharmonicMap:
    """The map ``z -> c * F(z)``: scales a by c and b by conj(c) because b is
    stored under conjugation."""
    c = complex(c)
    t = F.table
    table = CoefficientTable(t.p, t.J, c * t.a, np.conj(c) * t.b)
    return PolyharmonicMap(table, label=F.label, meta=dict(F.meta))
