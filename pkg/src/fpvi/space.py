"""Finite-dimensional l_q spaces: norms, duality maps, smoothness constants.

The ambient space is R^dim equipped with the l_q norm for some exponent
q in (1, inf).  Every such space is uniformly smooth; the power-type
smoothness inequality

    ||x + y||^s <= ||x||^s + s*<y, j_s(x)> + d*||y||^s

holds with exponent s = q and a computable constant d when 1 < q < 2,
and with s = 2 and d = q - 1 when q >= 2.  ``smoothness_constants``
returns the pair (s, d); ``duality_map`` evaluates the single-valued
duality map j_s of gauge s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, NumericalError, ParameterError

#: residual tolerance for the root solve behind the small-exponent constant
ROOT_TOL = 1e-12


def smoothness_root(q: float) -> float:
    """Root b in (0,1) of (q-2)*b^(q-1) + (q-1)*b^(q-2) - 1 = 0.

    The equation's left side is strictly decreasing on (0, 1) for
    1 < q < 2, falling from +inf to 2q - 4 < 0, so bracketed bisection
    on (eps, 1-eps) always succeeds.

    :param q: norm exponent, required to lie strictly in (1, 2).
    :return: the unique root, with defining-equation residual <= 1e-12.
    """
    if not 1.0 < q < 2.0:
        raise ParameterError(f"exponent must lie in (1, 2), got {q}")

    def resid(b: float) -> float:
        return (q - 2.0) * b ** (q - 1.0) + (q - 1.0) * b ** (q - 2.0) - 1.0

    lo, hi = 1e-12, 1.0 - 1e-12
    flo, fhi = resid(lo), resid(hi)
    if not (flo > 0.0 > fhi):
        raise NumericalError(
            f"no sign change in root bracket for q={q}: f({lo})={flo}, f({hi})={fhi}"
        )
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if resid(mid) > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-16:
            break
    root = 0.5 * (lo + hi)
    if abs(resid(root)) > ROOT_TOL:
        raise NumericalError(
            f"bisection stalled for q={q}: root={root}, residual={resid(root)}"
        )
    return root


def smoothness_constants(q: float) -> tuple[float, float]:
    """Smoothness exponent and constant (s, d) of the l_q norm.

    For 1 < q < 2 the exponent is q itself and
    d = (1 + b^(q-1)) / (1 + b)^(q-1) with b = smoothness_root(q).
    For q = 2 the pair is (2, 1) exactly; for q > 2 it is (2, q - 1)
    exactly, via the 2-uniform-smoothness estimate.
    """
    if q <= 1.0:
        raise ParameterError(f"exponent must exceed 1, got {q}")
    if q == 2.0:
        return 2.0, 1.0
    if q > 2.0:
        return 2.0, q - 1.0
    b = smoothness_root(q)
    d = (1.0 + b ** (q - 1.0)) / (1.0 + b) ** (q - 1.0)
    return q, d


@dataclass(frozen=True)
class SpaceDescriptor:
    """Ambient l_q space: dimension, exponent, and derived smoothness data.

    ``smooth_exponent`` and ``smooth_constant`` are always the pair
    returned by ``smoothness_constants(q)``; use ``make_space`` instead
    of constructing directly.
    """

    dim: int
    q: float
    smooth_exponent: float
    smooth_constant: float

    @property
    def dual_exponent(self) -> float:
        return self.q / (self.q - 1.0)


def make_space(dim: int, q: float) -> SpaceDescriptor:
    """Build a space descriptor, deriving the smoothness data from q."""
    if dim < 1:
        raise ParameterError(f"dimension must be >= 1, got {dim}")
    if q <= 1.0:
        raise ParameterError(f"exponent must exceed 1, got {q}")
    s, d = smoothness_constants(q)
    return SpaceDescriptor(dim=int(dim), q=float(q), smooth_exponent=s, smooth_constant=d)


def as_vector(space: SpaceDescriptor, x) -> np.ndarray:
    """Validate and return ``x`` as a float vector conforming to ``space``."""
    v = np.asarray(x, dtype=float)
    if v.shape != (space.dim,):
        raise DimensionError(f"expected shape ({space.dim},), got {v.shape}")
    if not np.all(np.isfinite(v)):
        raise DimensionError("vector has non-finite entries")
    return v


def lq_norm(space: SpaceDescriptor, x) -> float:
    """l_q norm (sum |x_i|^q)^(1/q) in the ambient space."""
    v = as_vector(space, x)
    if space.q == 2.0:
        return float(math.sqrt(float(v @ v)))
    return float(np.linalg.norm(v, ord=space.q))


def duality_map(space: SpaceDescriptor, x, gauge: float) -> np.ndarray:
    """Single-valued duality map of gauge ``s`` on the l_q space.

    Returns the functional f with components

        f_i = ||x||^(s-q) * sign(x_i) * |x_i|^(q-1)

    which satisfies <x, f> = ||x||^s and ||f||_{q'} = ||x||^(s-1) for the
    dual exponent q' = q/(q-1).  The zero vector maps to zero by
    convention.
    """
    if gauge <= 1.0:
        raise ParameterError(f"gauge must exceed 1, got {gauge}")
    v = as_vector(space, x)
    nrm = lq_norm(space, v)
    if nrm == 0.0:
        return np.zeros(space.dim)
    if space.q == 2.0 and gauge == 2.0:
        return v.copy()
    f = np.sign(v) * np.abs(v) ** (space.q - 1.0)
    return nrm ** (gauge - space.q) * f


def pairing(f, x) -> float:
    """Duality pairing <x, f>, the coordinate dot product."""
    return float(np.dot(np.asarray(f, dtype=float), np.asarray(x, dtype=float)))


def dual_norm(space: SpaceDescriptor, f) -> float:
    """Norm of a functional in the dual l_{q/(q-1)} space."""
    v = as_vector(space, f)
    return float(np.linalg.norm(v, ord=space.dual_exponent))
