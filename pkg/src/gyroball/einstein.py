"""Einstein addition and the primitive metric operations of the s-ball.

Points are plain 1-D numpy arrays of length n >= 2 with Euclidean norm
strictly below s.  All angles are radians in [0, pi].
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import BoundaryViolation, DegenerateRay, DimensionMismatch


@dataclass(frozen=True)
class ModelParams:
    """Ball radius s plus the numeric tolerance policy.

    eps_boundary guards the open-ball constraint (gamma blows up at the
    rim); tol_rel is the relative tolerance used by identity checks.
    """

    s: float = 1.0
    eps_boundary: float = 1e-12
    tol_rel: float = 1e-10

    def __post_init__(self):
        if not self.s > 0:
            raise ValueError("s must be positive")
        if not 0 < self.eps_boundary < 1e-6:
            raise ValueError("eps_boundary must lie in (0, 1e-6)")
        if not self.tol_rel > 0:
            raise ValueError("tol_rel must be positive")


DEFAULT_PARAMS = ModelParams()


def as_point(v, p=DEFAULT_PARAMS):
    """Coerce to a float64 vector and enforce the guarded ball bound."""
    v = np.asarray(v, dtype=np.float64)
    if v.ndim != 1 or v.shape[0] < 2:
        raise DimensionMismatch("a point must be a 1-D vector with n >= 2")
    if np.linalg.norm(v) >= p.s * (1.0 - p.eps_boundary):
        raise BoundaryViolation(
            "point norm %g reaches the guarded boundary of the s=%g ball"
            % (np.linalg.norm(v), p.s)
        )
    return v


def _pair(u, v, p):
    u = as_point(u, p)
    v = as_point(v, p)
    if u.shape != v.shape:
        raise DimensionMismatch("operands have dimensions %d and %d" % (u.shape[0], v.shape[0]))
    return u, v


def gamma_factor(v, p=DEFAULT_PARAMS):
    """Lorentz gamma factor 1/sqrt(1 - ||v||^2/s^2)."""
    v = as_point(v, p)
    return 1.0 / np.sqrt(1.0 - np.dot(v, v) / (p.s * p.s))


def einstein_add(u, v, p=DEFAULT_PARAMS):
    """Einstein addition u (+) v in the s-ball.

    Noncommutative and nonassociative; the identity is the origin and
    the inverse of v is -v.
    """
    u, v = _pair(u, v, p)
    s2 = p.s * p.s
    uv = np.dot(u, v) / s2
    gu = 1.0 / np.sqrt(1.0 - np.dot(u, u) / s2)
    # u + v/gamma_u + (gamma_u/(1+gamma_u)) (u.v/s^2) u, all over 1 + u.v/s^2
    return ((1.0 + (gu / (1.0 + gu)) * uv) * u + v / gu) / (1.0 + uv)


def scalar_mul(r, v, p=DEFAULT_PARAMS):
    """Scalar gyromultiplication r (x) v via the rapidity formula.

    Defined as s*tanh(r*atanh(||v||/s)) * v/||v||, the unique choice under
    which doubling equals v (+) v and the half point is the gyromidpoint
    offset.
    """
    v = as_point(v, p)
    n = np.linalg.norm(v)
    if n == 0.0:
        return v.copy()
    return p.s * np.tanh(r * np.arctanh(n / p.s)) * (v / n)


def gyrodistance(A, B, p=DEFAULT_PARAMS):
    """Gyrodistance ||(-A) (+) B|| and its gamma factor, as a pair."""
    A, B = _pair(A, B, p)
    w = einstein_add(-A, B, p)
    n2 = np.dot(w, w) / (p.s * p.s)
    g = 1.0 / np.sqrt(1.0 - n2)
    return float(np.sqrt(n2) * p.s), float(g)


def gyromidpoint(A, B, p=DEFAULT_PARAMS):
    """Point equidistant from A and B on the gyrosegment AB."""
    A, B = _pair(A, B, p)
    return einstein_add(A, scalar_mul(0.5, einstein_add(-A, B, p), p), p)


def gyroangle(vertex, B, C, p=DEFAULT_PARAMS):
    """Gyroangle at `vertex` between the rays toward B and C.

    arccos of the unit inner product of (-vertex)(+)B and (-vertex)(+)C;
    at the origin this reduces to the Euclidean angle.
    """
    vertex = as_point(vertex, p)
    B = as_point(B, p)
    C = as_point(C, p)
    if np.array_equal(B, vertex) or np.array_equal(C, vertex):
        raise DegenerateRay("angle leg endpoint coincides with the vertex")
    u = einstein_add(-vertex, B, p)
    w = einstein_add(-vertex, C, p)
    nu = np.linalg.norm(u)
    nw = np.linalg.norm(w)
    if nu == 0.0 or nw == 0.0:
        raise DegenerateRay("angle leg endpoint coincides with the vertex")
    c = np.dot(u, w) / (nu * nw)
    return float(np.arccos(np.clip(c, -1.0, 1.0)))


def _batch(V, p):
    V = np.asarray(V, dtype=np.float64)
    if V.ndim != 2 or V.shape[1] < 2:
        raise DimensionMismatch("expected an (N, n) array with n >= 2")
    worst = np.max(np.einsum("ij,ij->i", V, V)) if V.shape[0] else 0.0
    if worst >= (p.s * (1.0 - p.eps_boundary)) ** 2:
        raise BoundaryViolation("a batch row reaches the guarded boundary")
    return V


def gamma_factor_batch(V, p=DEFAULT_PARAMS):
    """Row-wise gamma factors of an (N, n) array."""
    return _kernels.gamma_batch(_batch(V, p), p.s)


def einstein_add_batch(U, V, p=DEFAULT_PARAMS):
    """Row-wise Einstein addition of two (N, n) arrays."""
    U = _batch(U, p)
    V = _batch(V, p)
    if U.shape != V.shape:
        raise DimensionMismatch("batch shapes differ: %r vs %r" % (U.shape, V.shape))
    return _kernels.add_batch(U, V, p.s)


def active_backend():
    """Name of the batch-kernel backend in use: 'numba' or 'numpy'."""
    return _kernels.BACKEND
