"""2x2 matrices with quaternion entries.

The scalar field is noncommutative, so there is no ordinary determinant;
det_h below is the Dieudonne determinant, the nonnegative real

    det_h([[a, b], [c, d]]) = sqrt(|a|^2 |d|^2 + |c|^2 |b|^2 - 2 Re(c conj(a) b conj(d)))

which is multiplicative and vanishes exactly on the non-invertible
matrices.  For real or complex entries it reduces to |ad - bc|.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import NamedTuple

import numpy as np

from .errors import InternalNumericError, Singular
from .quat import ONE, ZERO, Quaternion, _tols, isclose


class Mat2H(NamedTuple):
    a: Quaternion
    b: Quaternion
    c: Quaternion
    d: Quaternion

    @classmethod
    def identity(cls) -> "Mat2H":
        return cls(ONE, ZERO, ZERO, ONE)

    def __matmul__(self, other: "Mat2H") -> "Mat2H":
        a1, b1, c1, d1 = self
        a2, b2, c2, d2 = other
        return Mat2H(a1 * a2 + b1 * c2, a1 * b2 + b1 * d2,
                     c1 * a2 + d1 * c2, c1 * b2 + d1 * d2)

    def transpose_conj(self) -> "Mat2H":
        """Conjugate transpose [[conj a, conj c], [conj b, conj d]]."""
        return Mat2H(self.a.conj(), self.c.conj(), self.b.conj(), self.d.conj())

    def scalar_mul(self, t: float) -> "Mat2H":
        return Mat2H(self.a * t, self.b * t, self.c * t, self.d * t)

    def __neg__(self) -> "Mat2H":
        return self.scalar_mul(-1.0)

    def entry_scale(self) -> float:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def close_to(self, other: "Mat2H", tol: float | None = None) -> bool:
        atol, rtol = _tols(tol)
        thr = atol + rtol * max(self.entry_scale(), other.entry_scale())
        return all(abs(p - q) <= thr for p, q in zip(self, other))

    def to_json(self) -> list[list[float]]:
        return [self.a.to_json(), self.b.to_json(), self.c.to_json(), self.d.to_json()]

    @classmethod
    def from_json(cls, data) -> "Mat2H":
        if not isinstance(data, (list, tuple)) or len(data) != 4:
            raise ValueError("matrix JSON must be a 4-element array of quaternions")
        return cls(*(Quaternion.from_json(entry) for entry in data))


def mat_mul(A: Mat2H, B: Mat2H) -> Mat2H:
    return A @ B


def det_h(A: Mat2H) -> float:
    """Dieudonne determinant; multiplicative and zero iff A is singular."""
    a, b, c, d = A
    t1 = a.norm_sq() * d.norm_sq()
    t2 = c.norm_sq() * b.norm_sq()
    rad = t1 + t2 - 2.0 * (c * a.conj() * b * d.conj()).w
    if rad < 0.0:
        # the radicand is a square in exact arithmetic; tiny negatives are
        # cancellation noise, anything larger is a genuine bug
        atol, rtol = _tols(None)
        if -rad <= atol + rtol * (t1 + t2):
            rad = 0.0
        else:
            raise InternalNumericError(
                f"determinant radicand {rad} negative beyond tolerance")
    return math.sqrt(rad)


_CONJ_SIGNS = np.array([1.0, -1.0, -1.0, -1.0])


def mul_rows(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Row-wise Hamilton product of (n, 4) component arrays."""
    w1, x1, y1, z1 = A.T
    w2, x2, y2, z2 = B.T
    return np.stack([
        w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
        w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
        w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
        w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
    ], axis=1)


def mat_mul_many(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Vectorized mat_mul over stacks shaped (n, 4, 4): the middle axis
    runs over the entries (a, b, c, d), the last over components."""
    a1, b1, c1, d1 = (A[:, k, :] for k in range(4))
    a2, b2, c2, d2 = (B[:, k, :] for k in range(4))
    return np.stack([
        mul_rows(a1, a2) + mul_rows(b1, c2),
        mul_rows(a1, b2) + mul_rows(b1, d2),
        mul_rows(c1, a2) + mul_rows(d1, c2),
        mul_rows(c1, b2) + mul_rows(d1, d2),
    ], axis=1)


def det_h_many(M: np.ndarray) -> np.ndarray:
    """Vectorized det_h over a stack shaped (n, 4, 4); same clamp on the
    radicand as the scalar version."""
    a, b, c, d = (M[:, k, :] for k in range(4))
    t1 = (a * a).sum(axis=1) * (d * d).sum(axis=1)
    t2 = (c * c).sum(axis=1) * (b * b).sum(axis=1)
    p = mul_rows(c, a * _CONJ_SIGNS)
    r = mul_rows(b, d * _CONJ_SIGNS)
    re = (p * r * _CONJ_SIGNS).sum(axis=1)
    rad = t1 + t2 - 2.0 * re
    neg = rad < 0.0
    if np.any(neg):
        atol, rtol = _tols(None)
        bound = atol + rtol * (t1 + t2)
        if np.any(-rad[neg] > bound[neg]):
            raise InternalNumericError(
                "determinant radicand negative beyond tolerance")
        rad = np.where(neg, 0.0, rad)
    return np.sqrt(rad)


# Cramer-type inverse formulas amplify rounding roughly with the square of
# the conditioning, hence the quadratic scale in the singularity gate.
SINGULAR_REL = 1e-6


def inverse_form_a(A: Mat2H) -> Mat2H:
    """Inverse via the pivot entry a (requires a != 0)."""
    a, b, c, d = A
    ai = a.inverse()
    s = (d - c * ai * b).inverse()
    return Mat2H(ai + ai * b * s * c * ai, -(ai * b * s),
                 -(s * c * ai), s)


def inverse_form_b(A: Mat2H) -> Mat2H:
    """Inverse via the pivot entry b (requires b != 0)."""
    a, b, c, d = A
    bi = b.inverse()
    s = (c - d * bi * a).inverse()
    return Mat2H(-(s * d * bi), s,
                 bi + bi * a * s * d * bi, -(bi * a * s))


def inverse(A: Mat2H) -> Mat2H:
    scale = A.entry_scale()
    if det_h(A) <= SINGULAR_REL * scale * scale:
        raise Singular(f"matrix with det_h {det_h(A)} is numerically singular")
    atol, _ = _tols(None)
    if abs(A.a) > atol * (1.0 + scale):
        return inverse_form_a(A)
    if abs(A.b) > atol * (1.0 + scale):
        return inverse_form_b(A)
    raise Singular("first row vanishes, so det_h = 0")  # unreachable past the gate


def normalize(A: Mat2H) -> Mat2H:
    """Scale A by a positive real so that det_h becomes 1."""
    dh = det_h(A)
    scale = A.entry_scale()
    if dh <= SINGULAR_REL * scale * scale:
        raise Singular("cannot normalize a numerically singular matrix")
    return A.scalar_mul(1.0 / math.sqrt(dh))


class GroupTag(Enum):
    GL2H = "GL2H"
    SL2H = "SL2H"
    SP11 = "Sp11"
    SL_HPLUS = "SLHplus"
    CENTER_GL = "CenterGL"
    CENTER_SL = "CenterSL"


H_FORM = Mat2H(ONE, ZERO, ZERO, -ONE)     # diag(1, -1)
K_FORM = Mat2H(ZERO, ONE, ONE, ZERO)      # antidiag(1, 1)

# matrix of the Cayley map q -> (1 + q)(1 - q)^-1 from the ball to the
# half-space; its inverse is half the transpose
CAYLEY = Mat2H(ONE, ONE, -ONE, ONE)
CAYLEY_INV = Mat2H(ONE, -ONE, ONE, ONE).scalar_mul(0.5)


def _form_close(M: Mat2H, target: Mat2H, thr: float) -> bool:
    return all(abs(p - q) <= thr for p, q in zip(M, target))


def classify(A: Mat2H, tol: float | None = None) -> set[GroupTag]:
    """Group memberships of A, as a set of tags.

    Membership in the two matrix groups preserving an indefinite form is
    decided entrywise on conj-transpose(A) * form * A.
    """
    atol, rtol = _tols(tol)
    tags: set[GroupTag] = set()
    scale = A.entry_scale()
    dh = det_h(A)

    if dh > atol:
        tags.add(GroupTag.GL2H)
    if isclose(dh, 1.0, tol):
        tags.add(GroupTag.SL2H)

    tc = A.transpose_conj()
    thr = atol + rtol * (1.0 + scale * scale)
    if _form_close(tc @ H_FORM @ A, H_FORM, thr):
        tags.add(GroupTag.SP11)
    if _form_close(tc @ K_FORM @ A, K_FORM, thr):
        tags.add(GroupTag.SL_HPLUS)

    thr1 = atol + rtol * (1.0 + scale)
    if (abs(A.b) <= thr1 and abs(A.c) <= thr1 and abs(A.a - A.d) <= thr1
            and A.a.im_norm() <= thr1 and abs(A.a) > atol):
        tags.add(GroupTag.CENTER_GL)
        if A.close_to(Mat2H.identity(), tol) or A.close_to(-Mat2H.identity(), tol):
            tags.add(GroupTag.CENTER_SL)
    return tags


def cayley_conjugate(A: Mat2H) -> Mat2H:
    """C^-1 A C: carries half-space matrices to ball matrices."""
    return CAYLEY_INV @ A @ CAYLEY


def cayley_conjugate_inv(M: Mat2H) -> Mat2H:
    """C M C^-1: inverse of cayley_conjugate."""
    return CAYLEY @ M @ CAYLEY_INV
