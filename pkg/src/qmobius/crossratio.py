"""Quaternionic cross-ratio, concyclicity, and the preserved quadrics.

The cross-ratio of four quaternions is

    CR(q1, q2, q3, q4) = (q1 - q3)(q1 - q4)^-1 (q2 - q4)(q2 - q3)^-1

with the factor order fixed; it is not invariant under Moebius maps but
transforms by conjugation, so its real part and imaginary norm are.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CoincidentPoints, DegenerateResult, NotConcyclic
from .flt import (INFINITY, Dilation, ExtQuaternion, Generator, Inversion,
                  Rotation, Translation, generator_inverse)
from .quat import ONE, Quaternion, _tols


def _coincident(p: Quaternion, q: Quaternion, atol: float) -> bool:
    return abs(p - q) <= atol * (1.0 + max(abs(p), abs(q)))


def cross_ratio(q1: ExtQuaternion, q2: ExtQuaternion, q3: ExtQuaternion,
                q4: ExtQuaternion, tol: float | None = None) -> Quaternion:
    """Cross-ratio on H u {inf}; factors containing inf are replaced by 1.

    The points must be pairwise distinct with at most one at infinity.
    The one permitted coincidence is q1 = q2 (exact), which returns 1 so
    that distance formulas degrade gracefully.
    """
    atol, _ = _tols(tol)
    pts = (q1, q2, q3, q4)
    if sum(1 for p in pts if p is INFINITY) > 1:
        raise CoincidentPoints("at most one point may be infinite")
    if q1 is not INFINITY and q2 is not INFINITY and tuple(q1) == tuple(q2):
        return ONE
    for i, j in ((0, 2), (0, 3), (1, 2), (1, 3), (2, 3)):
        p, q = pts[i], pts[j]
        if p is INFINITY or q is INFINITY:
            continue
        if _coincident(p, q, atol):
            raise CoincidentPoints(f"q{i + 1} and q{j + 1} coincide")
    result = ONE
    if q1 is not INFINITY and q3 is not INFINITY:
        result = result * (q1 - q3)
    if q1 is not INFINITY and q4 is not INFINITY:
        result = result * (q1 - q4).inverse()
    if q2 is not INFINITY and q4 is not INFINITY:
        result = result * (q2 - q4)
    if q2 is not INFINITY and q3 is not INFINITY:
        result = result * (q2 - q3).inverse()
    return result


def is_concyclic(q1: ExtQuaternion, q2: ExtQuaternion, q3: ExtQuaternion,
                 q4: ExtQuaternion, tol: float | None = None) -> bool:
    """Whether the four (distinct) points lie on one circle or line.

    This holds exactly when the cross-ratio is real.
    """
    atol, _ = _tols(tol)
    if q1 is not INFINITY and q2 is not INFINITY and _coincident(q1, q2, atol):
        raise CoincidentPoints("q1 and q2 coincide")
    cr = cross_ratio(q1, q2, q3, q4, tol)
    return cr.im_norm() <= atol * (1.0 + abs(cr))


def separates(q1: ExtQuaternion, q2: ExtQuaternion, q3: ExtQuaternion,
              q4: ExtQuaternion, tol: float | None = None) -> bool:
    """Whether the pairs (q1, q2) and (q3, q4) separate each other on
    their common circle; equivalent to a negative cross-ratio."""
    atol, _ = _tols(tol)
    if q1 is not INFINITY and q2 is not INFINITY and _coincident(q1, q2, atol):
        raise CoincidentPoints("q1 and q2 coincide")
    cr = cross_ratio(q1, q2, q3, q4, tol)
    if cr.im_norm() > atol * (1.0 + abs(cr)):
        raise NotConcyclic("the four points do not lie on a common circle")
    return cr.w < 0.0


@dataclass(frozen=True)
class QuadricF3:
    """The zero set of alpha |q|^2 + 2 Re(beta q) + gamma with alpha, gamma
    real: a sphere or 3-plane of H, the family preserved by Moebius maps.

    Coefficients are stored unnormalized; proportional triples describe
    the same quadric.
    """

    alpha: float
    beta: Quaternion
    gamma: float

    def __post_init__(self):
        if self.alpha == 0.0 and self.gamma == 0.0 and self.beta.norm_sq() == 0.0:
            raise ValueError("quadric coefficients must not all vanish")

    def evaluate(self, q: Quaternion) -> float:
        return self.alpha * q.norm_sq() + 2.0 * (self.beta * q).w + self.gamma

    def coefficient_scale(self) -> float:
        return max(abs(self.alpha), abs(self.beta), abs(self.gamma))

    def proportional_to(self, other: "QuadricF3", tol: float | None = None) -> bool:
        atol, rtol = _tols(tol)
        u = (self.alpha, *self.beta, self.gamma)
        v = (other.alpha, *other.beta, other.gamma)
        su = max(abs(t) for t in u)
        sv = max(abs(t) for t in v)
        thr = atol + rtol * su * sv
        return all(abs(u[i] * v[j] - u[j] * v[i]) <= thr
                   for i in range(6) for j in range(i + 1, 6))

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta.to_json(),
                "gamma": self.gamma}

    @classmethod
    def from_json(cls, data) -> "QuadricF3":
        return cls(float(data["alpha"]), Quaternion.from_json(data["beta"]),
                   float(data["gamma"]))


def on_quadric(q: Quaternion, Q: QuadricF3, tol: float | None = None) -> bool:
    atol, rtol = _tols(tol)
    scale = abs(Q.alpha) * q.norm_sq() + 2.0 * abs(Q.beta) * abs(q) + abs(Q.gamma)
    return abs(Q.evaluate(q)) <= atol + rtol * (1.0 + scale)


def _substitute(gen: Generator, Q: QuadricF3) -> QuadricF3:
    """Coefficients obtained by substituting gen(q) for q; the zero set of
    the result is the preimage of Q under gen."""
    if isinstance(gen, Translation):
        b = gen.b
        return QuadricF3(Q.alpha,
                         Q.beta + b.conj() * Q.alpha,
                         Q.alpha * b.norm_sq() + 2.0 * (Q.beta * b).w + Q.gamma)
    if isinstance(gen, Rotation):
        return QuadricF3(Q.alpha, Q.beta * gen.a, Q.gamma)
    if isinstance(gen, Dilation):
        r = gen.r
        return QuadricF3(r * r * Q.alpha, Q.beta * r, Q.gamma)
    return QuadricF3(Q.gamma, Q.beta.conj(), Q.alpha)


def transform_quadric(g: Generator, Q: QuadricF3,
                      tol: float | None = None) -> QuadricF3:
    """The image quadric g(Q): substituting g^-1(q) carries the zero set
    of Q onto the zero set of the result."""
    try:
        out = _substitute(generator_inverse(g), Q)
    except ValueError as exc:
        raise DegenerateResult(str(exc)) from exc
    atol, rtol = _tols(tol)
    thr = atol + rtol * Q.coefficient_scale()
    if out.coefficient_scale() <= thr:
        raise DegenerateResult("transformed quadric has no equation")
    return out
