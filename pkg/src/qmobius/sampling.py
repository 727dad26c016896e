"""Deterministic random inputs for the fuzz suites and the CLI selftest.

Everything takes an explicit numpy Generator, so a fixed seed reproduces
the exact same stream of matrices, points and maps.
"""

from __future__ import annotations

import numpy as np

from .crossratio import QuadricF3
from .flt import MobiusCanonical, halfspace_general, isotropy_at_infinity
from .mat2h import Mat2H, det_h, normalize
from .quat import Quaternion


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_unit_quaternion(rng) -> Quaternion:
    v = rng.normal(size=4)
    n = np.linalg.norm(v)
    while n < 1e-12:
        v = rng.normal(size=4)
        n = np.linalg.norm(v)
    return Quaternion(*(float(t) for t in v / n))


def random_quaternion(rng, scale: float = 1.0) -> Quaternion:
    """Random direction with modulus uniform in (0, scale]."""
    return random_unit_quaternion(rng) * float(rng.uniform(0.0, scale))


def random_imaginary_unit(rng) -> Quaternion:
    v = rng.normal(size=3)
    n = np.linalg.norm(v)
    while n < 1e-12:
        v = rng.normal(size=3)
        n = np.linalg.norm(v)
    v = v / n
    return Quaternion(0.0, float(v[0]), float(v[1]), float(v[2]))


def random_imaginary(rng, scale: float = 1.0) -> Quaternion:
    return random_imaginary_unit(rng) * float(rng.uniform(0.0, scale))


def random_ball_point(rng, rmax: float = 0.9) -> Quaternion:
    return random_unit_quaternion(rng) * float(rng.uniform(0.0, rmax))


def random_halfspace_point(rng, scale: float = 2.0) -> Quaternion:
    q = random_imaginary(rng, scale)
    return Quaternion(float(rng.uniform(0.05, scale)), q.x, q.y, q.z)


def random_matrix(rng, scale: float = 1.0) -> Mat2H:
    return Mat2H(random_quaternion(rng, scale), random_quaternion(rng, scale),
                 random_quaternion(rng, scale), random_quaternion(rng, scale))


def random_invertible_matrix(rng, scale: float = 1.0,
                             min_det_rel: float = 0.02) -> Mat2H:
    while True:
        A = random_matrix(rng, scale)
        if det_h(A) > min_det_rel * scale * scale:
            return A


def random_canonical(rng, rmax: float = 0.9) -> MobiusCanonical:
    return MobiusCanonical(random_unit_quaternion(rng),
                           random_unit_quaternion(rng),
                           random_ball_point(rng, rmax))


def random_sp11(rng) -> Mat2H:
    return normalize(random_canonical(rng).matrix_raw())


def random_slhplus(rng) -> Mat2H:
    """Random member of the half-space group, through its two
    parameterized families."""
    if rng.uniform() < 0.5:
        d = random_unit_quaternion(rng) * float(rng.uniform(0.3, 2.0))
        b = random_imaginary(rng, 1.5) * d
        return isotropy_at_infinity(b, d).matrix
    alpha = random_unit_quaternion(rng) * float(rng.uniform(0.3, 2.0))
    beta = random_imaginary(rng, 1.5) * alpha
    gamma = random_imaginary(rng, 1.5)
    return halfspace_general(alpha, beta, gamma).matrix


def random_separated_points(rng, n: int, scale: float = 2.0,
                            min_sep: float = 0.15,
                            min_norm: float = 0.0) -> list[Quaternion]:
    """n random points pairwise at least min_sep apart (and away from 0
    when min_norm is positive); keeps cross-ratio factors well
    conditioned."""
    pts: list[Quaternion] = []
    while len(pts) < n:
        q = random_quaternion(rng, scale)
        if abs(q) < min_norm:
            continue
        if all(abs(q - p) > min_sep for p in pts):
            pts.append(q)
    return pts


def random_circle(rng):
    """A random circle in H: center, radius, and an orthonormal frame of
    its plane; call the returned point function with an angle."""
    c = random_quaternion(rng, 2.0)
    u = random_unit_quaternion(rng)
    while True:
        v = rng.normal(size=4)
        v = v - np.dot(v, np.array(u)) * np.array(u)
        n = np.linalg.norm(v)
        if n > 1e-6:
            break
    vq = Quaternion(*(float(t) for t in v / n))
    r = float(rng.uniform(0.3, 2.0))

    def point(theta: float) -> Quaternion:
        return c + u * (r * np.cos(theta)) + vq * (r * np.sin(theta))

    return point


def random_sphere_quadric(rng):
    """A sphere quadric together with its center and radius."""
    c = random_quaternion(rng, 2.0)
    r = float(rng.uniform(0.2, 2.0))
    Q = QuadricF3(1.0, -c.conj(), c.norm_sq() - r * r)
    return Q, c, r


def random_plane_quadric(rng):
    """A 3-plane quadric 2 Re(beta q) + gamma = 0."""
    beta = random_quaternion(rng, 1.5)
    while abs(beta) < 0.2:
        beta = random_quaternion(rng, 1.5)
    gamma = float(rng.uniform(-2.0, 2.0))
    return QuadricF3(0.0, beta, gamma)


def random_point_on_sphere(rng, c: Quaternion, r: float) -> Quaternion:
    return c + random_unit_quaternion(rng) * r


def random_point_on_plane(rng, Q: QuadricF3) -> Quaternion:
    beta = Q.beta
    base = beta.conj() * (-Q.gamma / (2.0 * beta.norm_sq()))
    v = np.array(random_quaternion(rng, 2.0))
    nvec = np.array(beta.conj())
    nvec = nvec / np.linalg.norm(nvec)
    v = v - np.dot(v, nvec) * nvec
    return base + Quaternion(*(float(t) for t in v))
