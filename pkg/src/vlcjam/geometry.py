"""Vector math for optical links: poses, link angles, mirror reflection."""

import math
from dataclasses import dataclass

import numpy as np

UNIT_TOL = 1e-9


def vec(x: float, y: float, z: float) -> np.ndarray:
    return np.array([x, y, z], dtype=float)


def unit(v) -> np.ndarray:
    """Normalize a 3-vector; raises on (near-)zero input."""
    v = np.asarray(v, dtype=float)
    n = float(np.linalg.norm(v))
    if n < 1e-15:
        raise ValueError("cannot normalize zero vector")
    return v / n


def rotate_about_z(v, angle: float) -> np.ndarray:
    """Rotate a vector about the room's vertical (z) axis."""
    v = np.asarray(v, dtype=float)
    c, s = math.cos(angle), math.sin(angle)
    return np.array([c * v[0] - s * v[1], s * v[0] + c * v[1], v[2]])


@dataclass(frozen=True, eq=False)
class Pose:
    """Position plus unit orientation normal of a geometric actor.

    Every emitter, photodiode and reflecting element is carried as a Pose;
    the normal must be unit length (checked to 1e-9).
    """

    position: np.ndarray
    normal: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "position", np.asarray(self.position, dtype=float))
        object.__setattr__(self, "normal", np.asarray(self.normal, dtype=float))
        if self.position.shape != (3,) or self.normal.shape != (3,):
            raise ValueError("Pose expects 3-vectors")
        if abs(float(np.linalg.norm(self.normal)) - 1.0) > UNIT_TOL:
            raise ValueError(f"pose normal is not unit length: {self.normal}")


@dataclass(frozen=True)
class LinkAngles:
    """Irradiance angle, incidence angle and distance of one optical link."""

    phi: float
    psi: float
    distance: float


def link_angles(tx: Pose, rx: Pose) -> LinkAngles:
    """Angles and distance of the tx -> rx link.

    phi is measured at the transmitter against its normal, psi at the
    receiver against the incoming ray. Both are principal arccos values in
    [0, pi]; field-of-view and backside cutoffs are the channel's job.
    """
    delta = rx.position - tx.position
    d = float(np.linalg.norm(delta))
    if d < 1e-12:
        raise ValueError("degenerate link: coincident positions")
    u = delta / d
    cos_phi = float(np.dot(tx.normal, u))
    cos_psi = float(np.dot(-rx.normal, u))
    phi = math.acos(min(1.0, max(-1.0, cos_phi)))
    psi = math.acos(min(1.0, max(-1.0, cos_psi)))
    return LinkAngles(phi=phi, psi=psi, distance=d)


def specular_reflection(incident_dir, normal) -> np.ndarray:
    """Mirror-reflect a unit incident direction about a unit surface normal."""
    i = np.asarray(incident_dir, dtype=float)
    n = np.asarray(normal, dtype=float)
    return i - 2.0 * float(np.dot(i, n)) * n
