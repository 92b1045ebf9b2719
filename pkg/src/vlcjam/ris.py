"""RIS-steered jamming channel: per-element mirror steering composed with the
micro-surface reflection gain and the jammer's near-field attenuation.

Each element reflects the jammer's ray like a mirror whose normal is the base
wall normal rotated about the vertical axis by that element's yaw angle. The
steering lobe max(0, cos(miss))^q bridges a perfect mirror (q -> inf) and a
plain Lambertian scatterer (q -> 0+); the yaw-independent part of each term is
the ordinary one-bounce channel gain.
"""

import math
from dataclasses import dataclass

import numpy as np

from .channel import EmitterParams, ReceiverParams, SurfaceElementParams, reflected_element_gain
from .geometry import Pose, rotate_about_z, specular_reflection, unit

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, eq=False)
class RisArray:
    """Ordered reflecting elements with one yaw angle per element.

    elements: element poses on the mounting wall (base normals, yaw not applied)
    element_params: micro-surface reflectivity/area shared by all elements
    yaw: steering angles in [0, 2*pi], one per element
    steering_exponent: sharpness q of the specular steering lobe
    """

    elements: tuple
    element_params: SurfaceElementParams
    yaw: np.ndarray
    steering_exponent: float = 10.0

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "yaw", np.asarray(self.yaw, dtype=float))
        k = len(self.elements)
        if k < 1:
            raise ValueError("RIS needs at least one element")
        if self.yaw.shape != (k,):
            raise ValueError(f"yaw must have one angle per element, got {self.yaw.shape}")
        if np.any(self.yaw < 0.0) or np.any(self.yaw > TWO_PI):
            raise ValueError("yaw angles must lie in [0, 2*pi]")
        if self.steering_exponent <= 0.0:
            raise ValueError("steering_exponent must be > 0")
        positions = np.array([e.position for e in self.elements])
        if k > 1:
            diff = positions[:, None, :] - positions[None, :, :]
            dist = np.linalg.norm(diff, axis=-1)
            if np.min(dist[~np.eye(k, dtype=bool)]) < 1e-12:
                raise ValueError("RIS element positions must be distinct")

    @property
    def size(self) -> int:
        return len(self.elements)

    def with_yaw(self, yaw) -> "RisArray":
        return RisArray(self.elements, self.element_params, yaw, self.steering_exponent)


@dataclass(frozen=True, eq=False)
class JammerNode:
    """Jamming LED in front of the RIS with its per-element near-field gains."""

    pose: Pose
    power: float                     # W
    near_field_gain: np.ndarray      # one entry per RIS element, in (0, 1]

    def __post_init__(self):
        object.__setattr__(self, "near_field_gain", np.asarray(self.near_field_gain, dtype=float))
        if self.power < 0.0:
            raise ValueError("jammer power must be >= 0")
        if np.any(self.near_field_gain <= 0.0) or np.any(self.near_field_gain > 1.0):
            raise ValueError("near-field gains must lie in (0, 1]")


def jammer_to_ris_gain(jammer: Pose, elem: Pose, d_ref: float) -> float:
    """Deterministic near-field attenuation of the jammer -> element hop.

    Inverse-square beyond the reference distance, clamped to unit gain inside
    it (the far-field channel formula does not apply that close).
    """
    if d_ref <= 0.0:
        raise ValueError("d_ref must be > 0")
    d = float(np.linalg.norm(elem.position - jammer.position))
    if d < 1e-12:
        raise ValueError("degenerate link: jammer coincides with RIS element")
    return min(1.0, (d_ref / d) ** 2)


def near_field_gains(jammer_pose: Pose, ris: RisArray, d_ref: float) -> np.ndarray:
    return np.array([jammer_to_ris_gain(jammer_pose, e, d_ref) for e in ris.elements])


def steering_alignment(elem: Pose, yaw: float, jammer_pos, target_pos, q: float) -> float:
    """Steering lobe of one element: max(0, cos(miss angle))^q.

    The miss angle is between the element's specular ray (for the jammer's
    incident direction, with the base normal rotated by yaw about the
    vertical axis) and the direction from the element to the target.
    """
    if q <= 0.0:
        raise ValueError("steering exponent must be > 0")
    n = rotate_about_z(elem.normal, yaw)
    incident = unit(np.asarray(elem.position) - np.asarray(jammer_pos))
    reflected = specular_reflection(incident, n)
    to_target = unit(np.asarray(target_pos) - np.asarray(elem.position))
    c = float(np.dot(reflected, to_target))
    return max(0.0, c) ** q


def jamming_channel(
    ris: RisArray,
    jammer: JammerNode,
    em: EmitterParams,
    target: Pose,
    rc: ReceiverParams,
) -> float:
    """Composite jamming channel gain g(yaw) from the jammer via the RIS.

    Sum over elements of near-field gain x one-bounce channel gain x steering
    alignment. Intensity terms are nonnegative, so g >= 0; the jammer's
    transmit power never enters (it belongs to the SINR, not the channel).
    """
    if len(jammer.near_field_gain) != ris.size:
        raise ValueError("near_field_gain length does not match RIS size")
    total = 0.0
    for k, elem in enumerate(ris.elements):
        base = reflected_element_gain(jammer.pose, em, elem, ris.element_params, target, rc)
        if base == 0.0:
            continue
        align = steering_alignment(
            elem, float(ris.yaw[k]), jammer.pose.position, target.position,
            ris.steering_exponent,
        )
        total += float(jammer.near_field_gain[k]) * base * align
    return total


class JammingChannelOperator:
    """Precomputed jamming-channel evaluator for a fixed set of targets.

    Splits each element/target term into a yaw-independent base gain and the
    steering lobe, so swarms of yaw vectors evaluate as a handful of numpy
    contractions instead of per-element Python loops. Matches
    jamming_channel() to floating-point accuracy (covered by tests).
    """

    def __init__(self, ris: RisArray, jammer: JammerNode, em: EmitterParams,
                 targets, rc: ReceiverParams):
        if len(jammer.near_field_gain) != ris.size:
            raise ValueError("near_field_gain length does not match RIS size")
        targets = list(targets)
        k, a = ris.size, len(targets)
        if a == 0:
            raise ValueError("need at least one target")
        self.q = ris.steering_exponent
        self.base_normals = np.array([e.normal for e in ris.elements])          # (K,3)
        positions = np.array([e.position for e in ris.elements])                # (K,3)
        self.incident = np.array([
            unit(e.position - jammer.pose.position) for e in ris.elements
        ])                                                                       # (K,3)
        tpos = np.array([t.position for t in targets])                           # (A,3)
        delta = tpos[None, :, :] - positions[:, None, :]
        self.to_target = delta / np.linalg.norm(delta, axis=-1, keepdims=True)   # (K,A,3)
        base = np.empty((k, a))
        for ki, elem in enumerate(ris.elements):
            for ai, t in enumerate(targets):
                base[ki, ai] = reflected_element_gain(
                    jammer.pose, em, elem, ris.element_params, t, rc)
        self.weighted_base = jammer.near_field_gain[:, None] * base              # (K,A)

    def gains(self, yaw) -> np.ndarray:
        """Composite gain per target; yaw shaped (K,) -> (A,), or (P, K) -> (P, A)."""
        yaw = np.asarray(yaw, dtype=float)
        squeeze = yaw.ndim == 1
        if squeeze:
            yaw = yaw[None, :]
        c, s = np.cos(yaw), np.sin(yaw)                                          # (P,K)
        n0 = self.base_normals
        normals = np.stack([
            c * n0[:, 0] - s * n0[:, 1],
            s * n0[:, 0] + c * n0[:, 1],
            np.broadcast_to(n0[:, 2], yaw.shape),
        ], axis=-1)                                                              # (P,K,3)
        i_dot_n = np.einsum("kc,pkc->pk", self.incident, normals)
        reflected = self.incident[None, :, :] - 2.0 * i_dot_n[..., None] * normals
        cos_miss = np.einsum("pkc,kac->pka", reflected, self.to_target)
        align = np.clip(cos_miss, 0.0, None) ** self.q
        g = np.einsum("pka,ka->pa", align, self.weighted_base)
        return g[0] if squeeze else g
