"""Line-of-sight VLC channel DC gain, single-reflection micro-surface gain,
and the square-law optical SNR of an intensity-modulated direct-detection link.
"""

import math
from dataclasses import dataclass

from .geometry import Pose, link_angles

DERIVED_TOL = 1e-9


def lambertian_order(half_angle: float) -> float:
    """Lambertian emission order from the half-irradiance angle (radians).

    m = -ln(2) / ln(cos(half_angle)); half_angle must lie in (0, pi/2).
    """
    if not 0.0 < half_angle < math.pi / 2.0:
        raise ValueError(f"half_angle must be in (0, pi/2), got {half_angle}")
    return -math.log(2.0) / math.log(math.cos(half_angle))


@dataclass(frozen=True)
class EmitterParams:
    """LED emitter: optical transmit power and Lambertian lobe shape."""

    power: float                      # W
    half_angle: float                 # rad, half-irradiance angle
    lambert_order: float = None       # derived when omitted

    def __post_init__(self):
        if self.power <= 0.0:
            raise ValueError("emitter power must be > 0")
        derived = lambertian_order(self.half_angle)
        if self.lambert_order is None:
            object.__setattr__(self, "lambert_order", derived)
        elif abs(self.lambert_order - derived) > DERIVED_TOL:
            raise ValueError(
                f"lambert_order {self.lambert_order} inconsistent with "
                f"half_angle (expected {derived})"
            )


@dataclass(frozen=True)
class ReceiverParams:
    """Photodiode: collection area, responsivity, field of view, concentrator."""

    area: float                       # m^2
    responsivity: float               # A/W
    fov: float                        # rad, field-of-view half-angle
    refractive_index: float = 1.5
    concentrator_gain: float = None   # derived when omitted

    def __post_init__(self):
        if self.area <= 0.0 or self.responsivity <= 0.0:
            raise ValueError("receiver area and responsivity must be > 0")
        # fov up to (but excluding) pi keeps the concentrator gain finite;
        # wide-FOV values like 120 degrees are legitimate here.
        if not 0.0 < self.fov < math.pi:
            raise ValueError(f"fov must be in (0, pi), got {self.fov}")
        derived = self.refractive_index ** 2 / math.sin(self.fov) ** 2
        if self.concentrator_gain is None:
            object.__setattr__(self, "concentrator_gain", derived)
        elif abs(self.concentrator_gain - derived) > DERIVED_TOL:
            raise ValueError(
                f"concentrator_gain {self.concentrator_gain} inconsistent "
                f"with fov/refractive_index (expected {derived})"
            )


@dataclass(frozen=True)
class SurfaceElementParams:
    """Reflecting micro-surface: reflection coefficient and emission area."""

    reflectivity: float               # dimensionless, in [0, 1]
    area: float                       # m^2

    def __post_init__(self):
        if not 0.0 <= self.reflectivity <= 1.0:
            raise ValueError("reflectivity must be in [0, 1]")
        if self.area <= 0.0:
            raise ValueError("element area must be > 0")


def los_gain(tx: Pose, em: EmitterParams, rx: Pose, rc: ReceiverParams) -> float:
    """DC gain of the direct LED -> photodiode path.

    Zero outside the receiver field of view and for backside geometries
    (any negative cosine); optical power cannot be negative.
    """
    la = link_angles(tx, rx)
    cos_phi = math.cos(la.phi)
    cos_psi = math.cos(la.psi)
    if la.psi > rc.fov or cos_phi < 0.0 or cos_psi < 0.0:
        return 0.0
    m = em.lambert_order
    return (
        rc.area * (m + 1.0) * rc.responsivity / (2.0 * math.pi * la.distance ** 2)
        * rc.concentrator_gain * cos_phi ** m * cos_psi
    )


def reflected_element_gain(
    tx: Pose,
    em: EmitterParams,
    elem: Pose,
    se: SurfaceElementParams,
    rx: Pose,
    rc: ReceiverParams,
) -> float:
    """DC gain of one bounce off a micro-surface element.

    Two-hop path tx -> element -> rx; the element contributes its incidence
    and departure cosines and its reflectivity-weighted area. Zero outside
    the receiver FOV or whenever any of the four cosines goes negative.
    """
    first = link_angles(tx, elem)
    second = link_angles(elem, rx)
    cos_phi = math.cos(first.phi)      # at the emitter
    cos_alpha = math.cos(first.psi)    # arrival at the element
    cos_beta = math.cos(second.phi)    # departure from the element
    cos_psi = math.cos(second.psi)     # arrival at the receiver
    if second.psi > rc.fov:
        return 0.0
    if min(cos_phi, cos_alpha, cos_beta, cos_psi) < 0.0:
        return 0.0
    m = em.lambert_order
    return (
        rc.area * (m + 1.0) * rc.responsivity
        / (2.0 * math.pi ** 2 * first.distance ** 2 * second.distance ** 2)
        * rc.concentrator_gain * se.reflectivity * se.area
        * cos_phi ** m * cos_alpha * cos_beta * cos_psi
    )


def optical_snr(h: float, power: float, noise_std: float) -> float:
    """Electrical SNR of an IM/DD link: square law in the received optical power."""
    if noise_std <= 0.0:
        raise ValueError("noise_std must be > 0")
    return (h * power) ** 2 / noise_std ** 2
