"""Jamming-receiver primitives: selective jam mask, jamming power budget,
self-interference-free SNR at the legitimate receiver, message rebuild.

The legitimate receiver jams a secret subset of the transmitted bits while
receiving, then restores those positions from its own record. Everything here
is deterministic given an explicit seed; there is no hidden RNG state.
"""

from dataclasses import dataclass

import numpy as np

from .channel import optical_snr


@dataclass(frozen=True)
class JamMask:
    """Secret selection of jammed bit positions within a message."""

    total_bits: int
    jammed_indices: tuple

    def __post_init__(self):
        idx = tuple(sorted(int(i) for i in self.jammed_indices))
        object.__setattr__(self, "jammed_indices", idx)
        if self.total_bits < 2:
            raise ValueError("total_bits must be >= 2")
        if len(set(idx)) != len(idx):
            raise ValueError("jammed indices must be unique")
        if len(idx) >= self.total_bits:
            raise ValueError("must jam strictly fewer bits than the message holds")
        if idx and (idx[0] < 0 or idx[-1] >= self.total_bits):
            raise ValueError("jammed index out of range")

    @property
    def jammed_count(self) -> int:
        return len(self.jammed_indices)


def select_jam_mask(n: int, m: int, seed: int) -> JamMask:
    """Draw m distinct positions out of n uniformly, deterministically from seed."""
    if not 0 < m < n:
        raise ValueError(f"need 0 < m < n, got m={m}, n={n}")
    rng = np.random.default_rng(seed)
    idx = rng.choice(n, size=m, replace=False)
    return JamMask(total_bits=n, jammed_indices=tuple(int(i) for i in idx))


def jamming_power(p_t: float, n: int, m: int) -> float:
    """Jamming power budget: the transmit power scaled by the jammed fraction m/n."""
    if not 0 < m < n:
        raise ValueError(f"need 0 < m < n, got m={m}, n={n}")
    if p_t <= 0.0:
        raise ValueError("p_t must be > 0")
    return p_t * m / n


def cancelled_snr_bob(h_b: float, p_t: float, sigma_b: float) -> float:
    """Legitimate receiver's SNR after removing its own jamming.

    The receiver knows its jamming signal exactly and subtracts it, so the
    result is the plain unjammed optical SNR: independent of the RIS yaw
    configuration and of the jamming power.
    """
    return optical_snr(h_b, p_t, sigma_b)


def reconstruct_message(received_bits, mask: JamMask, original_jammed_bits) -> list:
    """Rebuild the clean message by overwriting jammed positions.

    original_jammed_bits holds the receiver's record of the true bits at the
    mask positions, ordered by ascending index. Bits outside the mask are
    passed through unchanged (reconstruction cannot repair those).
    """
    received = list(received_bits)
    known = list(original_jammed_bits)
    if len(received) != mask.total_bits:
        raise ValueError(
            f"received length {len(received)} != mask total_bits {mask.total_bits}")
    if len(known) != mask.jammed_count:
        raise ValueError(
            f"got {len(known)} known bits for {mask.jammed_count} jammed positions")
    for pos, bit in zip(mask.jammed_indices, known):
        received[pos] = bit
    return received
