import hashlib
import math
from dataclasses import dataclass
from typing import Any, Union

import numpy as np


@dataclass(frozen=True)
class Undefined:
    """A number that has no value for a stated reason (never NaN, never None)."""

    reason: str

    def as_dict(self) -> dict:
        return {'undefined': self.reason}


MaybeFloat = Union[float, Undefined]

ZERO_MEAN_SPIN = "zero mean spin"


def is_defined(value: Any) -> bool:
    """Check whether a value is a number rather than an Undefined marker."""
    return not isinstance(value, Undefined)


def content_digest(data: bytes) -> str:
    """Hash file contents for report provenance."""
    return "sha256:" + hashlib.sha256(data).hexdigest()


def derive_seed(seed: int, *keys: int) -> int:
    """Derive an independent 64-bit seed from a base seed and integer keys."""
    sequence = np.random.SeedSequence([int(seed), *[int(k) for k in keys]])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def make_rng(seed: int, *keys: int) -> np.random.Generator:
    """Counter-style generator keyed by (seed, keys...)."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), *[int(k) for k in keys]]))


def canonical_angle(theta: float) -> float:
    """Wrap an angle into [0, 2π)."""
    wrapped = math.fmod(theta, 2 * math.pi)
    if wrapped < 0:
        wrapped += 2 * math.pi
    if wrapped >= 2 * math.pi:
        wrapped = 0.0
    return wrapped


def format_number(value: MaybeFloat) -> str:
    """Format a float with 17 significant digits for CSV output."""
    if isinstance(value, Undefined):
        return '{"undefined": "%s"}' % value.reason
    return format(float(value), '.17g')


def format_duration(seconds: float) -> str:
    """Format a duration in seconds to a short human readable string."""
    if seconds < 1:
        return f"{seconds * 1000:.1f}ms"
    if seconds < 60:
        return f"{seconds:.2f}s"
    minutes = int(seconds // 60)
    return f"{minutes}m{seconds - 60 * minutes:.0f}s"
