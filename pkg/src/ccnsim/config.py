"""Line-oriented ``key = value`` run configuration.

Unknown keys are errors (no silent typos); missing keys fall back to
the reference parameter set, except ``j_prime`` which must always be
given.  ``#`` starts a comment, anywhere on a line.  All frequencies
use the same linear-MHz convention as the library, so reference values
can be pasted verbatim.

Keys: omega0 omega1 omega2 j j_prime rabi initial pulse_frequency
duration dt stride out_prefix.

``initial`` accepts a three-bit string (``110``), the word
``superposition``, or eight comma-separated complex amplitudes, which
must be normalised within 1e-6 and are then renormalised exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import IntegratorConfig, PulseSpec, RotatingState, pi_pulse_duration
from .model import ChainParams, ccn_resonance
from .scenarios import initial_digital, initial_superposition

#: Keys accepted in a config file, in canonical rendering order.
CONFIG_KEYS = (
    "omega0",
    "omega1",
    "omega2",
    "j",
    "j_prime",
    "rabi",
    "initial",
    "pulse_frequency",
    "duration",
    "dt",
    "stride",
    "out_prefix",
)

#: Explicit-amplitude initial states may deviate from unit norm by this much.
AMPLITUDE_NORM_TOL = 1e-6


class ConfigError(ValueError):
    """Config-file problem, annotated with the offending line when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, kw_only=True)
class RunConfig:
    """Parsed configuration; defaults are the reference parameter set."""

    j_prime: float
    omega0: float = 100.0
    omega1: float = 200.0
    omega2: float = 400.0
    j: float = 5.0
    rabi: float = 0.1
    initial: str | tuple[complex, ...] = "110"
    pulse_frequency: float | None = None
    duration: float | None = None
    dt: float = 1e-6
    stride: int = 1000
    out_prefix: str = "ccn"

    def chain_params(self) -> ChainParams:
        return ChainParams(
            omega=(self.omega0, self.omega1, self.omega2),
            j=self.j,
            j_prime=self.j_prime,
            rabi=self.rabi,
        )

    def integrator_config(self) -> IntegratorConfig:
        return IntegratorConfig(dt=self.dt, sample_stride=self.stride)

    def initial_state(self) -> RotatingState:
        if isinstance(self.initial, tuple):
            return RotatingState(np.array(self.initial, dtype=np.complex128), 0.0)
        if self.initial == "superposition":
            return initial_superposition()
        bits = tuple(int(ch) for ch in self.initial)
        return initial_digital(bits)  # type: ignore[arg-type]

    def build_pulse(self, params: ChainParams) -> PulseSpec:
        """Resonant pi-pulse for ``params``, with any configured overrides."""
        frequency = self.pulse_frequency
        if frequency is None:
            frequency = ccn_resonance(params)
        duration = self.duration
        if duration is None:
            duration = pi_pulse_duration(params)
        return PulseSpec(frequency=frequency, duration=duration, phase=0.0)


def _parse_float(key: str, raw: str, line: int) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise ConfigError(f"{key}: malformed number {raw!r}", line) from None
    if not math.isfinite(value):
        raise ConfigError(f"{key}: value must be finite, got {raw!r}", line)
    return value


def _parse_int(key: str, raw: str, line: int) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{key}: malformed integer {raw!r}", line) from None


def _parse_initial(raw: str, line: int) -> str | tuple[complex, ...]:
    if raw == "superposition":
        return raw
    if "," in raw:
        parts = [part.strip() for part in raw.split(",")]
        if len(parts) != 8:
            raise ConfigError(f"initial: expected 8 amplitudes, got {len(parts)}", line)
        try:
            amps = tuple(complex(part) for part in parts)
        except ValueError:
            raise ConfigError(f"initial: malformed complex amplitude in {raw!r}", line) from None
        norm = math.sqrt(sum(abs(a) ** 2 for a in amps))
        if abs(norm * norm - 1.0) > AMPLITUDE_NORM_TOL:
            raise ConfigError(
                f"initial: amplitudes must be normalised within {AMPLITUDE_NORM_TOL:g}, "
                f"|norm^2 - 1| = {abs(norm * norm - 1.0):.3e}",
                line,
            )
        return tuple(a / norm for a in amps)
    if len(raw) == 3 and set(raw) <= {"0", "1"}:
        return raw
    raise ConfigError(
        f"initial: expected a 3-bit string, 'superposition' or 8 amplitudes, got {raw!r}",
        line,
    )


def parse_config(text: str) -> RunConfig:
    """Parse config text into a validated :class:`RunConfig`."""
    seen: dict[str, tuple[str, int]] = {}
    for lineno, rawline in enumerate(text.splitlines(), start=1):
        stripped = rawline.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"expected 'key = value', got {rawline.strip()!r}", lineno)
        key, _, raw = stripped.partition("=")
        key = key.strip()
        raw = raw.strip()
        if key not in CONFIG_KEYS:
            raise ConfigError(f"unknown key {key!r}", lineno)
        if key in seen:
            raise ConfigError(f"duplicate key {key!r} (first on line {seen[key][1]})", lineno)
        if not raw:
            raise ConfigError(f"{key}: empty value", lineno)
        seen[key] = (raw, lineno)

    if "j_prime" not in seen:
        raise ConfigError("missing required key 'j_prime' (it has no default)")

    values: dict[str, object] = {}
    for key, (raw, lineno) in seen.items():
        if key == "initial":
            values[key] = _parse_initial(raw, lineno)
        elif key == "stride":
            values[key] = _parse_int(key, raw, lineno)
        elif key == "out_prefix":
            values[key] = raw
        else:
            values[key] = _parse_float(key, raw, lineno)

    cfg = RunConfig(**values)  # type: ignore[arg-type]
    _validate(cfg, {key: lineno for key, (_, lineno) in seen.items()})
    return cfg


def _validate(cfg: RunConfig, lines: dict[str, int]) -> None:
    def err(key: str, message: str) -> ConfigError:
        return ConfigError(message, lines.get(key))

    for key in ("omega0", "omega1", "omega2"):
        if not getattr(cfg, key) > 0:
            raise err(key, f"{key} must be positive, got {getattr(cfg, key)}")
    if len({cfg.omega0, cfg.omega1, cfg.omega2}) != 3:
        raise err("omega0", "omega0, omega1, omega2 must be pairwise distinct")
    if not cfg.j > 0:
        raise err("j", f"j must be positive, got {cfg.j}")
    if cfg.j_prime < 0:
        raise err("j_prime", f"j_prime must be >= 0, got {cfg.j_prime}")
    if not cfg.rabi > 0:
        raise err("rabi", f"rabi must be positive, got {cfg.rabi}")
    if cfg.pulse_frequency is not None and not cfg.pulse_frequency > 0:
        raise err("pulse_frequency", f"pulse_frequency must be positive, got {cfg.pulse_frequency}")
    if cfg.duration is not None and not cfg.duration > 0:
        raise err("duration", f"duration must be positive, got {cfg.duration}")
    if not cfg.dt > 0:
        raise err("dt", f"dt must be positive, got {cfg.dt}")
    if cfg.stride < 1:
        raise err("stride", f"stride must be >= 1, got {cfg.stride}")


def render_config(cfg: RunConfig) -> str:
    """Config text that parses back to an equal :class:`RunConfig`."""
    lines = []
    for key in CONFIG_KEYS:
        value = getattr(cfg, key)
        if value is None:
            continue
        if key == "initial" and isinstance(value, tuple):
            value = ", ".join(repr(a) for a in value)
        elif isinstance(value, float):
            value = repr(value)
        lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"
