"""Hardware time-cost models: duration vs intensity control, unit-time
policies, the time-resolution bound, and field-intensity feasibility.

All relative costs are exact rationals (every angle is a dyadic multiple
of pi), so closed-form totals can be checked by integer equality at any
width.  Floating point enters only at the seconds/tesla boundary.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .circuit import Circuit, DyadicAngle, Gate, GateKind
from .errors import CapacityError, InfeasibleModelError

#: Width cap for cost rows that materialize a circuit.
MATERIALIZED_N_CAP = 64
#: Width cap for closed-form cost rows.
CLOSED_FORM_N_CAP = 4096


class ControlMode(Enum):
    DURATION = "duration"
    INTENSITY = "intensity"


class UnitPolicy(Enum):
    TAU_ZERO = "tau0"  # t_unit = time of a full pi rotation
    TAU_N_MINUS_ONE = "tauN"  # t_unit = time of the smallest QFT rotation
    CUSTOM = "custom"


#: Gate kinds whose duration tracks the rotation angle in duration mode.
_ANGLE_COST_KINDS = frozenset(
    {GateKind.CPHASE, GateKind.ISING, GateKind.RZ, GateKind.GLOBAL_PHASE}
)

_BREAKDOWN_CLASS = {
    GateKind.CPHASE: "controlled_rotation",
    GateKind.ISING: "controlled_rotation",
    GateKind.RZ: "single_qubit_rotation",
    GateKind.GLOBAL_PHASE: "single_qubit_rotation",
    GateKind.H: "fixed_gates",
    GateKind.XOR: "fixed_gates",
    GateKind.RY: "fixed_gates",
    GateKind.SWAP: "swap",
}


@dataclass(frozen=True)
class HardwareModel:
    """Control mode, reference durations, and the time-resolution bound.

    t_ref is the seconds needed to rotate a phase by pi at the reference
    field intensity; t_resolution is the smallest controllable duration.
    Angle-free gates (and Ry pulses) take fixed_gate_time seconds.
    """

    mode: ControlMode = ControlMode.DURATION
    unit_policy: UnitPolicy = UnitPolicy.TAU_N_MINUS_ONE
    t_resolution: float = 1e-3
    t_ref: float = 1.0
    fixed_gate_time: float = 0.0
    b_min: float | None = None
    custom_unit: DyadicAngle | None = None

    def __post_init__(self) -> None:
        if self.t_resolution <= 0 or self.t_ref <= 0:
            raise ValueError("t_resolution and t_ref must be positive")
        if self.fixed_gate_time < 0:
            raise ValueError("fixed_gate_time must be non-negative")
        if self.unit_policy is UnitPolicy.CUSTOM and (
            self.custom_unit is None or self.custom_unit.numerator == 0
        ):
            raise ValueError("CUSTOM policy requires a nonzero custom_unit")

    def unit_angle_fraction(self, n: int) -> Fraction:
        """The unit angle as an exact fraction of pi."""
        if self.unit_policy is UnitPolicy.TAU_ZERO:
            return Fraction(1)
        if self.unit_policy is UnitPolicy.TAU_N_MINUS_ONE:
            if n < 1:
                raise ValueError("circuit width required for this policy")
            return Fraction(1, 1 << (n - 1))
        return abs(self.custom_unit.as_fraction_of_pi)

    def t_unit_seconds(self, n: int) -> float:
        """Physical seconds per cost unit.

        For the smallest-rotation policy the field intensity is assumed
        tuned so the unit rotation takes exactly the resolution time (the
        fastest schedule that still resolves every pulse).
        """
        if self.mode is ControlMode.INTENSITY:
            return self.t_ref
        if self.unit_policy is UnitPolicy.TAU_N_MINUS_ONE:
            return self.t_resolution
        return self.t_ref * float(self.unit_angle_fraction(n))


@dataclass(frozen=True)
class CostReport:
    """Exact relative cost with per-gate-class breakdown and feasibility."""

    total_relative: Fraction
    total_seconds: float
    breakdown: dict[str, Fraction]
    feasible: bool
    n_b: int | None
    intensity_ratio: int | None

    def to_json_dict(self) -> dict:
        return {
            "total_relative": dyadic_decimal_str(self.total_relative),
            "total_seconds": self.total_seconds,
            "breakdown": {
                k: dyadic_decimal_str(v) for k, v in self.breakdown.items()
            },
            "feasible": self.feasible,
            "n_b": self.n_b,
            "intensity_ratio": str(self.intensity_ratio)
            if self.intensity_ratio is not None
            else None,
        }


def dyadic_decimal_str(x: Fraction) -> str:
    """Exact terminating decimal of a rational with power-of-two denominator."""
    den = x.denominator
    k = den.bit_length() - 1
    if den != 1 << k:
        raise ValueError(f"{x} is not dyadic")
    scaled = abs(x.numerator) * 5**k
    sign = "-" if x.numerator < 0 else ""
    if k == 0:
        return f"{sign}{scaled}"
    digits = str(scaled).rjust(k + 1, "0")
    return f"{sign}{digits[:-k]}.{digits[-k:]}"


def gate_duration(gate: Gate, model: HardwareModel, n: int) -> Fraction:
    """Duration of one gate in units of t_unit (exact rational)."""
    if model.mode is ControlMode.INTENSITY:
        return Fraction(1)
    if gate.kind in _ANGLE_COST_KINDS:
        # physical duration follows the magnitude of the rotation,
        # with the angle reduced to (-pi, pi] first
        magnitude = abs(gate.angle.reduced_fraction_of_pi())
        return magnitude / model.unit_angle_fraction(n)
    if model.fixed_gate_time == 0.0:
        return Fraction(0)
    return Fraction(model.fixed_gate_time) / Fraction(model.t_unit_seconds(n))


def _duration_n_b(model: HardwareModel) -> int:
    """Largest width whose smallest QFT rotation still meets t_R at the
    reference intensity; 0 when even a full pi rotation is too fast."""
    ratio = Fraction(model.t_ref) / Fraction(model.t_resolution)
    if ratio < 1:
        return 0
    return int(ratio).bit_length()


def circuit_cost(circuit: Circuit, model: HardwareModel) -> CostReport:
    """Exact total duration of a circuit with per-class breakdown."""
    n = circuit.num_qubits
    breakdown = {
        "controlled_rotation": Fraction(0),
        "single_qubit_rotation": Fraction(0),
        "fixed_gates": Fraction(0),
        "swap": Fraction(0),
    }
    min_positive: Fraction | None = None
    for g in circuit:
        d = gate_duration(g, model, n)
        breakdown[_BREAKDOWN_CLASS[g.kind]] += d
        if d > 0 and (min_positive is None or d < min_positive):
            min_positive = d
    total = sum(breakdown.values(), Fraction(0))
    t_unit = Fraction(model.t_unit_seconds(n))
    t_res = Fraction(model.t_resolution)
    if min_positive is None:
        feasible = True
    else:
        feasible = min_positive * t_unit >= t_res
    if model.mode is ControlMode.INTENSITY:
        n_b = None
        ratio: int | None = 1 << (n - 1)
        feasible = Fraction(model.t_ref) >= t_res
    else:
        n_b = _duration_n_b(model)
        ratio = None
    return CostReport(
        total_relative=total,
        total_seconds=float(total * t_unit),
        breakdown=breakdown,
        feasible=bool(feasible),
        n_b=n_b,
        intensity_ratio=ratio,
    )


def qft_cost_closed_form(
    n: int,
    policy: UnitPolicy = UnitPolicy.TAU_N_MINUS_ONE,
    custom_unit: DyadicAngle | None = None,
) -> Fraction:
    """Closed-form controlled-rotation cost of the exact n-qubit QFT.

    Unit tau_0:   n + 2^(1-n) - 2
    Unit tau_n-1: (n-2)*2^(n-1) + 1
    n = 1 gives 0 (no controlled rotations at all).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return Fraction(0)
    base = Fraction(n) + Fraction(2, 1 << n) - 2  # unit tau_0
    if policy is UnitPolicy.TAU_ZERO:
        return base
    if policy is UnitPolicy.TAU_N_MINUS_ONE:
        return base * (1 << (n - 1))
    if custom_unit is None or custom_unit.numerator == 0:
        raise ValueError("CUSTOM policy requires a nonzero custom_unit")
    return base / abs(custom_unit.as_fraction_of_pi)


def max_feasible_qubits(model: HardwareModel, tau0_seconds: float) -> int:
    """Largest n with tau0 / 2^(n-1) >= t_R, by exact integer comparison."""
    tau0 = Fraction(tau0_seconds)
    t_res = Fraction(model.t_resolution)
    if tau0 < t_res:
        raise InfeasibleModelError(
            f"tau0 = {tau0_seconds} s is below the resolution {model.t_resolution} s"
        )
    ratio = tau0 / t_res  # >= 1
    return int(ratio).bit_length()


def intensity_requirement(n: int, b_min: float) -> dict:
    """Field needed for the largest rotation when the smallest uses b_min."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if b_min <= 0:
        raise ValueError("b_min must be positive")
    ratio = 1 << (n - 1)
    return {"b_max": b_min * float(ratio), "ratio": ratio}


@dataclass(frozen=True)
class CurveRow:
    n: int
    relative_cost: Fraction
    feasible: bool
    n_b: int | None


def _closed_form_cost(n: int, m: int, model: HardwareModel) -> Fraction:
    """Controlled-rotation cost of AQFT(n, m) without materializing it."""
    unit = model.unit_angle_fraction(n)
    total = Fraction(0)
    for d in range(1, min(m, n)):
        total += (n - d) * Fraction(1, 1 << d) / unit
    if model.fixed_gate_time > 0.0:
        fixed_rel = Fraction(model.fixed_gate_time) / Fraction(
            model.t_unit_seconds(n)
        )
        total += n * fixed_rel  # the n Hadamard pulses
    return total


def _row_feasible(n: int, m: int, model: HardwareModel) -> bool:
    if model.mode is ControlMode.INTENSITY:
        return Fraction(model.t_ref) >= Fraction(model.t_resolution)
    if model.unit_policy is UnitPolicy.TAU_N_MINUS_ONE:
        return True  # intensity is tuned down with n; every pulse >= t_R
    d_max = min(m, n) - 1
    smallest = Fraction(model.t_ref) / (1 << d_max)
    return smallest >= Fraction(model.t_resolution)


def cost_curve(
    n_min: int,
    n_max: int,
    model: HardwareModel,
    circuit_kind: str = "qft",
    aqft_m: int | None = None,
) -> list[CurveRow]:
    """Cost rows for n in [n_min, n_max].

    circuit_kind: "qft" and "aqft" use the closed form (cross-checked
    against materialized circuits by the test suite); "qft_routed_reduced"
    materializes, routes, and reduces each circuit.
    """
    if n_min < 1 or n_min > n_max:
        raise ValueError(f"bad range {n_min}:{n_max}")
    materialized = circuit_kind == "qft_routed_reduced"
    cap = MATERIALIZED_N_CAP if materialized else CLOSED_FORM_N_CAP
    if n_max > cap:
        raise CapacityError(f"n_max={n_max} exceeds cap {cap} for {circuit_kind}")
    if circuit_kind == "aqft" and aqft_m is None:
        raise ValueError("aqft curves need aqft_m")

    rows: list[CurveRow] = []
    for n in range(n_min, n_max + 1):
        if model.mode is ControlMode.INTENSITY:
            n_b: int | None = None
        else:
            n_b = _duration_n_b(model)
        if circuit_kind in ("qft", "aqft"):
            m = n if circuit_kind == "qft" else min(aqft_m, n)
            if model.mode is ControlMode.INTENSITY:
                # every gate costs one unit
                cost = Fraction(n + sum(n - d for d in range(1, m)))
            else:
                cost = _closed_form_cost(n, m, model)
            feasible = _row_feasible(n, m, model)
        elif materialized:
            from .route import cancel_swaps, route_lnn
            from .synth import build_qft

            reduced = cancel_swaps(route_lnn(build_qft(n)))
            report = circuit_cost(reduced.circuit, model)
            cost = report.total_relative
            feasible = report.feasible
        else:
            raise ValueError(f"unknown circuit_kind {circuit_kind!r}")
        rows.append(CurveRow(n, cost, feasible, n_b))
    return rows


def curve_csv(
    rows: list[CurveRow], model: HardwareModel, circuit_kind: str
) -> str:
    """Render curve rows as CSV (exact decimal cost strings)."""
    lines = ["n,relative_cost,feasible,n_b,policy,mode,circuit"]
    for r in rows:
        n_b = "" if r.n_b is None else str(r.n_b)
        lines.append(
            f"{r.n},{dyadic_decimal_str(r.relative_cost)},"
            f"{str(r.feasible).lower()},{n_b},"
            f"{model.unit_policy.value},{model.mode.value},{circuit_kind}"
        )
    return "\n".join(lines) + "\n"
