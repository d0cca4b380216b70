"""QFT/AQFT construction and lowering to the spin-hardware gate set.

Lowering targets the practical elementary set {H, Ry, Rz, Phi, Ising}:
controlled phases expand through XOR + Rz + Phi, and XOR itself expands
into single-qubit rotations around an Ising evolution.
"""
from __future__ import annotations

from enum import Enum

from .circuit import Circuit, DyadicAngle, Gate, GateKind


class XorMode(Enum):
    """Keep XOR as an ideal gate, or expand it into the physical sequence."""

    IDEAL = "ideal"
    PHYSICAL = "physical"


class LoweringLevel(Enum):
    LOGICAL = "logical"
    XOR = "xor"
    ELEMENTARY = "elementary"


_HALF_PI = DyadicAngle.pi_over_pow2(1)
_QUARTER_PI = DyadicAngle.pi_over_pow2(2)


def build_qft(n: int, include_bit_reversal: bool = False) -> Circuit:
    """QFT circuit on n qubits: per target j, H_j then controlled phases
    pi/2^(k-j) from each control k > j; optionally the final bit-reversal
    swaps.
    """
    return build_aqft(n, n, include_bit_reversal)


def build_aqft(n: int, m: int, include_bit_reversal: bool = False) -> Circuit:
    """Approximate QFT: drop controlled phases with control-target distance
    >= m.  m = n reproduces the exact QFT."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 1 <= m <= n:
        raise ValueError(f"m must be in [1, {n}], got {m}")
    gates: list[Gate] = []
    for j in range(n):
        gates.append(Gate.h(j))
        for k in range(j + 1, min(n, j + m)):
            gates.append(Gate.cphase(j, k, DyadicAngle.pi_over_pow2(k - j)))
    if include_bit_reversal:
        for i in range(n // 2):
            gates.append(Gate.swap(i, n - 1 - i))
    return Circuit(n, tuple(gates))


def lower_xor(j: int, k: int, width: int | None = None) -> Circuit:
    """Physical XOR(target=j, control=k) from Ry/Rz around an Ising step.

    The product equals XOR up to a global phase (expected exp(-i*pi/4)).
    """
    if j == k:
        raise ValueError("target and control must be distinct")
    width = max(j, k) + 1 if width is None else width
    return Circuit(
        width,
        (
            Gate.ry(j, _HALF_PI),
            Gate.ising(j, k, _QUARTER_PI),
            Gate.rz(j, -_HALF_PI),
            Gate.rz(k, -_HALF_PI),
            Gate.ry(j, -_HALF_PI),
        ),
        stage="lowered",
    )


def lower_cphase(
    j: int,
    k: int,
    theta: DyadicAngle,
    xor_mode: XorMode = XorMode.IDEAL,
    width: int | None = None,
) -> Circuit:
    """Controlled phase C(target=j, control=k; theta) from two XORs, Rz
    pulses of theta/2, and a theta/4 phase shift.

    With ideal XORs the product equals C(theta) exactly; with physical
    XORs equality holds up to a global phase.
    """
    if j == k:
        raise ValueError("target and control must be distinct")
    width = max(j, k) + 1 if width is None else width
    half = theta.half()
    gates: list[Gate] = []

    def emit_xor() -> None:
        if xor_mode is XorMode.IDEAL:
            gates.append(Gate.xor(j, k))
        else:
            gates.extend(lower_xor(j, k, width))

    emit_xor()
    gates.append(Gate.rz(j, half))
    emit_xor()
    gates.append(Gate.rz(j, -half))
    gates.append(Gate.phi(k, theta.quarter()))
    gates.append(Gate.rz(k, -half))
    return Circuit(width, tuple(gates), stage="lowered")


def lower_swap(
    j: int, k: int, xor_mode: XorMode = XorMode.IDEAL, width: int | None = None
) -> Circuit:
    """Swap from three alternating XORs."""
    if j == k:
        raise ValueError("indices must be distinct")
    width = max(j, k) + 1 if width is None else width
    if xor_mode is XorMode.IDEAL:
        gates: tuple[Gate, ...] = (Gate.xor(k, j), Gate.xor(j, k), Gate.xor(k, j))
    else:
        gates = (
            lower_xor(k, j, width).gates
            + lower_xor(j, k, width).gates
            + lower_xor(k, j, width).gates
        )
    return Circuit(width, gates, stage="lowered")


def lower_circuit(
    circuit: Circuit,
    level: LoweringLevel,
    xor_mode: XorMode = XorMode.IDEAL,
) -> Circuit:
    """Expand a circuit gate by gate to the requested lowering level."""
    if level is LoweringLevel.LOGICAL:
        return circuit
    # Elementary level always needs the physical XOR sequence.
    mode = XorMode.PHYSICAL if level is LoweringLevel.ELEMENTARY else xor_mode
    n = circuit.num_qubits
    gates: list[Gate] = []
    for g in circuit:
        if g.kind is GateKind.CPHASE:
            gates.extend(lower_cphase(*g.qubits, g.angle, mode, width=n))
        elif g.kind is GateKind.SWAP:
            gates.extend(lower_swap(*g.qubits, mode, width=n))
        elif g.kind is GateKind.XOR and level is LoweringLevel.ELEMENTARY:
            gates.extend(lower_xor(*g.qubits, width=n))
        else:
            gates.append(g)
    return Circuit(n, tuple(gates), stage="lowered")
