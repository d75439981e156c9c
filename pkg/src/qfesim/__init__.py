"""Stabiliser circuit simulation with quadratic form expansions."""

from .batch import DyadicProbability, strong_prob_all_but, strong_prob_z, weak_measure_all_but
from .circuit_io import Circuit, MeasurementRecord, ParseError, load_records, parse, run, serialize_records
from .gates import (
    apply_cx,
    apply_cy,
    apply_cz,
    apply_gate,
    apply_h,
    apply_s,
    apply_sdg,
    apply_x,
    apply_y,
    apply_z,
)
from .measure import ForcedBits, RngStream, measure, measure_x, measure_y, measure_z, peek_deterministic
from .pauli_obs import PauliString, is_deterministic_pauli, measure_pauli
from .qfe_core import (
    QfeState,
    TouchCounter,
    check_state,
    clone_state,
    dump_state,
    expand_amplitudes,
    new_basis_state,
    state_from_dense,
    validate,
)

__all__ = [
    "DyadicProbability",
    "strong_prob_all_but",
    "strong_prob_z",
    "weak_measure_all_but",
    "Circuit",
    "MeasurementRecord",
    "ParseError",
    "load_records",
    "parse",
    "run",
    "serialize_records",
    "apply_cx",
    "apply_cy",
    "apply_cz",
    "apply_gate",
    "apply_h",
    "apply_s",
    "apply_sdg",
    "apply_x",
    "apply_y",
    "apply_z",
    "ForcedBits",
    "measure",
    "RngStream",
    "measure_x",
    "measure_y",
    "measure_z",
    "peek_deterministic",
    "PauliString",
    "is_deterministic_pauli",
    "measure_pauli",
    "QfeState",
    "TouchCounter",
    "check_state",
    "clone_state",
    "dump_state",
    "expand_amplitudes",
    "new_basis_state",
    "state_from_dense",
    "validate",
]

__version__ = "0.1.0"
