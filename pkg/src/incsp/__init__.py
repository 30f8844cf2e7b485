"""Incremental constraint-satisfaction experiments.

Random q-coloring and K-SAT instances are built one constraint at a time;
after each addition the assignment is repaired by zero-temperature
single-variable dynamics.  The repair cost per site diverges at an
operational density alpha*, which is located by a power-law fit.  An
exhaustive small-instance module verifies the nested-solution-set picture
(prefix level sets, cluster counts, descent consistency) that the
experiment rests on.
"""

__version__ = "0.1.0"

from incsp.streams import Coloring, KSat, ConstraintStream, generate_stream, read_stream, write_stream
from incsp.state import Assignment, ViolationState, init_state
from incsp.repair import RepairParams, RepairOutcome, repair, min_repair_oracle
from incsp.driver import StepRecord, Trajectory, run_incremental, sweep
from incsp.exact import PrefixReport, pseudo_energy, enumerate_prefixes, descent_equivalence_check
from incsp.fitting import DivergenceFit, aggregate, fit_power_law, report

__all__ = [
    "__version__",
    "Coloring", "KSat", "ConstraintStream", "generate_stream", "read_stream", "write_stream",
    "Assignment", "ViolationState", "init_state",
    "RepairParams", "RepairOutcome", "repair", "min_repair_oracle",
    "StepRecord", "Trajectory", "run_incremental", "sweep",
    "PrefixReport", "pseudo_energy", "enumerate_prefixes", "descent_equivalence_check",
    "DivergenceFit", "aggregate", "fit_power_law", "report",
]
