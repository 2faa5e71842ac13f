"""Pipeline package exports."""

from pipelines.export_pipeline import render_enumeration, render_lattice, write_output
from pipelines.simulation_pipeline import load_scenario, run_scenario
from pipelines.verification_pipeline import render_verification_table, run_verification

__all__ = [
    "load_scenario",
    "render_enumeration",
    "render_lattice",
    "render_verification_table",
    "run_scenario",
    "run_verification",
    "write_output",
]
