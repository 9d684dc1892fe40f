"""
Admissible operations on translation quivers and their algebras.
"""

from arquiver.ops.grid import LedgerEntry, Patch, format_label, ledger_table, split_finite_part
from arquiver.ops.modules import ModuleRegistry
from arquiver.ops.script import (
    OperationScript,
    ScriptResult,
    ScriptStep,
    Seed,
    format_script,
    parse_script,
    read_script,
    run_script,
)
from arquiver.ops.support import SHAPES, SupportShape, classify_support
from arquiver.ops.surgery import (
    OPERATIONS,
    PivotContext,
    SurgeryResult,
    apply_ad1,
    apply_ad2,
    apply_ad3,
    apply_ad4,
    apply_ad5,
    apply_dual,
    apply_fad1,
    apply_fad2,
    apply_fad3,
    apply_fad4,
    apply_operation,
    ledger_additivity_check,
    parallel_rays,
)

__all__ = [
    "OPERATIONS",
    "SHAPES",
    "LedgerEntry",
    "ModuleRegistry",
    "OperationScript",
    "Patch",
    "PivotContext",
    "ScriptResult",
    "ScriptStep",
    "Seed",
    "SupportShape",
    "SurgeryResult",
    "apply_ad1",
    "apply_ad2",
    "apply_ad3",
    "apply_ad4",
    "apply_ad5",
    "apply_dual",
    "apply_fad1",
    "apply_fad2",
    "apply_fad3",
    "apply_fad4",
    "apply_operation",
    "classify_support",
    "format_label",
    "format_script",
    "ledger_additivity_check",
    "ledger_table",
    "parallel_rays",
    "parse_script",
    "read_script",
    "run_script",
    "split_finite_part",
]
