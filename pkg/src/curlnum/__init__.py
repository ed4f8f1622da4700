"""Curling numbers of integer sequences: kernels, searches, counting tables."""

from .abe import ABEStore, C1Result, abe_brute, c1_recursive, decompose_nonrobust
from .core import (
    CurlResult,
    ExtensionResult,
    check_merge,
    curling_number,
    extend_to_tail,
    gijswijt_prefix,
    is_weak,
)
from .counts import (
    Classification,
    CountTables,
    brute_tables,
    c_row_recurrence,
    c_sqrt_formula,
    classify,
    d_value,
    extend_tables_doubling,
    fine_wilf_period,
    is_primitive,
)
from .errors import (
    CapExceeded,
    ContainsOne,
    CurlError,
    CurlMismatch,
    EmptyInput,
    FormatError,
    FormulaOutOfRange,
    IndexOutOfRange,
    LengthOne,
    MissingDependency,
    NotAPeriod,
    NotPrimitive,
    RobustnessUndefined,
    StepLimitExceeded,
)
from .fastcn import fast_curling_number, fast_tail_length
from .formats import (
    BFile,
    make_bfile,
    parse_bfile,
    parse_seq,
    read_bfile,
    render_bfile,
    seq_to_text,
    write_bfile,
)
from .omega import SearchReport, construct_larger, jump_points, omega_search
from .tails import (
    RottenReport,
    TailRow,
    ThetaReport,
    essential_first_scan,
    mean_tail,
    prefix_increase_scan,
    rotten_scan,
    tail_row,
    theta_stats,
)
from .verify import CheckResult, run_suite

__all__ = [
    "ABEStore",
    "BFile",
    "C1Result",
    "CapExceeded",
    "CheckResult",
    "Classification",
    "ContainsOne",
    "CountTables",
    "CurlError",
    "CurlMismatch",
    "CurlResult",
    "EmptyInput",
    "ExtensionResult",
    "FormatError",
    "FormulaOutOfRange",
    "IndexOutOfRange",
    "LengthOne",
    "MissingDependency",
    "NotAPeriod",
    "NotPrimitive",
    "RobustnessUndefined",
    "RottenReport",
    "SearchReport",
    "StepLimitExceeded",
    "TailRow",
    "ThetaReport",
    "abe_brute",
    "brute_tables",
    "c1_recursive",
    "c_row_recurrence",
    "c_sqrt_formula",
    "check_merge",
    "classify",
    "construct_larger",
    "curling_number",
    "d_value",
    "decompose_nonrobust",
    "essential_first_scan",
    "extend_tables_doubling",
    "extend_to_tail",
    "fast_curling_number",
    "fast_tail_length",
    "fine_wilf_period",
    "gijswijt_prefix",
    "is_primitive",
    "is_weak",
    "jump_points",
    "make_bfile",
    "mean_tail",
    "omega_search",
    "parse_bfile",
    "parse_seq",
    "prefix_increase_scan",
    "read_bfile",
    "render_bfile",
    "rotten_scan",
    "run_suite",
    "seq_to_text",
    "tail_row",
    "theta_stats",
    "write_bfile",
]

__version__ = "0.1.0"
