"""
Verification suite: configuration, checks over the generators and fixtures,
and a process-parallel runner producing deterministic reports.
"""

__all__ = [
    "SuiteConfig",
    "load_config",
    "CheckResult",
    "SuiteReport",
    "build_tasks",
    "run_suite",
]

from .checks import CheckResult
from .config import SuiteConfig, load_config
from .report import SuiteReport
from .runner import build_tasks, run_suite
