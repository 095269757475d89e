"""Suite reports: per-check results plus timings kept apart."""
import json
import os
from typing import Dict, List

import pandas as pd

from meshforge.logging import get_logger

from .checks import CheckResult

logger = get_logger(__name__)


class SuiteReport:
    """
    Results of a suite run.

    The JSON report depends only on the configuration; wall-clock timings
    live in :attr:`timings` and are written to a separate file.
    """

    __slots__ = ["config", "results", "timings"]

    def __init__(self, config, results: List[CheckResult], timings: Dict[str, float]):
        self.config = config
        self.results = list(results)
        self.timings = dict(timings)

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} checks={len(self.results)} "
            f"failures={len(self.failures())}>"
        )

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def summary(self) -> pd.DataFrame:
        """
        One row per check with its status and the bound used.

        Returns
        -------
        pandas.DataFrame
            Columns ``check``, ``group``, ``status`` and ``L_used``.
        """
        rows = [
            {
                "check": r.check,
                "group": r.check.split("/", 1)[0],
                "status": r.status,
                "L_used": r.L_used,
            }
            for r in self.results
        ]
        return pd.DataFrame(rows, columns=["check", "group", "status", "L_used"])

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "passed": self.passed,
            "checks": [r.to_dict() for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def write(self, out_dir=None) -> str:
        """Write ``report.json`` and ``timings.json``; returns the report path."""
        out_dir = out_dir or self.config.out_dir
        os.makedirs(out_dir, exist_ok=True)
        path = os.path.join(out_dir, "report.json")
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.to_json())
        with open(os.path.join(out_dir, "timings.json"), "w", encoding="utf-8") as f:
            json.dump(self.timings, f, indent=2, sort_keys=True)
            f.write("\n")
        logger.info("Suite report written to %s", path)
        return path
