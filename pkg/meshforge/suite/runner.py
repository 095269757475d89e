"""
Running the suite.

Tasks fan out over a process pool with the logging queue set up in every
worker; results come back in task order, so reports are deterministic.
"""
import os
import time
from multiprocessing import Pool as cpu_pool
from typing import List, Tuple

from meshforge.constants import Family
from meshforge.dg import load_perturbations
from meshforge.logging import (
    configure_multiprocess_logging,
    get_logger,
    multiprocessing_logging_queue,
)

from . import checks
from .config import SuiteConfig
from .report import SuiteReport

logger = get_logger(__name__)


def build_tasks(cfg: SuiteConfig) -> List[Tuple[str, object, tuple]]:
    """``(name, task function, extra args)`` in report order."""
    tasks = []
    for family in (f.value for f in Family):
        if family not in cfg.families:
            continue
        for index in checks.dynkin_indices(family, cfg.max_index):
            tasks.append((f"generators/{family}{index}", checks.generator_task, (family, index)))
    tasks.append(("h0", checks.h0_task, ()))
    for fixture in checks.FULL_FIXTURES:
        tasks.append((f"bridge/{fixture}", checks.bridge_task, (fixture,)))
    for fixture in checks.EXT_FIXTURES:
        tasks.append((f"ext-dg/{fixture}", checks.ext_dg_task, (fixture,)))
    tasks.append(("minimal-relations", checks.minimal_relations_task, ()))
    for case in load_perturbations():
        if case.family in cfg.families:
            tasks.append((f"perturbation/{case.name}", checks.perturbation_task, (case.name,)))
    for name in checks.KOSZUL_ALGEBRAS:
        tasks.append((f"koszul/{name}", checks.koszul_task, (name,)))
    tasks.append(("truncations", checks.truncation_task, ()))
    tasks.append(("k0", checks.k0_task, ()))
    return tasks


def run_task(task, cfg, *args):
    """Run one task; returns ``(results, seconds)``."""
    os.environ["MESHFORGE_WORD_BUDGET"] = str(cfg.word_budget)
    start = time.perf_counter()
    results = task(cfg, *args)
    return results, time.perf_counter() - start


def wrapped_task(logging_queue, task, cfg, *args):
    """
    Configures logging to use the multiprocessing queue in the worker.

    Must be defined at the top-level of the module so it can be pickled.
    """
    configure_multiprocess_logging(logging_queue)
    return run_task(task, cfg, *args)


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    """
    Run every check of the configuration.

    Parameters
    ----------
    cfg : :class:`SuiteConfig`

    Returns
    -------
    :class:`SuiteReport`
    """
    tasks = build_tasks(cfg)
    logger.info("Running %d suite tasks on %d cpu(s)", len(tasks), cfg.ncpu)

    if cfg.ncpu > 1:
        with multiprocessing_logging_queue() as logging_queue:
            args_list = [(logging_queue, task, cfg, *args) for _, task, args in tasks]
            with cpu_pool(min(cfg.ncpu, len(tasks))) as clust:
                outputs = clust.starmap(wrapped_task, args_list)
                clust.close()
                clust.join()  # coverage needs this
    else:
        outputs = [run_task(task, cfg, *args) for _, task, args in tasks]

    results = []
    timings = {}
    for (name, _, _), (task_results, seconds) in zip(tasks, outputs):
        logger.debug("Task %s finished in %.2fs", name, seconds)
        results.extend(task_results)
        timings[name] = seconds
    report = SuiteReport(cfg, results, timings)
    logger.info("Suite finished: %d checks, %d failed", len(results), len(report.failures()))
    return report
