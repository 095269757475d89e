"""
The verification checks.

Every task is a top-level function ``task(cfg, *args)`` returning a list of
:class:`CheckResult`, so tasks can be shipped to worker processes.
"""
from typing import List, NamedTuple, Optional

import numpy as np

from meshforge.complexes import (
    brutal_truncate,
    cohomology_dims,
    random_complex,
    std_truncate,
)
from meshforge.constants import DASHED, SOLID, CheckStatus, Family, Parity
from meshforge.dg import (
    check_d_squared,
    dg_auslander,
    dg_cohomology_dims,
    h0,
    load_perturbations,
    perturb_gamma,
)
from meshforge.exceptions import MeshforgeException
from meshforge.homology import (
    auslander_algebra,
    cy_duality_check,
    cy_fraction,
    ext_table,
    k0_rank,
    mesh_relations,
    min_proj_resolution,
    serre_orbit_check,
    stable_algebra,
    stable_presentation,
)
from meshforge.koszul import AugmentedDgAlgebra, koszul_cohomology, koszul_dual
from meshforge.logging import get_logger
from meshforge.path_algebra import (
    BasisLabel,
    FinDimAlgebra,
    RelationSet,
    WordSpace,
    ideal_span,
    minimal_relations_defect,
)
from meshforge.quiver import (
    ade_translation_quiver,
    canonical_form,
    dump_quiver,
    load_fixture,
    validate_translation_quiver,
)

logger = get_logger(__name__)

FULL_FIXTURES = ("intro_a1", "conifold", "curve_a2")
EXT_FIXTURES = ("intro_a1", "conifold", "curve_a2", "curve_a3", "curve_a4")
KOSZUL_ALGEBRAS = (
    "kxk",
    "dual_numbers",
    "stable/intro_a1",
    "stable/conifold",
    "stable/curve_a2",
    "stable/curve_a3",
)
BRIDGE_DIMS = {"intro_a1": 1, "conifold": 2, "curve_a2": 4}
K0_RANKS = {"intro_a1": 1, "conifold": 2, "curve_a2": 2}
KOSZUL_DEGREES = range(0, 5)


class CheckResult(NamedTuple):
    """One line of the suite report."""

    check: str
    status: str
    expected: object
    actual: object
    L_used: Optional[int] = None

    @classmethod
    def compare(cls, check, expected, actual, L_used=None) -> "CheckResult":
        status = CheckStatus.PASS if expected == actual else CheckStatus.FAIL
        return cls(check, status.value, expected, actual, L_used)

    @classmethod
    def error(cls, check, expected, exc, L_used=None) -> "CheckResult":
        actual = {"error": type(exc).__name__, "message": str(exc)}
        return cls(check, CheckStatus.FAIL.value, expected, actual, L_used)

    def to_dict(self) -> dict:
        return self._asdict()

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS


def _blocks(dims) -> dict:
    """``{(src, tgt): n}`` as JSON-friendly ``{"src->tgt": n}``, zeros dropped."""
    return {f"{s}->{t}": n for (s, t), n in sorted(dims.items()) if n}


def dynkin_indices(family, max_index) -> List[int]:
    family = Family(family)
    if family == Family.A:
        return list(range(1, max_index + 1))
    if family == Family.D:
        return list(range(4, max_index + 1))
    return list(range(6, min(8, max_index) + 1))


def expected_counts(family, index, parity) -> dict:
    """Vertex and solid arrow counts of the generator."""
    family, parity = Family(family), Parity(parity)
    if parity == Parity.EVEN:
        return {"vertices": index, "solid": 2 * (index - 1)}
    if family == Family.A:
        if index == 1:
            return {"vertices": 2, "solid": 0}
        m = index // 2 if index % 2 == 0 else (index + 1) // 2
        if index % 2 == 0:
            return {"vertices": m, "solid": 2 * (m - 1) + 1}
        return {"vertices": m + 1, "solid": 2 * m}
    if family == Family.D:
        m = index // 2
        return {"vertices": 4 * m if index % 2 == 0 else 4 * m - 1}
    return {"vertices": {6: 6, 7: 14, 8: 16}[index]}


def _rho_ok(dg, tq) -> bool:
    for v in tq.vertex_ids:
        dashed = dg.quiver.arrows_from(v, DASHED)
        if len(dashed) != 1 or dashed[0].tgt != tq.tau_inverse(v):
            return False
    return True


def generator_task(cfg, family, index) -> List[CheckResult]:
    """Structure, dg laws, parity invariance and Calabi-Yau data of one generator."""
    results = []
    name = f"{family}{index}"
    for krull_dim in (0, 1):
        parity = Parity.of(krull_dim)
        tq = ade_translation_quiver(family, index, krull_dim)
        counts = expected_counts(family, index, parity)
        expected = dict(counts, valid=True, rho=True, d_squared=True)
        actual = {
            "vertices": len(tq.vertex_ids),
            "valid": validate_translation_quiver(tq).ok,
        }
        if "solid" in counts:
            actual["solid"] = len(tq.quiver.degree_part(SOLID).arrows)
        try:
            dg = dg_auslander(tq, cfg.dg_trunc)
            actual["rho"] = _rho_ok(dg, tq)
            actual["d_squared"] = check_d_squared(dg)
        except MeshforgeException as e:
            results.append(CheckResult.error(f"generators/{name}/{parity}", expected, e))
        else:
            results.append(
                CheckResult.compare(f"generators/{name}/{parity}", expected, actual, cfg.dg_trunc)
            )
        results.append(_cy_result(tq, family, index, parity))

    forms = {}
    for d in cfg.krull_dims:
        for k in (d, d + 2):
            if k not in forms:
                forms[k] = dump_quiver(canonical_form(ade_translation_quiver(family, index, k)))
    actual = {str(d): forms[d] == forms[d + 2] for d in cfg.krull_dims}
    results.append(
        CheckResult.compare(
            f"knorrer/{name}", {str(d): True for d in cfg.krull_dims}, actual
        )
    )
    return results


def tau_orbit_length(tq, v) -> Optional[int]:
    """1 for a fixed vertex, 2 for a swapped pair, None when ``tau`` is not an involution there."""
    image = tq.tau.get(v)
    if image == v:
        return 1
    if image is not None and tq.tau.get(image) == v:
        return 2
    return None


def expected_cy_fractions(tq, parity) -> dict:
    """
    CY fractions ``[2 n_v, n_v]`` read off ``tau`` directly.

    Even parity has ``tau = id``, so every vertex gives ``[2, 1]``.
    """
    fractions = {}
    for v in tq.non_projective_vertices:
        n = 1 if Parity(parity) == Parity.EVEN else tau_orbit_length(tq, v)
        fractions[v] = None if n is None else [2 * n, n]
    return fractions


def _cy_result(tq, family, index, parity):
    table = ext_table(tq)
    fractions = {v: list(cy_fraction(tq, v)) for v in tq.non_projective_vertices}
    expected = {
        "duality": True,
        "serre_orbits": True,
        "fractions": expected_cy_fractions(tq, parity),
    }
    actual = {
        "duality": cy_duality_check(table),
        "serre_orbits": serre_orbit_check(table),
        "fractions": fractions,
    }
    return CheckResult.compare(f"cy/{family}{index}/{parity}", expected, actual)


def h0_task(cfg) -> List[CheckResult]:
    """Total dimension of ``H^0`` for the A family."""
    if Family.A.value not in cfg.families:
        return []
    cases = [("A", 1, 1, 2), ("A", 1, 0, 1)]
    cases += [("A", n, 0, n * (n + 1) * (n + 2) // 6) for n in range(2, min(6, cfg.max_index) + 1)]
    results = []
    for family, index, krull_dim, dim in cases:
        check = f"h0/{family}{index}/{Parity.of(krull_dim)}"
        expected = {"dim": dim, "stabilized": True}
        try:
            dg = dg_auslander(ade_translation_quiver(family, index, krull_dim), cfg.trunc)
            algebra = h0(dg, cfg.trunc, cfg.window)
        except MeshforgeException as e:
            results.append(CheckResult.error(check, expected, e, cfg.trunc))
            continue
        actual = {"dim": algebra.dim, "stabilized": algebra.stabilized}
        results.append(CheckResult.compare(check, expected, actual, algebra.bound))
    return results


def bridge_task(cfg, fixture) -> List[CheckResult]:
    """Stable Auslander algebra against ``H^0`` of the dg algebra of the stable part."""
    check = f"bridge/{fixture}"
    tq = load_fixture(fixture)
    try:
        dg = dg_auslander(tq.stable_part(), cfg.trunc)
        target = h0(dg, cfg.trunc, cfg.window)
        expected = {"dim": BRIDGE_DIMS[fixture], "blocks": _blocks(target.block_dims())}
        ap = auslander_algebra(tq, cfg.trunc, cfg.window)
        algebra = stable_algebra(ap, cfg.trunc, cfg.window)
    except MeshforgeException as e:
        return [CheckResult.error(check, {"dim": BRIDGE_DIMS[fixture]}, e, cfg.trunc)]
    actual = {"dim": algebra.dim, "blocks": _blocks(algebra.block_dims())}
    return [CheckResult.compare(check, expected, actual, algebra.bound)]


def ext_dg_task(cfg, fixture) -> List[CheckResult]:
    """Arrows of the dg quiver of the stable part against ``Ext^1`` and ``Ext^2``."""
    tq = load_fixture(fixture)
    table = ext_table(tq)
    dg = dg_auslander(tq.stable_part(), 2)
    expected = {
        "1": _blocks(dg.quiver.arrow_counts(SOLID)),
        "2": _blocks(dg.quiver.arrow_counts(DASHED)),
    }
    actual = {
        str(l): {
            f"{i}->{j}": n for (ll, i, j), n in sorted(table.dims.items()) if ll == l and n
        }
        for l in (1, 2)
    }
    return [CheckResult.compare(f"ext-dg/{fixture}", expected, actual)]


def _quotient_dim(quiver, relations, bound) -> int:
    space = WordSpace(quiver, bound)
    return len(space) - len(ideal_span(space, relations.truncate(bound)))


def minimal_relations_task(cfg) -> List[CheckResult]:
    """Mesh relations of even A_n are minimal and none can be dropped."""
    if Family.A.value not in cfg.families:
        return []
    results = []
    for n in range(2, min(5, cfg.max_index) + 1):
        tq = ade_translation_quiver("A", n, 0)
        relations = mesh_relations(tq)
        minimal = True
        for bound in (relations.max_length + 2, relations.max_length + 3):
            for _, r in relations:
                count, dim = minimal_relations_defect(tq.quiver, relations, r.src, r.tgt, bound)
                minimal = minimal and count == dim
        full = _quotient_dim(tq.quiver, relations, 3)
        increases = all(
            _quotient_dim(
                tq.quiver, RelationSet((k, r) for k, r in relations if k != rel_id), 3
            ) > full
            for rel_id in relations.ids
        )
        results.append(
            CheckResult.compare(
                f"minimal-relations/A{n}",
                {"minimal": True, "deletion_increases": True},
                {"minimal": minimal, "deletion_increases": increases},
            )
        )
    return results


def _settled_window(dg, cfg):
    """The window [-2, 0] at the first bound from ``cfg.trunc`` on where it has stabilized."""
    L = min(cfg.trunc, dg.bound)
    window = dg_cohomology_dims(dg, [-2, -1, 0], L)
    while L < dg.bound and not all(entry.stabilized for entry in window.values()):
        L += 1
        window = dg_cohomology_dims(dg, [-2, -1, 0], L)
    return window


def _dg_dims(dg, cfg):
    algebra = h0(dg, cfg.trunc, cfg.window)
    window = _settled_window(dg, cfg)
    return {
        "h0": _blocks(algebra.block_dims()),
        "window": {str(n): entry.dim for n, entry in window.items()},
        "stabilized": {
            "h0": algebra.stabilized,
            **{str(n): entry.stabilized for n, entry in window.items()},
        },
    }


def perturbation_task(cfg, case_name) -> List[CheckResult]:
    """Perturbing the mesh differential leaves the cohomology unchanged."""
    case = next(c for c in load_perturbations() if c.name == case_name)
    check = f"perturbation/{case.name}"
    try:
        tq = ade_translation_quiver(case.family, case.index, case.krull_dim)
        dg = dg_auslander(tq, max(cfg.trunc, cfg.dg_trunc))
        expected = _dg_dims(dg, cfg)
        # both sides must settle below the presentation bound
        expected["stabilized"] = {k: True for k in expected["stabilized"]}
        actual = _dg_dims(perturb_gamma(dg, case.perturbations), cfg)
    except MeshforgeException as e:
        return [CheckResult.error(check, None, e, cfg.trunc)]
    return [CheckResult.compare(check, expected, actual, cfg.trunc)]


def dual_numbers() -> FinDimAlgebra:
    """``k[x] / x^2`` on one vertex."""
    basis = [BasisLabel("e(1)", "1", "1", trivial=True), BasisLabel("x", "1", "1")]
    mult = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}
    return FinDimAlgebra(["1"], basis, mult)


def koszul_algebra(name, cfg):
    """The finite-dimensional algebra and, for stable algebras, its presentation."""
    if name == "kxk":
        return FinDimAlgebra.semisimple(["1", "2"]), None
    if name == "dual_numbers":
        return dual_numbers(), None
    fixture = name.split("/", 1)[1]
    ap = auslander_algebra(load_fixture(fixture), cfg.trunc, cfg.window)
    return stable_algebra(ap, cfg.trunc, cfg.window), stable_presentation(ap)


def koszul_task(cfg, name) -> List[CheckResult]:
    """Cohomology of the Koszul dual against minimal projective resolutions."""
    check = f"koszul/{name}"
    try:
        algebra, presentation = koszul_algebra(name, cfg)
        E = koszul_dual(AugmentedDgAlgebra.from_algebra(algebra), cfg.words)
        cohomology = koszul_cohomology(E, KOSZUL_DEGREES)
    except MeshforgeException as e:
        return [CheckResult.error(check, None, e, cfg.words)]

    expected = {str(n): {} for n in KOSZUL_DEGREES}
    for i in algebra.vertices:
        resolution = min_proj_resolution(algebra, i, max(KOSZUL_DEGREES))
        for (l, j), m in resolution.ext_dims().items():
            expected[str(l)][f"{i}->{j}"] = m
    expected = {n: dict(sorted(b.items())) for n, b in expected.items()}
    actual = {str(n): _blocks(entry.blocks) for n, entry in cohomology.items()}
    results = [CheckResult.compare(check, expected, actual, cfg.words)]

    stabilized = {str(n): entry.stabilized for n, entry in cohomology.items()}
    results.append(
        CheckResult.compare(
            f"{check}/stabilized", {n: True for n in stabilized}, stabilized, cfg.words
        )
    )
    if presentation is not None:
        quiver, relations = presentation
        bound = relations.max_length + 2
        defects = {}
        for i in quiver.vertex_ids:
            for j in quiver.vertex_ids:
                _, dim = minimal_relations_defect(quiver, relations, i, j, bound)
                if dim:
                    defects[f"{i}->{j}"] = dim
        results.append(
            CheckResult.compare(f"{check}/relations", actual["2"], defects, bound)
        )
    return results


def _std_laws(m, i) -> bool:
    dims = cohomology_dims(m)
    low = cohomology_dims(std_truncate(m, i, "leq"))
    high = cohomology_dims(std_truncate(m, i, "gt"))
    for j in set(dims) | set(low) | set(high):
        below = dims.get(j, 0) if j <= i else 0
        above = dims.get(j, 0) if j > i else 0
        if low.get(j, 0) != below or high.get(j, 0) != above:
            return False
    return True


def _brutal_laws(m, i) -> bool:
    low = brutal_truncate(m, i - 1, "leq")
    high = brutal_truncate(m, i, "geq")
    return all(low.dim(j) + high.dim(j) == m.dim(j) for j in m.support)


def truncation_task(cfg) -> List[CheckResult]:
    """Standard and brutal truncation laws on random complexes."""
    rng = np.random.default_rng(cfg.seed)
    failures = 0
    for _ in range(cfg.random_trials):
        m = random_complex(rng)
        i = int(rng.integers(-4, 5))
        try:
            ok = _std_laws(m, i) and _brutal_laws(m, i)
        except MeshforgeException:
            ok = False
        failures += not ok
    return [
        CheckResult.compare(
            "truncations",
            {"trials": cfg.random_trials, "failures": 0},
            {"trials": cfg.random_trials, "failures": failures},
        )
    ]


def k0_task(cfg) -> List[CheckResult]:  # pylint: disable=unused-argument
    """Grothendieck group rank of the full fixtures."""
    actual = {name: k0_rank(load_fixture(name)) for name in K0_RANKS}
    return [CheckResult.compare("k0", dict(K0_RANKS), actual)]
