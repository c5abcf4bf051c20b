"""
Normalization: conjugate a tuple of twist images to the standard block form
Builds the basis pair by pair: W_{k+1} = W_k ∩ E^{2k+1} ∩ E^{2k+2}, then corrects
the two new vectors so that L_{2k+1}, L_{2k+2} become Ã_{k+1}, B̃_{k+1}
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Literal, TypedDict

from langgraph.graph import END, START, StateGraph

from .config import get_settings
from .errors import DegenerateStep, DimensionMismatch, HypothesisViolation, SingularMatrixError
from .exact_linalg import Matrix, Subspace, Vector, identity, intersect, kernel
from .generators import GeneratorSet, generator_set
from .relations import RelationReport, relation_profile
from .representation import RepresentationTuple

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Hypotheses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HypothesisReport:
    unipotent_rank1: list[bool]
    relation_pattern_ok: bool
    eigenspaces_distinct: bool
    relation_report: RelationReport | None = None

    @property
    def overall(self) -> bool:
        return all(self.unipotent_rank1) and self.relation_pattern_ok and self.eigenspaces_distinct

    def first_failure(self) -> str | None:
        """Name of the first failing clause, or None"""
        bad = [j for j, ok in enumerate(self.unipotent_rank1, start=1) if not ok]
        if bad:
            return f"L{bad[0]} is not unipotent of rank one ((L-I)^2 = 0, rank(L-I) = 1)"
        if not self.relation_pattern_ok:
            first = self.relation_report.violations[0] if self.relation_report else None
            return f"relation pattern: {first}" if first else "relation pattern"
        if not self.eigenspaces_distinct:
            return "E^1 = ker(L1 - I) equals E^2 = ker(L2 - I)"
        return None


def is_unipotent_rank1(matrix: Matrix) -> bool:
    """(L - I)^2 == 0 and rank(L - I) == 1: the Jordan type of a twist image"""
    nilpotent = matrix - identity(matrix.rows)
    return (nilpotent @ nilpotent).is_zero() and nilpotent.rank() == 1


def verify_hypotheses(t: RepresentationTuple) -> HypothesisReport:
    unipotent = [is_unipotent_rank1(mat) for mat in t.matrices]
    relations = relation_profile(t)
    eye = identity(t.m)
    distinct = kernel(t.L(1) - eye) != kernel(t.L(2) - eye)
    report = HypothesisReport(unipotent, relations.ok, distinct, relations)
    logger.debug("hypotheses for g=%d m=%d: %s", t.g, t.m, report.first_failure() or "all hold")
    return report


# ---------------------------------------------------------------------------
# Results
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormalizationResult:
    """P with P^-1·L_j·P equal to the standard extended generators"""

    P: Matrix
    normalized: GeneratorSet
    corrections: list[dict[str, Fraction]] = field(default_factory=list)


def verify_certificate(t: RepresentationTuple, p: Matrix) -> bool:
    """Re-substitution: P^-1·L_j·P == standard for every j, checked as L_j·P == P·standard"""
    if p.shape != (t.m, t.m) or not p.is_invertible():
        return False
    return all(mat @ p == p @ std for mat, std in zip(t.matrices, generator_set(t.g, t.m).as_tuple()))


# ---------------------------------------------------------------------------
# The basis-building workflow
# ---------------------------------------------------------------------------


class NormalizationState(TypedDict, total=False):
    g: int
    m: int
    matrices: list[Matrix]
    eigenspaces: list[Subspace]
    step: int                    # k: pairs already normalized
    finished: list[Vector]       # v_1..v_2k
    w: Subspace                  # W_k
    w_next: Subspace             # W_{k+1}
    frame: Matrix                # columns [finished, v, u, tail]
    frame_inv: Matrix
    corrections: list[dict[str, Fraction]]
    P: Matrix


def _first_outside(space: Subspace, other: Subspace) -> Vector:
    return next(v for v in space.vectors if not other.contains(v))


def _in_frame(state: NormalizationState, j: int) -> Matrix:
    """Matrix of L_j in the working basis"""
    return state["frame_inv"] @ state["matrices"][j - 1] @ state["frame"]


def _column_update(m: int, col: int, entries: dict[int, Fraction]) -> Matrix:
    """Identity with column `col` replaced by Σ entries[r]·e_r"""
    grid = [[Fraction(int(r == c)) for c in range(m)] for r in range(m)]
    grid[col][col] = Fraction(0)
    for r, value in entries.items():
        grid[r][col] = value
    return Matrix.of(grid)


def _fits_column_shape(matrix: Matrix, special: int, top: int) -> bool:
    """Identity except in column `special`, which has zeros above row `top` and 1 on the diagonal"""
    for r in range(matrix.rows):
        for c in range(matrix.cols):
            value = matrix.entries[r][c]
            if c == special:
                if r < top and value != 0:
                    return False
                if r == special and value != 1:
                    return False
            elif value != (1 if r == c else 0):
                return False
    return True


def eigenspaces_node(state: NormalizationState) -> NormalizationState:
    """Step 0: E^j = ker(L_j - I) for every j"""
    eye = identity(state["m"])
    spaces = [kernel(mat - eye) for mat in state["matrices"]]
    logger.debug("eigenspace dimensions %s", [e.dim for e in spaces])
    return {
        "eigenspaces": spaces,
        "step": 0,
        "finished": [],
        "w": Subspace.full(state["m"]),
        "corrections": [],
    }


def split_pair_node(state: NormalizationState) -> NormalizationState:
    """Split W_k by E^{2k+1} and E^{2k+2}; pick one vector from each side and open a new frame"""
    k, w = state["step"], state["w"]
    first = intersect(w, state["eigenspaces"][2 * k])
    second = intersect(w, state["eigenspaces"][2 * k + 1])
    if first.dim != w.dim - 1 or second.dim != w.dim - 1:
        raise DegenerateStep(k, f"W_{k} is not cut to codimension one by E^{2 * k + 1} and E^{2 * k + 2}")
    if first == second:
        raise DegenerateStep(k, f"W_{k} ∩ E^{2 * k + 1} equals W_{k} ∩ E^{2 * k + 2}")
    w_next = intersect(first, second)
    frame = Matrix.from_columns(
        state["finished"] + [_first_outside(first, second), _first_outside(second, first)] + w_next.vectors
    )
    try:
        frame_inv = frame.inverse()
    except SingularMatrixError:
        raise DegenerateStep(k, "the finished vectors and W_k do not span the whole space") from None
    logger.debug("step %d: dim W_k=%d, dim W_k+1=%d", k, w.dim, w_next.dim)
    return {"w_next": w_next, "frame": frame, "frame_inv": frame_inv}


def correct_a_node(state: NormalizationState) -> NormalizationState:
    """Read x from L_{2k+1} and replace v by x·v + Σ x_j w_j"""
    k, pos = state["step"], 2 * state["step"]
    local = _in_frame(state, 2 * k + 1)
    if not _fits_column_shape(local, pos + 1, pos):
        raise DegenerateStep(k, f"L{2 * k + 1} does not fix the finished vectors and W_{k}")
    x = local.entries[pos][pos + 1]
    if x == 0:
        raise DegenerateStep(k, f"x = 0 for L{2 * k + 1}")
    tail = {r: local.entries[r][pos + 1] for r in range(pos + 2, state["m"])}
    step = _column_update(state["m"], pos, {pos: x, **tail})
    step_inv = _column_update(state["m"], pos, {pos: 1 / x, **{r: -c / x for r, c in tail.items()}})
    logger.debug("step %d: x = %s", k, x)
    return {
        "frame": state["frame"] @ step,
        "frame_inv": step_inv @ state["frame_inv"],
        "corrections": state["corrections"] + [{"x": x}],
    }


def correct_b_node(state: NormalizationState) -> NormalizationState:
    """Read y from L_{2k+2}, require y = -1 and replace u by u - Σ y_j w_j"""
    k, pos = state["step"], 2 * state["step"]
    local = _in_frame(state, 2 * k + 2)
    if not _fits_column_shape(local, pos, pos):
        raise DegenerateStep(k, f"L{2 * k + 2} does not fix the finished vectors and W_{k}")
    y = local.entries[pos + 1][pos]
    if y != -1:
        raise DegenerateStep(k, f"y = {y} for L{2 * k + 2}, expected -1")
    tail = {r: local.entries[r][pos] for r in range(pos + 2, state["m"])}
    step = _column_update(state["m"], pos + 1, {pos + 1: Fraction(1), **{r: -c for r, c in tail.items()}})
    step_inv = _column_update(state["m"], pos + 1, {pos + 1: Fraction(1), **tail})
    frame = state["frame"] @ step
    corrections = state["corrections"][:-1] + [{**state["corrections"][-1], "y": y}]
    return {
        "finished": frame.columns()[:pos + 2],
        "frame": frame,
        "frame_inv": step_inv @ state["frame_inv"],
        "w": state["w_next"],
        "step": k + 1,
        "corrections": corrections,
    }


def route_next_pair(state: NormalizationState) -> Literal["split_pair", "assemble"]:
    return "split_pair" if state["step"] < state["g"] else "assemble"


def assemble_node(state: NormalizationState) -> NormalizationState:
    """P is the final frame, checked against every standard generator"""
    p = state["frame"]
    t = RepresentationTuple(state["g"], state["m"], tuple(state["matrices"]))
    if not verify_certificate(t, p):
        raise DegenerateStep(state["g"], "re-substitution of the assembled basis failed")
    return {"P": p}


@lru_cache(maxsize=1)
def normalization_engine():
    """Compile the workflow once: eigenspaces → (split → correct a → correct b)^g → assemble"""
    workflow = StateGraph(NormalizationState)
    workflow.add_node("eigenspaces", eigenspaces_node)
    workflow.add_node("split_pair", split_pair_node)
    workflow.add_node("correct_a", correct_a_node)
    workflow.add_node("correct_b", correct_b_node)
    workflow.add_node("assemble", assemble_node)

    workflow.add_edge(START, "eigenspaces")
    workflow.add_edge("eigenspaces", "split_pair")
    workflow.add_edge("split_pair", "correct_a")
    workflow.add_edge("correct_a", "correct_b")
    workflow.add_conditional_edges(
        "correct_b",
        route_next_pair,
        {"split_pair": "split_pair", "assemble": "assemble"},
    )
    workflow.add_edge("assemble", END)
    return workflow.compile()


def _run_engine(t: RepresentationTuple) -> NormalizationResult:
    limit = max(get_settings().graph_recursion_limit, 3 * t.g + 10)
    final = normalization_engine().invoke(
        {"g": t.g, "m": t.m, "matrices": list(t.matrices)},
        config={"recursion_limit": limit},
    )
    logger.info("normalized g=%d m=%d tuple", t.g, t.m)
    return NormalizationResult(final["P"], generator_set(t.g, t.m), final["corrections"])


def normalize(t: RepresentationTuple) -> NormalizationResult:
    """Find P with P^-1·L_{2i-1}·P = Ã_i and P^-1·L_{2i}·P = B̃_i"""
    report = verify_hypotheses(t)
    if not report.overall:
        raise HypothesisViolation(report.first_failure() or "unknown", report)
    return _run_engine(t)


# ---------------------------------------------------------------------------
# Recognition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Trivial:
    kind: Literal["Trivial"] = "Trivial"


@dataclass(frozen=True)
class ConjugateToStandard:
    P: Matrix
    result: NormalizationResult
    kind: Literal["ConjugateToStandard"] = "ConjugateToStandard"


@dataclass(frozen=True)
class Unrecognized:
    report: HypothesisReport
    reason: str
    kind: Literal["Unrecognized"] = "Unrecognized"


Recognition = Trivial | ConjugateToStandard | Unrecognized


def recognize(t: RepresentationTuple) -> Recognition:
    """Trivial, conjugate to the standard symplectic tuple (with P), or neither"""
    if t.m != 2 * t.g:
        raise DimensionMismatch(f"recognition needs m = 2g = {2 * t.g}, got m = {t.m}")
    if all(mat.is_identity() for mat in t.matrices):
        return Trivial()
    report = verify_hypotheses(t)
    if not report.overall:
        return Unrecognized(report, report.first_failure() or "unknown")
    try:
        result = _run_engine(t)
    except DegenerateStep as exc:
        return Unrecognized(report, str(exc))
    return ConjugateToStandard(result.P, result)


def conjugator_ambiguity(p1: Matrix, p2: Matrix, g: int, m: int) -> bool:
    """True iff P1^-1·P2 commutes with every extended standard generator"""
    if p1.shape != (m, m) or p2.shape != (m, m):
        raise DimensionMismatch(f"conjugators must be {m}x{m}")
    if not p2.is_invertible():
        raise SingularMatrixError("second conjugator is not invertible")
    q = p1.inverse() @ p2
    return all(q @ s == s @ q for s in generator_set(g, m).as_tuple())
