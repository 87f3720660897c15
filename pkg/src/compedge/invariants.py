"""Closed-form predictions for complementary edge ideals, checked against the oracle.

The formula layer classifies a graph (tree, disconnected forest, complete,
other) and predicts height, Cohen-Macaulayness, projective dimension and
regularity of I_c(G) from the classification alone. The licci verdict is a
pure graph predicate: forests and the triangle are licci, nothing else is.

Two known tensions are flagged rather than silently resolved:

* complete graphs: the literal exact-characterization statement would put
  K_n in the pd = 1 class, but height 3 together with Cohen-Macaulayness
  forces pd(I) = 2; the prediction uses 2 and carries a note.
* isolated vertices: every generator of I_c(G) is divisible by the variables
  of the isolated vertices, so height drops to 1 and the closed forms above
  stop applying; predictions carry a note and the oracle adjudicates.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import SimpleGraph, connected_components, is_complete, is_forest
from .homology import Field, hochster_betti, reg_pd
from .ideals import (SquarefreeIdeal, alexander_dual, complementary_edge_ideal, height,
                     has_linear_quotients)
from . import homology

NOTE_COMPLETE_PD = "complete_pd_adjusted"
NOTE_ISOLATED = "isolated_vertices_outside_hypotheses"

REASON_FOREST = "forest"
REASON_K3 = "K3"
REASON_COMPLETE = "complete_n_ge_4"
REASON_CYCLE = "contains_cycle_not_complete"


@dataclass(frozen=True)
class LicciVerdict:
    """Whether the localized ideal is in the linkage class of a complete intersection."""

    licci: bool
    reason: str

    def to_json_dict(self) -> dict:
        return {"licci": self.licci, "reason": self.reason}


@dataclass(frozen=True)
class InvariantReport:
    """Formula-layer predictions for one graph."""

    graph_class: str
    height: int
    cohen_macaulay: bool
    pd_ideal: int
    reg_ideal: tuple[int, int]
    indeg: int
    licci: bool
    notes: tuple[str, ...]
    provenance: tuple[tuple[str, str], ...]

    def to_json_dict(self) -> dict:
        lo, hi = self.reg_ideal
        return {
            "graph_class": self.graph_class,
            "height": self.height,
            "cohen_macaulay": self.cohen_macaulay,
            "pd_ideal": self.pd_ideal,
            "reg_ideal": lo if lo == hi else [lo, hi],
            "indeg": self.indeg,
            "licci": self.licci,
            "notes": list(self.notes),
            "provenance": {k: v for k, v in self.provenance},
        }


@dataclass(frozen=True)
class OracleInvariants:
    """Measured values from the homology oracle and the cover enumeration."""

    field: Field
    height: int
    reg_s_mod_i: int
    pd_s_mod_i: int
    reg_ideal: int
    pd_ideal: int
    cohen_macaulay: bool

    def to_json_dict(self) -> dict:
        return {
            "field": self.field.value,
            "height": self.height,
            "reg_s_mod_i": self.reg_s_mod_i,
            "pd_s_mod_i": self.pd_s_mod_i,
            "reg_ideal": self.reg_ideal,
            "pd_ideal": self.pd_ideal,
            "cohen_macaulay": self.cohen_macaulay,
        }


@dataclass(frozen=True)
class DiscrepancyReport:
    """Prediction-vs-oracle mismatches for one graph; empty means full agreement."""

    graph: SimpleGraph
    field: Field
    mismatches: tuple[tuple[str, object, object], ...]

    @property
    def clean(self) -> bool:
        return not self.mismatches

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph.to_json_dict(),
            "field": self.field.value,
            "mismatches": [
                {"invariant": name, "predicted": _plain(pred), "oracle": _plain(orc)}
                for name, pred, orc in self.mismatches
            ],
        }


def _plain(value):
    if isinstance(value, tuple):
        return list(value)
    return value


def _require_admissible(graph: SimpleGraph) -> None:
    if graph.n < 3:
        raise ValueError(f"degenerate ambient: need at least 3 vertices, got {graph.n}")
    if graph.m == 0:
        raise ValueError("edgeless graph: the complementary edge ideal is zero")


def is_licci(graph: SimpleGraph) -> LicciVerdict:
    """Licci verdict for the localized complementary edge ideal.

    Complete graphs are decided before forests so the triangle gets its own
    reason; beyond K_3, completeness rules licci out, as does any cycle.
    """
    _require_admissible(graph)
    if is_complete(graph):
        if graph.n == 3:
            return LicciVerdict(True, REASON_K3)
        return LicciVerdict(False, REASON_COMPLETE)
    if is_forest(graph):
        return LicciVerdict(True, REASON_FOREST)
    return LicciVerdict(False, REASON_CYCLE)


def huneke_ulrich_check(reg_s_mod_i: int, height_: int, indeg: int) -> bool:
    """Necessary licci condition: reg(S/I) >= (height - 1) * (indeg - 1)."""
    return reg_s_mod_i >= (height_ - 1) * (indeg - 1)


def predict_invariants(graph: SimpleGraph) -> InvariantReport:
    """Classification-driven predictions for height, CM, pd and reg of I_c(G)."""
    _require_admissible(graph)
    n = graph.n
    indeg = n - 2
    notes: list[str] = []
    prov: list[tuple[str, str]] = []
    verdict = is_licci(graph)
    if graph.isolated_vertices():
        notes.append(NOTE_ISOLATED)
    if is_complete(graph):
        graph_class = "complete"
        ht, cm = 3, True
        pd, reg = 2, (n - 2, n - 2)
        notes.append(NOTE_COMPLETE_PD)
        prov += [("height", "complete_height_rule"),
                 ("cohen_macaulay", "cm_iff_complete_or_forest"),
                 ("pd_ideal", "complete_pd_from_height_and_cm"),
                 ("reg_ideal", "complete_reg_rule")]
    elif is_forest(graph):
        connected = len(connected_components(graph)) == 1
        graph_class = "tree" if connected else "disconnected_forest"
        ht, cm, pd = 2, True, 1
        reg = (n - 2, n - 2) if connected else (n - 1, n - 1)
        prov += [("height", "non_complete_height_rule"),
                 ("cohen_macaulay", "cm_iff_complete_or_forest"),
                 ("pd_ideal", "forest_pd_rule"),
                 ("reg_ideal", "tree_reg_rule" if connected else "disconnected_forest_reg_rule")]
    else:
        graph_class = "other"
        ht, cm, pd = 2, False, 2
        reg = (n - 2, n - 1)
        prov += [("height", "non_complete_height_rule"),
                 ("cohen_macaulay", "cm_iff_complete_or_forest"),
                 ("pd_ideal", "non_cm_pd_rule"),
                 ("reg_ideal", "reg_bounds_rule")]
    prov.append(("licci", "licci_iff_forest_or_triangle"))
    return InvariantReport(graph_class, ht, cm, pd, reg, indeg, verdict.licci,
                           tuple(notes), tuple(prov))


def oracle_invariants(graph: SimpleGraph, field: Field = Field.GF2) -> OracleInvariants:
    """Measure height, reg, pd and Cohen-Macaulayness with the exact oracle."""
    _require_admissible(graph)
    ideal = complementary_edge_ideal(graph)
    table = hochster_betti(ideal, field)
    hom = reg_pd(table)
    ht = height(ideal)
    return OracleInvariants(field, ht, hom.reg_s_mod_i, hom.pd_s_mod_i,
                            hom.reg_ideal, hom.pd_ideal, hom.pd_s_mod_i == ht)


def cross_validate(graph: SimpleGraph, field: Field = Field.GF2) -> DiscrepancyReport:
    """Compare the formula layer against the oracle; reg uses interval containment."""
    predicted = predict_invariants(graph)
    oracle = oracle_invariants(graph, field)
    mismatches: list[tuple[str, object, object]] = []
    if predicted.height != oracle.height:
        mismatches.append(("height", predicted.height, oracle.height))
    if predicted.cohen_macaulay != oracle.cohen_macaulay:
        mismatches.append(("cohen_macaulay", predicted.cohen_macaulay, oracle.cohen_macaulay))
    if predicted.pd_ideal != oracle.pd_ideal:
        mismatches.append(("pd_ideal", predicted.pd_ideal, oracle.pd_ideal))
    lo, hi = predicted.reg_ideal
    if not (lo <= oracle.reg_ideal <= hi):
        mismatches.append(("reg_ideal", predicted.reg_ideal, oracle.reg_ideal))
    return DiscrepancyReport(graph, field, tuple(mismatches))


@dataclass(frozen=True)
class ImplicationSuite:
    """The five resolution-shape claims evaluated by the oracle for one graph.

    For a licci graph all five are asserted by the classification layer; a
    disconnected forest is known to break the last one (the primal ideal is
    generated in degree n-2 but has regularity n-1).
    """

    graph: SimpleGraph
    field: Field
    licci: LicciVerdict
    sequentially_cm: bool
    dual_componentwise_linear: bool
    dual_linear_quotients: str
    dual_linear_resolution: bool
    primal_linear_resolution: bool
    failed_claims: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph.to_json_dict(),
            "field": self.field.value,
            "licci": self.licci.to_json_dict(),
            "sequentially_cm": self.sequentially_cm,
            "dual_componentwise_linear": self.dual_componentwise_linear,
            "dual_linear_quotients": self.dual_linear_quotients,
            "dual_linear_resolution": self.dual_linear_resolution,
            "primal_linear_resolution": self.primal_linear_resolution,
            "failed_claims": list(self.failed_claims),
        }


def implication_suite(graph: SimpleGraph, field: Field = Field.GF2,
                      budget: int | None = None) -> ImplicationSuite:
    """Evaluate the five claims; failed_claims lists false ones on licci inputs."""
    _require_admissible(graph)
    verdict = is_licci(graph)
    ideal = complementary_edge_ideal(graph)
    dual = alexander_dual(ideal)
    dual_cl = homology.is_componentwise_linear(dual, field)
    seq_cm = dual_cl
    kwargs = {} if budget is None else {"budget": budget}
    lq = has_linear_quotients(dual, **kwargs)
    dual_lin = homology.has_linear_resolution(dual, field)
    primal_lin = homology.has_linear_resolution(ideal, field)
    failed = []
    if verdict.licci:
        if not seq_cm:
            failed.append("sequentially_cm")
        if not dual_cl:
            failed.append("dual_componentwise_linear")
        if lq.status == "no":
            failed.append("dual_linear_quotients")
        if not dual_lin:
            failed.append("dual_linear_resolution")
        if not primal_lin:
            failed.append("primal_linear_resolution")
    return ImplicationSuite(graph, field, verdict, seq_cm, dual_cl, lq.status,
                            dual_lin, primal_lin, tuple(failed))
