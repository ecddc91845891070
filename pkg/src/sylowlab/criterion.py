"""Solvability criteria in terms of Sylow counts, checked against the derived series.

Three hypotheses are evaluated on a group's v_p profile:

* ``thm11``  -- v_2(G) <= 4
* ``thm13``  -- v_p(G) <= p^2 for every odd prime p dividing |G|
* ``conj12`` -- v_p(G) <= p^2 - p + 1 for every odd prime p dividing |G|

Each predicts solvability.  A group satisfying a hypothesis but failing to
be solvable contradicts a proven result, so it raises
:class:`TheoremViolation` instead of being recorded.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import catalog
from .gstruct import is_solvable
from .numtheory import factorize
from .permcore import GeneratedGroup
from .sylow import DEFAULT_SEED, SylowReport, count_sylow

CRITERIA = ("thm11", "thm13", "conj12")

_VERDICT_SCHEMA = {
    "type": "object",
    "required": ["hypothesis_satisfied", "predicted_solvable", "actual_solvable", "consistent"],
    "properties": {
        "hypothesis_satisfied": {"type": "boolean"},
        "predicted_solvable": {"type": ["boolean", "null"]},
        "actual_solvable": {"type": "boolean"},
        "consistent": {"type": "boolean"},
    },
    "additionalProperties": False,
}

# JSON Schema of one group report; "verdicts" is present wherever verdicts are computed.
REPORT_SCHEMA = {
    "type": "object",
    "required": ["group", "order", "factorization", "profile"],
    "properties": {
        "group": {"type": "string"},
        "order": {"type": "integer", "minimum": 1},
        "factorization": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        },
        "profile": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["p", "a", "v_p", "normalizer_order"],
                "properties": {k: {"type": "integer"} for k in ("p", "a", "v_p", "normalizer_order")},
                "additionalProperties": False,
            },
        },
        "verdicts": {
            "type": "object",
            "required": list(CRITERIA),
            "properties": {c: _VERDICT_SCHEMA for c in CRITERIA},
            "additionalProperties": False,
        },
    },
}


class TheoremViolation(RuntimeError):
    """A verdict came out inconsistent; always an artifact bug."""


class ReplayError(RuntimeError):
    """A minimal simple family failed to violate a bound it must violate."""


@dataclass
class VpProfile:
    group: str
    order: int
    factorization: list
    entries: list  # SylowReport per prime divisor, ascending

    def v(self, p: int) -> int:
        for e in self.entries:
            if e.p == p:
                return e.v_p
        return 1

    def odd_entries(self) -> list:
        return [e for e in self.entries if e.p != 2]

    def as_dict(self) -> dict:
        return {"group": self.group, "order": self.order,
                "factorization": [list(pa) for pa in self.factorization],
                "profile": [e.as_dict() for e in self.entries]}


@dataclass
class CriterionVerdict:
    criterion: str
    hypothesis_satisfied: bool
    predicted_solvable: Optional[bool]
    actual_solvable: bool
    consistent: bool

    def as_dict(self) -> dict:
        return {"hypothesis_satisfied": self.hypothesis_satisfied,
                "predicted_solvable": self.predicted_solvable,
                "actual_solvable": self.actual_solvable,
                "consistent": self.consistent}


def vp_profile(G: GeneratedGroup, name: str = "G", seed=DEFAULT_SEED, **caps) -> VpProfile:
    n = G.order()
    fac = sorted(factorize(n).items()) if n > 1 else []
    entries = [count_sylow(G, p, seed=seed, **caps) for p, _ in fac]
    return VpProfile(name, n, fac, entries)


def _hypothesis(profile: VpProfile, criterion: str) -> bool:
    if criterion == "thm11":
        return profile.v(2) <= 4
    if criterion == "thm13":
        return all(e.v_p <= e.p ** 2 for e in profile.odd_entries())
    if criterion == "conj12":
        return all(e.v_p <= e.p ** 2 - e.p + 1 for e in profile.odd_entries())
    raise ValueError(f"unknown criterion {criterion!r}")


def _verdict(profile: VpProfile, criterion: str, solvable: bool) -> CriterionVerdict:
    hyp = _hypothesis(profile, criterion)
    verdict = CriterionVerdict(criterion, hyp, True if hyp else None, solvable,
                               (not hyp) or solvable)
    if not verdict.consistent:
        raise TheoremViolation(
            f"{criterion} hypothesis holds for {profile.group} but it is not solvable; "
            f"profile={profile.as_dict()}")
    return verdict


def _profile_and_solvable(G, profile, solvable, name):
    if profile is None:
        profile = vp_profile(G, name)
    if solvable is None:
        solvable = is_solvable(G)
    return profile, solvable


def check_theorem_1_1(G: GeneratedGroup, profile: VpProfile = None,
                      solvable: bool = None, name: str = "G") -> CriterionVerdict:
    profile, solvable = _profile_and_solvable(G, profile, solvable, name)
    return _verdict(profile, "thm11", solvable)


def check_theorem_1_3(G: GeneratedGroup, profile: VpProfile = None,
                      solvable: bool = None, name: str = "G") -> CriterionVerdict:
    profile, solvable = _profile_and_solvable(G, profile, solvable, name)
    return _verdict(profile, "thm13", solvable)


def check_conjecture_1_2(G: GeneratedGroup, profile: VpProfile = None,
                         solvable: bool = None, name: str = "G") -> CriterionVerdict:
    profile, solvable = _profile_and_solvable(G, profile, solvable, name)
    verdict = _verdict(profile, "conj12", solvable)
    if verdict.hypothesis_satisfied and not _hypothesis(profile, "thm13"):
        raise TheoremViolation(f"conj12 holds but thm13 fails for {profile.group}")
    return verdict


CHECKS = {"thm11": check_theorem_1_1, "thm13": check_theorem_1_3,
          "conj12": check_conjecture_1_2}


@dataclass
class ScanRow:
    profile: VpProfile
    verdicts: dict

    def as_dict(self) -> dict:
        d = self.profile.as_dict()
        d["verdicts"] = {k: v.as_dict() for k, v in self.verdicts.items()}
        return d

    def odd_bounds(self) -> dict:
        """Per odd prime: is v_p within p^2?  Report-only, for exploring which primes matter."""
        return {e.p: e.v_p <= e.p ** 2 for e in self.profile.odd_entries()}


def evaluate(G: GeneratedGroup, name: str, seed=DEFAULT_SEED, **caps) -> ScanRow:
    profile = vp_profile(G, name, seed=seed, **caps)
    solvable = is_solvable(G)
    verdicts = {c: CHECKS[c](G, profile=profile, solvable=solvable) for c in CRITERIA}
    return ScanRow(profile, verdicts)


def scan_corpus(groups, seed=DEFAULT_SEED, **caps) -> list[ScanRow]:
    """Evaluate ``(name, group)`` pairs in order; the first inconsistency aborts."""
    return [evaluate(G, name, seed=seed, **caps) for name, G in groups]


# -- replay of the minimal-simple contradictions ----------------------------

@dataclass
class ReplayRow:
    family: str
    group: str
    source: str  # "computed" or "formula"
    values: dict  # p -> v_p
    formula_values: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def thm11_violated(self) -> bool:
        return self.values.get(2, 1) > 4

    @property
    def thm13_violations(self) -> list:
        return [p for p, v in sorted(self.values.items()) if p != 2 and v > p * p]

    def as_dict(self) -> dict:
        return {"family": self.family, "group": self.group, "source": self.source,
                "values": {str(p): v for p, v in sorted(self.values.items())},
                "formula_values": {str(p): v for p, v in sorted(self.formula_values.items())},
                "thm11_violated": self.thm11_violated,
                "thm13_violated_at": self.thm13_violations,
                "notes": list(self.notes)}


def _computed_row(family, entry, seed, formula_values=None, notes=()):
    profile = vp_profile(entry.group, entry.name, seed=seed)
    values = {e.p: e.v_p for e in profile.entries}
    row = ReplayRow(family, entry.name, "computed", values, dict(formula_values or {}), list(notes))
    for p, v in row.formula_values.items():
        if values.get(p) != v:
            raise ReplayError(f"{entry.name}: computed v_{p} = {values.get(p)} but formula gives {v}")
    return row


def replay_contradictions(seed=DEFAULT_SEED) -> list[ReplayRow]:
    """Each minimal simple family, computed where buildable and by formula elsewhere.

    Every row must violate the odd-prime bound, and every computed row the
    v_2 <= 4 bound; otherwise :class:`ReplayError` is raised.
    """
    rows = []

    a5 = _computed_row("A5", catalog.alternating(5), seed)
    a5.notes.append(f"sharpness: v_2 = {a5.values[2]} = 4 + {a5.values[2] - 4}")
    rows.append(a5)

    rows.append(_computed_row("L2(2^p)", catalog.psl2(8), seed, {
        2: catalog.formula_v2_psl2_even(3),
        3: catalog.formula_vr_psl2_even(8, 3).realized,
        7: catalog.formula_vr_psl2_even(8, 7).realized}))
    q = 32
    rows.append(ReplayRow("L2(2^p)", "PSL(2,32)", "formula",
                          {2: catalog.formula_v2_psl2_even(5),
                           3: catalog.formula_vr_psl2_even(q, 3).realized,
                           11: catalog.formula_vr_psl2_even(q, 11).realized,
                           31: catalog.formula_vr_psl2_even(q, 31).realized}))

    pair27 = catalog.formula_v2_psl2_odd(27)
    row27 = _computed_row("L2(3^p)", catalog.psl2(27), seed, {3: catalog.formula_v3_psl2_3p(3)})
    pair27.realized = row27.values[2]
    row27.notes.append(f"v_2 candidates {pair27.candidates}, realized {pair27.realized}")
    row27.notes.append(f"normalizer of Sylow 3: {catalog.psl2_order(27) // row27.values[3]} = 27*26/2")
    rows.append(row27)
    q = 3 ** 5
    rows.append(ReplayRow("L2(3^p)", "PSL(2,243)", "formula",
                          {2: catalog.v2_psl2_odd_exact(q), 3: catalog.formula_v3_psl2_3p(5)}))

    for p in (7, 13):
        entry = catalog.psl2(p)
        formulas = {r: catalog.formula_vr_psl2_odd(p, r).realized
                    for r in sorted(factorize(p * p - 1)) if r != 2}
        row = _computed_row("L2(p)", entry, seed, formulas)
        pair = catalog.formula_v2_psl2_odd(p)
        pair.realized = row.values[2]
        row.notes.append(f"v_2 candidates {pair.candidates}, realized {pair.realized}"
                         + ("" if pair.realized_matches else " (not a candidate)"))
        if p % 5 != 2:
            row.notes.append(f"p = {p % 5} (mod 5): outside the stated congruence class")
        rows.append(row)
    rows.append(ReplayRow("L2(p)", "PSL(2,17)", "formula",
                          {2: catalog.v2_psl2_odd_exact(17),
                           3: catalog.formula_vr_psl2_odd(17, 3).realized,
                           17: 17 + 1}))

    rows.append(_computed_row("L3(3)", catalog.psl3_3(), seed, {2: 351, 3: 52}))

    sz8 = catalog.formula_suzuki(8)
    row = _computed_row("Sz(q)", catalog.suzuki_8(), seed, {2: sz8.v2, 5: sz8.v5})
    row.notes.append(f"|G| = {sz8.order}, |T| = {sz8.T_order}, v_5 = |G|/|T| = {sz8.v5}")
    rows.append(row)
    for q in (32, 128):
        sz = catalog.formula_suzuki(q)
        r = ReplayRow("Sz(q)", f"Sz({q})", "formula", {2: sz.v2, 5: sz.v5_exact},
                      {5: sz.v5})
        if sz.v5 != sz.v5_exact:
            r.notes.append(f"5 divides q + r + 1 = {sz.sylow5_torus_order}, not q - r + 1; "
                           f"|G|/4(q-r+1) = {sz.v5}, exact v_5 = {sz.v5_exact}")
        rows.append(r)

    for r in rows:
        if not r.thm13_violations:
            raise ReplayError(f"{r.group} satisfies v_p <= p^2 for every odd p: {r.values}")
        if not r.thm11_violated:
            raise ReplayError(f"{r.group} satisfies v_2 <= 4: {r.values}")
    return rows
