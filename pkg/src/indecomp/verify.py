"""Sweep drivers behind the CLI: classifier-vs-oracle verification, the
finite CSA sweep, and per-group lattice surveys."""

from __future__ import annotations

import time
from collections import Counter

from .core import FiniteGroup, Subgroup
from .corpus import ALL_FAMILIES, build_corpus
from .csa import is_csa
from .decomp import classify, is_strongly_indecomposable, label_is_positive, label_to_json
from .iso import _cheap_invariants, are_isomorphic
from .lattice import all_subgroups
from .report import (
    CSARow,
    CSAReport,
    ResultRow,
    SurveyClassRow,
    SurveyReport,
    VerificationReport,
)


def _corpus_description(max_order: int, families: tuple[str, ...] | None) -> str:
    fams = ",".join(families) if families is not None else ",".join(ALL_FAMILIES)
    return f"families[{fams}] deduped up to isomorphism, order <= {max_order}"


def run_verification(
    max_order: int, families: tuple[str, ...] | None = None
) -> VerificationReport:
    """Run classifier and brute-force oracle over the corpus; count agreement."""
    start = time.perf_counter()
    entries = build_corpus(max_order, families)
    rows: list[ResultRow] = []
    for entry in entries:
        label = classify(entry.group)
        oracle_ok, _ = is_strongly_indecomposable(entry.group)
        rows.append(
            ResultRow(
                spec=entry.spec,
                family=entry.family,
                order=entry.group.order,
                classifier=label_to_json(label),
                oracle=oracle_ok,
                agree=label_is_positive(label) == oracle_ok,
            )
        )
    disagreements = [
        (
            r.spec,
            r.classifier["variant"],
            "strongly-indecomposable" if r.oracle else "has-decomposable-subgroup",
        )
        for r in rows
        if not r.agree
    ]
    per_family = Counter(r.family for r in rows)
    elapsed = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        corpus_description=_corpus_description(max_order, families),
        groups_checked=len(rows),
        agreements=sum(1 for r in rows if r.agree),
        disagreements=disagreements,
        per_family_counts=dict(sorted(per_family.items())),
        elapsed_ms=elapsed,
        results=rows,
    )


def revalidate_csa_witness(G: FiniteGroup, A: Subgroup, g: int) -> bool:
    """Re-check a malnormality violation from the raw table, independent of
    the kernel code paths: A abelian, g outside A, A meets gAg^-1 nontrivially."""
    elems = A.elements()
    table = G.table
    for x in elems:
        for y in elems:
            if table[x, y] != table[y, x]:
                return False
    if g in A:
        return False
    ginv = G.inv(g)
    conj = {int(table[int(table[g, h]), ginv]) for h in elems}
    overlap = conj & set(elems)
    return overlap != {0}


def run_csa_check(
    max_order: int, families: tuple[str, ...] | None = None
) -> CSAReport:
    """Sweep the corpus for CSA groups; a non-abelian hit would disprove the
    expectation that none exist, so every witness is revalidated independently."""
    start = time.perf_counter()
    entries = build_corpus(max_order, families)
    rows: list[CSARow] = []
    for entry in entries:
        G = entry.group
        abelian = G.is_abelian()
        csa_ok, witness = is_csa(G)
        wit_dict = None
        revalidated = None
        if not csa_ok:
            A, g = witness
            revalidated = revalidate_csa_witness(G, A, g)
            wit_dict = {
                "maximal_abelian_order": A.size,
                "conjugator": g,
                "revalidated": revalidated,
            }
        rows.append(
            CSARow(
                spec=entry.spec,
                family=entry.family,
                order=G.order,
                abelian=abelian,
                csa=csa_ok,
                witness=wit_dict,
                witness_revalidated=revalidated,
            )
        )
    non_abelian_csa = [r.spec for r in rows if r.csa and not r.abelian]
    elapsed = (time.perf_counter() - start) * 1000.0
    return CSAReport(
        corpus_description=_corpus_description(max_order, families),
        groups_checked=len(rows),
        abelian_count=sum(1 for r in rows if r.abelian),
        abelian_csa_count=sum(1 for r in rows if r.abelian and r.csa),
        non_abelian_csa=non_abelian_csa,
        elapsed_ms=elapsed,
        results=rows,
    )


def run_survey(G: FiniteGroup, spec: str) -> SurveyReport:
    """Enumerate the subgroup lattice and classify subgroups up to isomorphism."""
    start = time.perf_counter()
    lat = all_subgroups(G)
    reps: list[tuple[FiniteGroup, int, int]] = []  # (group, count, first index)
    buckets: dict[tuple, list[int]] = {}
    for idx, sub in enumerate(lat.subgroups):
        as_group = sub.as_group()
        inv = _cheap_invariants(as_group)
        found = False
        for rep_pos in buckets.get(inv, []):
            if are_isomorphic(reps[rep_pos][0], as_group) is not None:
                reps[rep_pos] = (reps[rep_pos][0], reps[rep_pos][1] + 1, reps[rep_pos][2])
                found = True
                break
        if not found:
            buckets.setdefault(inv, []).append(len(reps))
            reps.append((as_group, 1, idx))
    classes = [
        SurveyClassRow(
            order=rep.order,
            count=count,
            representative=f"{spec}[{first}]",
            classification=label_to_json(classify(rep)),
        )
        for rep, count, first in reps
    ]
    classes.sort(key=lambda c: (c.order, c.representative))
    elapsed = (time.perf_counter() - start) * 1000.0
    return SurveyReport(
        spec=spec,
        order=G.order,
        subgroup_count=len(lat.subgroups),
        normal_count=sum(lat.normal_flags),
        conjugacy_class_count=len(set(lat.conjugacy_class_id)),
        classes=classes,
        elapsed_ms=elapsed,
    )
