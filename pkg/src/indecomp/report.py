"""Report objects for the CLI sweeps, with lossless JSON round-tripping."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

REPORT_VERSION = 1


@dataclass(frozen=True)
class ResultRow:
    spec: str
    family: str
    order: int
    classifier: dict
    oracle: bool
    agree: bool


@dataclass
class VerificationReport:
    corpus_description: str
    groups_checked: int
    agreements: int
    disagreements: list[tuple[str, str, str]]
    per_family_counts: dict[str, int]
    elapsed_ms: float
    results: list[ResultRow] = field(default_factory=list)
    partial: bool = False

    def to_json_dict(self) -> dict:
        return {
            "report_version": REPORT_VERSION,
            "corpus": self.corpus_description,
            "groups_checked": self.groups_checked,
            "agreements": self.agreements,
            "disagreements": [list(d) for d in self.disagreements],
            "per_family_counts": dict(self.per_family_counts),
            "elapsed_ms": self.elapsed_ms,
            "partial": self.partial,
            "results": [asdict(r) for r in self.results],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "VerificationReport":
        if data.get("report_version") != REPORT_VERSION:
            raise ValueError(f"unsupported report version {data.get('report_version')}")
        return cls(
            corpus_description=data["corpus"],
            groups_checked=data["groups_checked"],
            agreements=data["agreements"],
            disagreements=[tuple(d) for d in data["disagreements"]],
            per_family_counts=dict(data["per_family_counts"]),
            elapsed_ms=data["elapsed_ms"],
            results=[ResultRow(**r) for r in data["results"]],
            partial=data["partial"],
        )

    def render_text(self) -> str:
        lines = [
            f"corpus: {self.corpus_description}",
            f"groups checked: {self.groups_checked}",
            f"agreements: {self.agreements}",
            f"disagreements: {len(self.disagreements)}",
        ]
        for spec, clf, oracle in self.disagreements:
            lines.append(f"  DISAGREE {spec}: classifier={clf} oracle={oracle}")
        fams = ", ".join(f"{k}={v}" for k, v in sorted(self.per_family_counts.items()))
        lines.append(f"per-family counts: {fams}")
        if self.partial:
            lines.append("NOTE: partial report (requested bound exceeded the cap)")
        lines.append(f"elapsed: {self.elapsed_ms:.0f} ms")
        return "\n".join(lines)


@dataclass(frozen=True)
class CSARow:
    spec: str
    family: str
    order: int
    abelian: bool
    csa: bool
    witness: dict | None
    witness_revalidated: bool | None


@dataclass
class CSAReport:
    corpus_description: str
    groups_checked: int
    abelian_count: int
    abelian_csa_count: int
    non_abelian_csa: list[str]
    elapsed_ms: float
    results: list[CSARow] = field(default_factory=list)
    partial: bool = False

    def to_json_dict(self) -> dict:
        return {
            "report_version": REPORT_VERSION,
            "corpus": self.corpus_description,
            "groups_checked": self.groups_checked,
            "abelian_count": self.abelian_count,
            "abelian_csa_count": self.abelian_csa_count,
            "non_abelian_csa": list(self.non_abelian_csa),
            "elapsed_ms": self.elapsed_ms,
            "partial": self.partial,
            "results": [asdict(r) for r in self.results],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CSAReport":
        if data.get("report_version") != REPORT_VERSION:
            raise ValueError(f"unsupported report version {data.get('report_version')}")
        return cls(
            corpus_description=data["corpus"],
            groups_checked=data["groups_checked"],
            abelian_count=data["abelian_count"],
            abelian_csa_count=data["abelian_csa_count"],
            non_abelian_csa=list(data["non_abelian_csa"]),
            elapsed_ms=data["elapsed_ms"],
            results=[CSARow(**r) for r in data["results"]],
            partial=data["partial"],
        )

    def render_text(self) -> str:
        lines = [
            f"corpus: {self.corpus_description}",
            f"groups checked: {self.groups_checked}",
            f"abelian groups (all must be CSA): {self.abelian_csa_count}/{self.abelian_count}",
            f"non-abelian CSA groups found: {len(self.non_abelian_csa)}",
        ]
        for spec in self.non_abelian_csa:
            lines.append(f"  UNEXPECTED CSA: {spec}")
        if self.partial:
            lines.append("NOTE: partial report (requested bound exceeded the cap)")
        lines.append(f"elapsed: {self.elapsed_ms:.0f} ms")
        return "\n".join(lines)


@dataclass(frozen=True)
class SurveyClassRow:
    order: int
    count: int
    representative: str
    classification: dict


@dataclass
class SurveyReport:
    spec: str
    order: int
    subgroup_count: int
    normal_count: int
    conjugacy_class_count: int
    classes: list[SurveyClassRow]
    elapsed_ms: float

    def to_json_dict(self) -> dict:
        return {
            "report_version": REPORT_VERSION,
            "spec": self.spec,
            "order": self.order,
            "subgroup_count": self.subgroup_count,
            "normal_count": self.normal_count,
            "conjugacy_class_count": self.conjugacy_class_count,
            "classes": [asdict(c) for c in self.classes],
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SurveyReport":
        if data.get("report_version") != REPORT_VERSION:
            raise ValueError(f"unsupported report version {data.get('report_version')}")
        return cls(
            spec=data["spec"],
            order=data["order"],
            subgroup_count=data["subgroup_count"],
            normal_count=data["normal_count"],
            conjugacy_class_count=data["conjugacy_class_count"],
            classes=[SurveyClassRow(**c) for c in data["classes"]],
            elapsed_ms=data["elapsed_ms"],
        )

    def render_text(self) -> str:
        lines = [
            f"group: {self.spec} (order {self.order})",
            f"subgroups: {self.subgroup_count} "
            f"({self.normal_count} normal, {self.conjugacy_class_count} conjugacy classes)",
            "isomorphism classes of subgroups:",
        ]
        for c in self.classes:
            label = c.classification.get("variant", "?")
            lines.append(
                f"  order {c.order:>4} x{c.count:<3} {c.representative}: {label}"
            )
        lines.append(f"elapsed: {self.elapsed_ms:.0f} ms")
        return "\n".join(lines)
