from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_validator,
    model_validator,
)

from app.config import ADMISSIBLE_PRUNE_RULES, SearchSettings
from app.exceptions import ConfigError, ContractViolation
from app.graph.core import MAX_VERTICES, VertexSet


SCHEMA_VERSION = "critlab/1"


class LemmaId(str, Enum):
    """Stable identifiers of the executable lemma predicates"""

    DEG = "L-DEG"
    FORCE = "L-FORCE"
    AVOID = "L-AVOID"
    MISSNEIGH = "L-MISSNEIGH"
    CHROM = "L-CHROM"
    VDEG = "L-VDEG"
    OUTSIDE = "L-OUTSIDE"
    C5NBR = "L-C5NBR"
    CLAWDEG = "L-CLAWDEG"


LEMMA_ID_VALUES = tuple(lemma.value for lemma in LemmaId)


class InputMode(str, Enum):
    """Where the harness takes its graphs from"""

    INTERNAL = "internal"
    STREAM = "graph6-stream"


class FindingKind(str, Enum):
    LEMMA_FALSIFIED = "lemma-falsified"
    COUNTEREXAMPLE = "counterexample"


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


class Coloring(BaseModel):
    """Vertex colouring with colours 1..k; 0 marks an unassigned vertex."""

    model_config = ConfigDict(frozen=True)

    colors: Tuple[int, ...] = Field(..., description="Colour of each vertex, 0 if unassigned")
    k: int = Field(..., description="Palette size")

    @model_validator(mode="after")
    def _palette(self) -> "Coloring":
        if self.k < 0:
            raise ValueError(f"palette size must be non-negative, got {self.k}")
        for v, c in enumerate(self.colors):
            if not 0 <= c <= self.k:
                raise ValueError(f"vertex {v} has colour {c} outside 0..{self.k}")
        return self

    @property
    def n(self) -> int:
        return len(self.colors)

    def color_of(self, v: int) -> int:
        return self.colors[v]

    @property
    def domain(self) -> VertexSet:
        mask = 0
        for v, c in enumerate(self.colors):
            if c:
                mask |= 1 << v
        return mask

    @property
    def is_total(self) -> bool:
        return all(self.colors)

    def used_colors(self) -> List[int]:
        return sorted({c for c in self.colors if c})

    def num_colors(self) -> int:
        return len(self.used_colors())

    def color_class(self, c: int) -> VertexSet:
        mask = 0
        for v, color in enumerate(self.colors):
            if color == c:
                mask |= 1 << v
        return mask

    def lift(self, original: Sequence[int], n: int) -> "Coloring":
        """Map a colouring of a renumbered subgraph back onto n original vertices."""
        colors = [0] * n
        for new, old in enumerate(original):
            colors[old] = self.colors[new]
        return Coloring(colors=tuple(colors), k=self.k)


class ChiCertificate(BaseModel):
    chi: int = Field(..., description="Chromatic number")
    witness_coloring: Coloring = Field(..., description="A proper chi-colouring")
    lower_bound_clique: List[int] = Field(
        default_factory=list, description="Maximum clique used as the lower bound"
    )


class ColorPermutation(BaseModel):
    """A bijection on colours 1..k; ``perm[c - 1]`` is the image of colour c."""

    model_config = ConfigDict(frozen=True)

    perm: Tuple[int, ...]

    @field_validator("perm")
    @classmethod
    def _bijective(cls, perm: Tuple[int, ...]) -> Tuple[int, ...]:
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
        return perm

    @classmethod
    def identity(cls, k: int) -> "ColorPermutation":
        return cls(perm=tuple(range(1, k + 1)))

    @classmethod
    def from_cycle(cls, k: int, cycle: Sequence[int]) -> "ColorPermutation":
        """The cyclic permutation c_1 -> c_2 -> ... -> c_t -> c_1 fixing all other colours."""
        if len(set(cycle)) != len(cycle):
            raise ContractViolation(f"cycle {tuple(cycle)} repeats a colour")
        perm = list(range(1, k + 1))
        for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
            perm[a - 1] = b
        return cls(perm=tuple(perm))

    @property
    def k(self) -> int:
        return len(self.perm)

    def __call__(self, c: int) -> int:
        return self.perm[c - 1]

    def cycle_of(self, c: int) -> List[int]:
        cycle = [c]
        nxt = self(c)
        while nxt != c:
            cycle.append(nxt)
            nxt = self(nxt)
        return cycle


class KempeChain(BaseModel):
    root: int
    layers: List[List[int]] = Field(default_factory=list)
    members: List[int] = Field(default_factory=list)

    @property
    def member_set(self) -> VertexSet:
        mask = 0
        for v in self.members:
            mask |= 1 << v
        return mask


class ClauseResult(BaseModel):
    """Outcome of one universally quantified clause with its first counterexample."""

    holds: bool
    witness: Optional[List[int]] = None


class CriticalityReport(BaseModel):
    graph6: str
    l: int
    chi: int
    is_complete: bool
    has_kl: bool
    kl_witness: Optional[List[int]] = None
    vertex_critical: Optional[bool] = None
    vertex_witness: Optional[int] = None
    clique_drop: Optional[bool] = None
    clique_drop_witness: Optional[List[int]] = None
    clique_drop_residual_chi: Optional[int] = Field(
        None, description="χ(G - L) for the failing clique, a clique split witness"
    )
    verdict: bool


class Finding(BaseModel):
    """A machine-checked event that would contradict a proven statement"""

    kind: FindingKind
    source: str = Field(..., description="Lemma or theorem whose conclusion failed")
    graph6: str
    detail: Dict[str, Any] = Field(default_factory=dict)


class ExtractionResult(BaseModel):
    graph6: str = Field(..., description="The extracted subgraph")
    kept_vertices: List[int] = Field(..., description="Original indices of kept vertices")
    chi: int
    report: CriticalityReport
    finding: Optional[Finding] = None


class LemmaVerdict(BaseModel):
    lemma_id: LemmaId
    applicable: bool
    passed: bool
    witness: Optional[Dict[str, Any]] = None
    reason: Optional[str] = None
    mode: Optional[str] = None
    confirmed: Optional[bool] = Field(
        None, description="Whether a failing witness re-verified from raw graph data"
    )

    @property
    def vacuous(self) -> bool:
        return not self.applicable

    @classmethod
    def vacuous_verdict(cls, lemma_id: LemmaId, reason: str) -> "LemmaVerdict":
        return cls(lemma_id=lemma_id, applicable=False, passed=True, reason=reason)

    @classmethod
    def success(cls, lemma_id: LemmaId, mode: Optional[str] = None) -> "LemmaVerdict":
        return cls(lemma_id=lemma_id, applicable=True, passed=True, mode=mode)

    @classmethod
    def failure(
        cls, lemma_id: LemmaId, witness: Dict[str, Any], mode: Optional[str] = None
    ) -> "LemmaVerdict":
        return cls(lemma_id=lemma_id, applicable=True, passed=False, witness=witness, mode=mode)


class SearchConfig(BaseModel):
    l: int = Field(..., description="Clique order ℓ")
    n_max: int = Field(..., description="Largest vertex count scanned")
    require_claw_free: bool = False
    chi_min: Optional[int] = None
    chi_max: Optional[int] = None
    prune_rules: List[str] = Field(default_factory=lambda: list(ADMISSIBLE_PRUNE_RULES))
    worker_count: int = 1
    input_mode: InputMode = InputMode.INTERNAL
    batch_size: int = 256
    prune_audit_modulus: int = 100
    complete_audit_modulus: int = 1000
    stop_on_counterexample: bool = False
    progress: bool = False

    @model_validator(mode="after")
    def _invariants(self) -> "SearchConfig":
        if not 2 <= self.l <= self.n_max <= MAX_VERTICES:
            raise ValueError(
                f"need 2 <= l <= n_max <= {MAX_VERTICES}, got l={self.l}, n_max={self.n_max}"
            )
        unknown = sorted(set(self.prune_rules) - set(ADMISSIBLE_PRUNE_RULES))
        if unknown:
            raise ValueError(f"inadmissible prune rules: {unknown}")
        if self.chi_min is not None and self.chi_max is not None and self.chi_min > self.chi_max:
            raise ValueError(f"empty chromatic window {self.chi_min}..{self.chi_max}")
        if self.worker_count < 1 or self.batch_size < 1:
            raise ValueError("worker_count and batch_size must be at least 1")
        if self.prune_audit_modulus < 1 or self.complete_audit_modulus < 1:
            raise ValueError("audit moduli must be at least 1")
        return self

    @classmethod
    def create(cls, **values: Any) -> "SearchConfig":
        """Validate values, reporting invariant violations as ConfigError."""
        try:
            return cls(**values)
        except ValidationError as e:
            raise ConfigError(f"Invalid search configuration: {e}") from e

    @classmethod
    def from_settings(cls, settings: SearchSettings, **overrides: Any) -> "SearchConfig":
        values = {
            "l": settings.l,
            "n_max": settings.n_max,
            "prune_rules": list(settings.prune_rules),
            "worker_count": settings.workers,
            "batch_size": settings.batch_size,
            "prune_audit_modulus": settings.prune_audit_modulus,
            "complete_audit_modulus": settings.complete_audit_modulus,
            "stop_on_counterexample": settings.stop_on_counterexample,
            "progress": settings.progress,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls.create(**values)


class Counterexample(BaseModel):
    graph6: str
    report: CriticalityReport
    contradicts: List[str] = Field(
        default_factory=list, description="Proven results this graph would contradict"
    )


class AuditStats(BaseModel):
    pruned_sampled: int = 0
    pruned_violations: List[str] = Field(default_factory=list)
    complete_sampled: int = 0
    complete_violations: List[str] = Field(default_factory=list)

    def merge(self, other: "AuditStats") -> "AuditStats":
        return AuditStats(
            pruned_sampled=self.pruned_sampled + other.pruned_sampled,
            pruned_violations=sorted(self.pruned_violations + other.pruned_violations),
            complete_sampled=self.complete_sampled + other.complete_sampled,
            complete_violations=sorted(self.complete_violations + other.complete_violations),
        )


class SearchReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(SCHEMA_VERSION, alias="schema")
    config: SearchConfig
    graphs_scanned: int = 0
    scanned_by_order: Dict[int, int] = Field(default_factory=dict)
    pruned_by_rule: Dict[str, int] = Field(default_factory=dict)
    skipped: Dict[str, int] = Field(default_factory=dict)
    complete_criticals: int = 0
    complete_orders: List[int] = Field(default_factory=list)
    criticals_found: int = 0
    all_critical_complete: bool = True
    counterexamples: List[Counterexample] = Field(default_factory=list)
    audit: AuditStats = Field(default_factory=AuditStats)
    cancelled: bool = False
    wall_time: float = 0.0


class LemmaTally(BaseModel):
    applicable: int = 0
    passed: int = 0
    failed: int = 0
    vacuous: int = 0
    unconfirmed: int = 0

    def record(self, verdict: LemmaVerdict) -> None:
        if not verdict.applicable:
            self.vacuous += 1
            return
        self.applicable += 1
        if verdict.passed:
            self.passed += 1
        else:
            self.failed += 1
            if verdict.confirmed is False:
                self.unconfirmed += 1

    def merge(self, other: "LemmaTally") -> "LemmaTally":
        return LemmaTally(
            applicable=self.applicable + other.applicable,
            passed=self.passed + other.passed,
            failed=self.failed + other.failed,
            vacuous=self.vacuous + other.vacuous,
            unconfirmed=self.unconfirmed + other.unconfirmed,
        )


class LemmaFailure(BaseModel):
    graph6: str
    verdict: LemmaVerdict


class LemmaSweepRow(BaseModel):
    graph6: str
    verdicts: List[LemmaVerdict]


class LemmaSweepReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(SCHEMA_VERSION, alias="schema")
    config: Optional[SearchConfig] = None
    lemmas: List[LemmaId] = Field(default_factory=list)
    graphs_scanned: int = 0
    tallies: Dict[str, LemmaTally] = Field(default_factory=dict)
    failures: List[LemmaFailure] = Field(default_factory=list)
    rows: List[LemmaSweepRow] = Field(default_factory=list)
    wall_time: float = 0.0


class AnalysisReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(SCHEMA_VERSION, alias="schema")
    graph6: str
    n: int
    edges: int
    chi: int
    omega: int
    alpha: int
    claw_free: bool
    claw: Optional[List[int]] = Field(None, description="Centre first, then three leaves")
    criticality: CriticalityReport
    clique_split: Optional[List[int]] = Field(
        None, description="A K_l copy S with chi(G - S) > chi(G) - l"
    )


class ExtractionReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(SCHEMA_VERSION, alias="schema")
    source: str
    result: ExtractionResult


class KempePathReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(SCHEMA_VERSION, alias="schema")
    graph6: str
    clique: List[int]
    coloring: List[int]
    seq: List[int]
    x: int
    y: int
    path: Optional[List[int]] = None
    finding: Optional[Finding] = None

    @property
    def absent(self) -> bool:
        return self.path is None
