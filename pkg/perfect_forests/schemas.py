"""JSON documents written by the command line, all carrying `schema: 1`."""

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field

from perfect_forests.forest import ParityForest, Violation, even_degree_vertices, is_proper


class Document(BaseModel):
    """Base of every top-level document; serialize with `dump`."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: Literal[1] = Field(default=1, alias="schema")

    def dump(self) -> str:
        """Return the document as indented JSON with the `schema` key."""
        return self.model_dump_json(indent=2, by_alias=True)


class ForestReport(Document):
    """A forest answer."""

    edges: list[tuple[int, int]]
    size: int
    proper: bool
    even_degree_vertices: list[int]
    verified: bool | None = None

    @classmethod
    def of(cls, forest: ParityForest, verify: bool = False) -> "ForestReport":
        """Describe a forest, optionally recording a fresh verification."""
        return cls(
            edges=list(forest.edges),
            size=forest.size,
            proper=is_proper(forest),
            even_degree_vertices=even_degree_vertices(forest),
            verified=forest.ok if verify else None,
        )


class InfeasibleReport(Document):
    """A well-formed question with a negative answer."""

    feasible: Literal[False] = False
    reason: str


class ClassBReport(Document):
    """Membership in class B."""

    class_b: bool


class GadgetReport(Document):
    """A reduction graph with its vertex roles."""

    kind: str
    n: int
    edges: list[tuple[int, int]]
    roles: dict[str, int]
    params: dict[str, int]
    marked_edges: dict[str, tuple[int, int]] = {}


class OracleReport(Document):
    """A brute-force answer."""

    problem: str
    result: Any
    witness: Any = None


class CheckResult(BaseModel):
    """Outcome of one certification check."""

    name: str
    trials: int
    failures: int


class CertifyReport(Document):
    """Outcome of a certification run."""

    seed: int
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        """True when no check failed."""
        return all(c.failures == 0 for c in self.checks)


class ViolationReport(BaseModel):
    """The first failed forest invariant."""

    kind: str
    witness: list[int]
    message: str


class VerifyReport(Document):
    """Result of checking a forest file."""

    ok: bool
    violation: ViolationReport | None = None

    @classmethod
    def of(cls, violation: Violation | None) -> "VerifyReport":
        """Build the report for a verification outcome."""
        if violation is None:
            return cls(ok=True)
        return cls(
            ok=False,
            violation=ViolationReport(
                kind=str(violation.kind), witness=list(violation.witness), message=violation.message
            ),
        )
