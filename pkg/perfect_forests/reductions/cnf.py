"""CNF formulas with exactly three literals per clause."""

from collections.abc import Sequence
from dataclasses import dataclass

Assignment = tuple[bool, ...]


@dataclass(frozen=True)
class CnfInstance:
    """
    A 3-CNF formula over the variables 1..num_vars.

    Literals are signed variable numbers as in DIMACS: 3 is v3, -3 is not v3.
    """

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        """Check clause width and literal range."""
        if self.num_vars < 0:
            raise ValueError("variable count must be non-negative")
        clauses = tuple(tuple(int(lit) for lit in c) for c in self.clauses)
        for j, clause in enumerate(clauses, start=1):
            if len(clause) != 3:
                raise ValueError(f"clause {j} has {len(clause)} literals, expected 3")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"clause {j} literal {lit} outside 1..{self.num_vars}")
        object.__setattr__(self, "clauses", clauses)

    @classmethod
    def of(cls, num_vars: int, clauses: Sequence[Sequence[int]]) -> "CnfInstance":
        """Build an instance from plain lists."""
        return cls(num_vars, tuple((c[0], c[1], c[2]) for c in clauses))

    @property
    def num_clauses(self) -> int:
        """Number of clauses."""
        return len(self.clauses)

    def _check(self, assignment: Sequence[bool]) -> None:
        if len(assignment) != self.num_vars:
            raise ValueError(
                f"assignment has {len(assignment)} values for {self.num_vars} variables"
            )

    @staticmethod
    def literal_value(lit: int, assignment: Sequence[bool]) -> bool:
        """Return the truth value of a literal."""
        value = bool(assignment[abs(lit) - 1])
        return value if lit > 0 else not value

    def satisfied(self, assignment: Sequence[bool]) -> bool:
        """Return True if every clause has a true literal."""
        self._check(assignment)
        return all(
            any(self.literal_value(lit, assignment) for lit in clause)
            for clause in self.clauses
        )

    def nae_satisfied(self, assignment: Sequence[bool]) -> bool:
        """Return True if every clause has both a true and a false literal."""
        self._check(assignment)
        return all(
            len({self.literal_value(lit, assignment) for lit in clause}) == 2
            for clause in self.clauses
        )

    def degenerate_clauses(self) -> list[int]:
        """Return the 1-based indices of clauses whose three literals are identical."""
        return [j for j, c in enumerate(self.clauses, start=1) if len(set(c)) == 1]
