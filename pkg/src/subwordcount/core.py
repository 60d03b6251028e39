"""Domain types for exact pattern-occurrence counting problems.

A problem instance fixes an alphabet size q, a word length t, and a list
of patterns, each paired with the number of times it must occur.  Symbols
are plain integers in ``range(q)`` and patterns are tuples of symbols;
optional symbol names are cosmetic and never enter any computation.

Everything is immutable after construction and every function is pure, so
unrestricted concurrent use is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import overlap


class BudgetExceededError(RuntimeError):
    """An oracle refused an instance because its work bound was exceeded."""


class NotApplicableError(ValueError):
    """The closed form was asked for an instance outside its domain.

    Carries the ``ValidationReport`` that explains which patterns
    self-intersect and which pairs can overlap.
    """

    def __init__(self, report: "ValidationReport"):
        problems = []
        flagged = [i for i, f in enumerate(report.per_pattern_self_intersection) if f]
        if flagged:
            problems.append(f"self-intersecting patterns at {flagged}")
        if report.cross_overlap_pairs:
            problems.append(f"overlapping pattern pairs {list(report.cross_overlap_pairs)}")
        super().__init__("closed form not applicable: " + "; ".join(problems))
        self.report = report


@dataclass(frozen=True)
class Pattern:
    """A nonempty sequence of symbol indices."""

    symbols: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise ValueError("pattern must be nonempty")
        for s in self.symbols:
            if not isinstance(s, int) or isinstance(s, bool) or s < 0:
                raise ValueError(f"pattern symbols must be nonnegative integers, got {s!r}")

    @property
    def length(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class PatternSpec:
    """A pattern together with its required exact occurrence count."""

    pattern: Pattern
    required_count: int

    def __post_init__(self):
        if not isinstance(self.pattern, Pattern):
            object.__setattr__(self, "pattern", Pattern(tuple(self.pattern)))
        if self.required_count < 0:
            raise ValueError("required_count must be >= 0")


@dataclass(frozen=True)
class ProblemInstance:
    """One counting problem: alphabet, word length, pattern requirements."""

    alphabet_size: int
    word_length: int
    specs: tuple[PatternSpec, ...]
    symbol_names: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "specs", tuple(self.specs))
        if self.alphabet_size < 2:
            raise ValueError("alphabet_size must be >= 2")
        if self.word_length < 0:
            raise ValueError("word_length must be >= 0")
        if not self.specs:
            raise ValueError("at least one pattern spec is required")
        seen: set[tuple[int, ...]] = set()
        for spec in self.specs:
            if not isinstance(spec, PatternSpec):
                raise TypeError(f"specs must contain PatternSpec, got {spec!r}")
            if max(spec.pattern.symbols) >= self.alphabet_size:
                raise ValueError(
                    f"pattern {spec.pattern.symbols} uses symbols outside the "
                    f"{self.alphabet_size}-symbol alphabet"
                )
            if spec.pattern.symbols in seen:
                raise ValueError(f"duplicate pattern {spec.pattern.symbols}")
            seen.add(spec.pattern.symbols)
        if self.symbol_names is not None:
            names = tuple(self.symbol_names)
            object.__setattr__(self, "symbol_names", names)
            if len(names) != self.alphabet_size:
                raise ValueError("symbol_names must list one name per alphabet symbol")
            if any(not isinstance(n, str) or not n for n in names):
                raise ValueError("symbol names must be nonempty strings")
            if len(set(names)) != len(names):
                raise ValueError("symbol names must be distinct")

    @classmethod
    def from_pairs(
        cls,
        alphabet_size: int,
        word_length: int,
        pairs: Iterable[tuple[Sequence[int], int]],
        symbol_names: Sequence[str] | None = None,
    ) -> "ProblemInstance":
        """Build an instance from (symbol sequence, required count) pairs."""
        specs = tuple(PatternSpec(Pattern(tuple(p)), x) for p, x in pairs)
        names = tuple(symbol_names) if symbol_names is not None else None
        return cls(alphabet_size, word_length, specs, names)

    @property
    def pattern_count(self) -> int:
        return len(self.specs)

    @property
    def patterns(self) -> tuple[Pattern, ...]:
        return tuple(spec.pattern for spec in self.specs)

    @property
    def pattern_lengths(self) -> tuple[int, ...]:
        return tuple(spec.pattern.length for spec in self.specs)

    @property
    def required_counts(self) -> tuple[int, ...]:
        return tuple(spec.required_count for spec in self.specs)

    @property
    def minimum_occupancy(self) -> int:
        """Positions consumed when every pattern occurs its required number
        of times.  Larger than word_length means the count is 0, which is
        not an error."""
        return sum(s.pattern.length * s.required_count for s in self.specs)


@dataclass(frozen=True)
class CountBreakdown:
    """Exact total plus the signed value of every summation term.

    ``terms`` holds one entry per feasible copy-count tuple, in
    lexicographic order; the total is their exact integer sum.
    """

    total: int
    terms: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "terms", tuple((tuple(index), value) for index, value in self.terms)
        )
        if self.total != sum(value for _, value in self.terms):
            raise ValueError("total does not equal the sum of the terms")
        if self.total < 0:
            raise ValueError("negative total: formula applied outside its domain")

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[tuple[int, ...], int]]) -> "CountBreakdown":
        terms = tuple(terms)
        return cls(sum(value for _, value in terms), terms)


@dataclass(frozen=True)
class ValidationReport:
    """Applicability findings for one instance.

    The closed form applies exactly when no pattern self-intersects and no
    pair of distinct patterns can overlap.  Infeasibly large minimum
    occupancy is deliberately not flagged: the formulas return 0 there.
    """

    per_pattern_self_intersection: tuple[bool, ...]
    cross_overlap_pairs: tuple[tuple[int, int], ...]
    is_formula_applicable: bool


def validate_instance(instance: ProblemInstance) -> ValidationReport:
    """Check whether the closed-form counts apply to ``instance``.

    Flags every pattern with a nonempty border, and every pair of distinct
    patterns whose occurrences could share a position in some word (one
    contains the other, or a nonempty proper suffix of one equals a prefix
    of the other).  Same-pattern adjacency is governed purely by the
    self-intersection flag, so pairs compare distinct patterns only.
    Validation never fails; it reports.
    """
    pats = [spec.pattern.symbols for spec in instance.specs]
    self_flags = tuple(overlap.is_self_intersecting(p) for p in pats)
    pairs = []
    for i in range(len(pats)):
        for j in range(i + 1, len(pats)):
            if overlap.can_overlap(pats[i], pats[j]):
                pairs.append((i, j))
    applicable = not any(self_flags) and not pairs
    return ValidationReport(self_flags, tuple(pairs), applicable)
