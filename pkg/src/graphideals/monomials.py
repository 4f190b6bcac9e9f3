"""Monomials and monomial ideals over a fixed list of variables.

A :class:`VariableContext` fixes the ambient polynomial ring: an ordered
tuple of distinct variable names (coefficients never enter any computation
here, so no base ring is represented).  A :class:`Monomial` is a dense
exponent vector over one context, and a :class:`MonomialIdeal` stores its
unique minimal generating set in graded-lexicographic order; construction
canonicalizes, so structural equality is ideal equality.

Conventions: the zero ideal is the empty generator list, the unit ideal is
generated by the monomial 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from . import kernels


class ContextMismatchError(ValueError):
    """Operands live over different variable contexts."""


def _same_context(a, b):
    if a.context != b.context:
        raise ContextMismatchError(
            f"operands use different variable contexts: {a.context.names} vs {b.context.names}"
        )


@dataclass(frozen=True)
class VariableContext:
    """An ordered tuple of distinct variable names."""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(names) < 1:
            raise ValueError("a context needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        for name in names:
            if not isinstance(name, str) or not name:
                raise ValueError("variable names must be nonempty strings")

    @classmethod
    def of_dimension(cls, dimension: int, prefix: str = "X") -> "VariableContext":
        """Context with the default names prefix1 .. prefixN."""
        if dimension < 1:
            raise ValueError("dimension must be at least 1")
        return cls(tuple(f"{prefix}{i + 1}" for i in range(dimension)))

    @property
    def dimension(self) -> int:
        return len(self.names)

    def monomial(self, exponents: Iterable[int]) -> "Monomial":
        return Monomial(self, tuple(exponents))

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.dimension)

    def variable(self, index: int, power: int = 1) -> "Monomial":
        """The pure power names[index]**power as a monomial."""
        exps = [0] * self.dimension
        exps[index] = power
        return Monomial(self, tuple(exps))

    def monomial_from_powers(self, powers: Mapping[int, int]) -> "Monomial":
        exps = [0] * self.dimension
        for i, e in powers.items():
            exps[i] = e
        return Monomial(self, tuple(exps))


@dataclass(frozen=True)
class Monomial:
    """A dense exponent vector over a context."""

    context: VariableContext
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) != self.context.dimension:
            raise ValueError(
                f"expected {self.context.dimension} exponents, got {len(exps)}"
            )
        for e in exps:
            if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                raise ValueError("exponents must be nonnegative integers")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_one(self) -> bool:
        return not any(self.exponents)

    def pure_power_variable(self) -> int | None:
        """Index of the single supporting variable, or None.

        The monomial 1 has empty support and returns None as well.
        """
        support = [i for i, e in enumerate(self.exponents) if e > 0]
        return support[0] if len(support) == 1 else None

    def __str__(self) -> str:
        if self.is_one:
            return "1"
        parts = []
        for name, e in zip(self.context.names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal held as its canonical minimal generating set.

    Any generators may be passed in; construction deduplicates, removes
    divisible generators and sorts graded-lexicographically.  The zero
    ideal has no generators, the unit ideal exactly the generator 1.
    """

    context: VariableContext
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.context != self.context:
                raise ContextMismatchError(
                    "all generators must share the ideal's context"
                )
        rows = tuple(kernels.minimalize([g.exponents for g in self.generators]))
        object.__setattr__(
            self, "generators", tuple(Monomial(self.context, r) for r in rows)
        )
        object.__setattr__(self, "_rows", rows)

    @classmethod
    def from_exponents(
        cls, context: VariableContext, rows: Iterable[Iterable[int]]
    ) -> "MonomialIdeal":
        return cls(context, tuple(Monomial(context, tuple(r)) for r in rows))

    @classmethod
    def zero(cls, context: VariableContext) -> "MonomialIdeal":
        return cls(context, ())

    @classmethod
    def unit(cls, context: VariableContext) -> "MonomialIdeal":
        return cls(context, (context.one(),))

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Generator exponent vectors in canonical order."""
        return self._rows

    @property
    def is_zero(self) -> bool:
        return not self._rows

    @property
    def is_unit(self) -> bool:
        return len(self._rows) == 1 and not any(self._rows[0])

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def divides(m: Monomial, n: Monomial) -> bool:
    """True when m divides n (componentwise on exponents)."""
    _same_context(m, n)
    return kernels.divides(m.exponents, n.exponents)


def lcm_monomial(m: Monomial, n: Monomial) -> Monomial:
    """Least common multiple: componentwise maximum of exponents."""
    _same_context(m, n)
    return Monomial(m.context, kernels.lcm(m.exponents, n.exponents))


def minimal_generators(
    context: VariableContext, generators: Iterable[Monomial]
) -> MonomialIdeal:
    """Canonicalize a generator list into an ideal."""
    return MonomialIdeal(context, tuple(generators))


def member(ideal: MonomialIdeal, m: Monomial) -> bool:
    """Ideal membership: some generator divides m.

    The zero ideal contains no monomials (every monomial is nonzero).
    """
    _same_context(ideal, m)
    return kernels.any_divides(ideal.rows, m.exponents)


def ideal_leq(smaller: MonomialIdeal, larger: MonomialIdeal) -> bool:
    """Containment smaller <= larger, decided on generators."""
    _same_context(smaller, larger)
    rows = larger.rows
    return all(kernels.any_divides(rows, r) for r in smaller.rows)


def ideal_eq(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """Equality of ideals; canonical forms make this structural."""
    _same_context(a, b)
    return a.rows == b.rows


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection, generated by pairwise lcms of the generators."""
    _same_context(a, b)
    return MonomialIdeal.from_exponents(
        a.context, kernels.intersect_rows(a.rows, b.rows)
    )


def m_radical(ideal: MonomialIdeal) -> MonomialIdeal:
    """Monomial radical: flatten every positive exponent to 1."""
    rows = [tuple(1 if e > 0 else 0 for e in r) for r in ideal.rows]
    return MonomialIdeal.from_exponents(ideal.context, rows)


def bracket_power(ideal: MonomialIdeal, a: int) -> MonomialIdeal:
    """The power that multiplies every generator exponent by a."""
    if not isinstance(a, int) or a < 1:
        raise ValueError("bracket power exponent must be a positive integer")
    rows = [tuple(e * a for e in r) for r in ideal.rows]
    return MonomialIdeal.from_exponents(ideal.context, rows)


def is_m_irreducible(ideal: MonomialIdeal) -> bool:
    """True when every minimal generator is a pure power of its own variable.

    Equivalently the ideal is generated by pure powers of pairwise distinct
    variables.  The zero ideal qualifies (empty set of pure powers); the
    unit ideal does not, since 1 is not a positive power of any variable.
    """
    seen = set()
    for r in ideal.rows:
        support = [i for i, e in enumerate(r) if e > 0]
        if len(support) != 1 or support[0] in seen:
            return False
        seen.add(support[0])
    return True


def polarize(
    ideal: MonomialIdeal,
) -> tuple[VariableContext, MonomialIdeal, dict[int, int]]:
    """Replace each power x**e by a product of e fresh squarefree variables.

    Returns (new context, squarefree ideal, substitution map).  The fresh
    variable for copy j of variable i is named ``{names[i]}_{j}`` with j
    starting at 1, and the substitution map sends each new variable index
    back to i, so :func:`depolarize` recovers the input exactly.  The zero
    and unit ideals are fixed points with an empty substitution map.
    """
    if ideal.is_zero or ideal.is_unit:
        return ideal.context, ideal, {}
    rows = ideal.rows
    dim = ideal.context.dimension
    copies = [max(r[i] for r in rows) for i in range(dim)]
    names: list[str] = []
    origin: dict[int, int] = {}
    offset = {}
    for i in range(dim):
        offset[i] = len(names)
        for j in range(copies[i]):
            origin[len(names)] = i
            names.append(f"{ideal.context.names[i]}_{j + 1}")
    polar_context = VariableContext(tuple(names))
    polar_rows = []
    for r in rows:
        vec = [0] * len(names)
        for i, e in enumerate(r):
            for j in range(e):
                vec[offset[i] + j] = 1
        polar_rows.append(tuple(vec))
    return polar_context, MonomialIdeal.from_exponents(polar_context, polar_rows), origin


def depolarize(
    polar_ideal: MonomialIdeal,
    origin: Mapping[int, int],
    context: VariableContext,
) -> MonomialIdeal:
    """Undo :func:`polarize` by collapsing the fresh variables again."""
    rows = []
    for r in polar_ideal.rows:
        vec = [0] * context.dimension
        for j, e in enumerate(r):
            if e:
                vec[origin[j]] += e
        rows.append(tuple(vec))
    return MonomialIdeal.from_exponents(context, rows)
