"""Core value universe: atoms, contexts, tag streams, and the evidence hierarchy.

Everything here is an immutable value; instances can be shared freely
between evaluation sessions and threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union


class FlucidError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(FlucidError):
    pass


class UnboundDimension(FlucidError):
    def __init__(self, dim: str):
        super().__init__(f"dimension '{dim}' is not bound in the current context")
        self.dim = dim


class UnboundedStream(FlucidError):
    pass


class TypeMismatch(FlucidError):
    pass


class _Marker:
    """Singleton marker values (eod, +inf, the `$` wildcard property)."""

    __slots__ = ("_name",)

    def __init__(self, name: str):
        self._name = name

    def __repr__(self) -> str:
        return self._name

    def __deepcopy__(self, memo):
        return self

    def __copy__(self):
        return self


#: End-of-data marker; absorbing in stream element position.
EOD = _Marker("eod")
#: Positive infinity; valid only in an observation's opt slot.
INF = _Marker("+inf")
#: Wildcard property that matches every run step.
ANY = _Marker("$")


@dataclass(frozen=True, order=True)
class Atom:
    """A symbolic label such as 'B_deleted' or 'take'."""

    name: str

    def __repr__(self) -> str:
        return f"'{self.name}'"


# A PropertySet is a frozenset of Atoms, an Array is a tuple of Values.
Value = Union[Atom, int, bool, frozenset, tuple, _Marker, "TagStream"]


def make_property_set(atoms: Iterable[Atom]) -> frozenset:
    atoms = tuple(atoms)
    for a in atoms:
        if not isinstance(a, Atom):
            raise TypeMismatch(f"property sets may only contain atoms, got {a!r}")
    return frozenset(atoms)


class Context:
    """An immutable map from dimension names to non-negative tag indices."""

    __slots__ = ("_bindings", "_key")

    def __init__(self, bindings: Mapping[str, int] | None = None):
        items = dict(bindings) if bindings else {}
        for dim, tag in items.items():
            _check_tag(dim, tag)
        self._bindings = items
        self._key = frozenset(items.items())

    def bound(self, dim: str) -> bool:
        return dim in self._bindings

    def query(self, dim: str) -> int:
        try:
            return self._bindings[dim]
        except KeyError:
            raise UnboundDimension(dim) from None

    def override(self, dim: str, tag: int) -> "Context":
        _check_tag(dim, tag)
        items = dict(self._bindings)
        items[dim] = tag
        return Context(items)

    def as_dict(self) -> dict:
        return dict(self._bindings)

    def __eq__(self, other) -> bool:
        return isinstance(other, Context) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        inner = ", ".join(f"{d}:{t}" for d, t in sorted(self._bindings.items()))
        return "{" + inner + "}"


def _check_tag(dim: str, tag) -> None:
    if isinstance(tag, bool) or not isinstance(tag, int):
        raise ValidationError(f"tag for dimension '{dim}' must be an integer, got {tag!r}")
    if tag < 0:
        raise ValidationError(f"tag for dimension '{dim}' must be non-negative, got {tag}")


def context_override(ctx: Context, dim: str, tag: int) -> Context:
    """The `@` half of context navigation: rebind one dimension."""
    return ctx.override(dim, tag)


def context_query(ctx: Context, dim: str) -> int:
    """The `#` half of context navigation: read one dimension's tag."""
    return ctx.query(dim)


@dataclass(frozen=True)
class TagStream:
    """A finite indexed sequence of values along one dimension.

    Element i is the stream's value at context {dimension: i}.  Eod is
    absorbing: construction truncates at the first eod, and indexing a
    bounded stream past its end yields eod.  Reverse operators require
    bounded streams.
    """

    dimension: str
    elements: tuple = ()
    bounded: bool = True

    def __post_init__(self):
        elems = tuple(self.elements)
        for i, e in enumerate(elems):
            if e is EOD:
                elems = elems[:i]
                object.__setattr__(self, "bounded", True)
                break
        object.__setattr__(self, "elements", elems)

    def __len__(self) -> int:
        return len(self.elements)

    def at(self, tag: int) -> Value:
        if tag < 0:
            return EOD
        if tag < len(self.elements):
            return self.elements[tag]
        if self.bounded:
            return EOD
        raise UnboundedStream(
            f"stream along '{self.dimension}' has no eod; cannot read past its known prefix"
        )

    def __repr__(self) -> str:
        inner = ", ".join(repr(e) for e in self.elements)
        tail = "" if self.bounded else ", ..."
        return f"<{inner}{tail}>"


@dataclass(frozen=True)
class Observation:
    """A witnessed property holding for min to min+opt consecutive steps."""

    property: Value
    min: int
    opt: Union[int, _Marker]

    def __post_init__(self):
        if isinstance(self.min, bool) or not isinstance(self.min, int) or self.min < 0:
            raise ValidationError(f"observation min must be a non-negative integer, got {self.min!r}")
        if self.opt is not INF and (
            isinstance(self.opt, bool) or not isinstance(self.opt, int) or self.opt < 0
        ):
            raise ValidationError(f"observation opt must be a non-negative integer or +inf, got {self.opt!r}")

    @property
    def generic(self) -> bool:
        """True when the duration is not fixed (opt > 0 or unbounded)."""
        return self.opt is INF or self.opt > 0

    def __repr__(self) -> str:
        return f"({self.property!r}, {self.min}, {self.opt!r})"


#: The `$` wildcard observation: any property, for any duration.
WILDCARD = Observation(ANY, 0, INF)


@dataclass(frozen=True)
class ObservationSequence:
    """One witness's story: a finite ordered sequence of observations."""

    name: str
    observations: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "observations", tuple(self.observations))

    def __len__(self) -> int:
        return len(self.observations)

    def __iter__(self):
        return iter(self.observations)


@dataclass(frozen=True, eq=False)
class EvidentialStatement:
    """The whole body of evidence: an unordered collection of sequences.

    Equality ignores the order in which sequences were listed.
    """

    name: str
    sequences: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "sequences", tuple(self.sequences))

    def __eq__(self, other) -> bool:
        if not isinstance(other, EvidentialStatement):
            return NotImplemented
        return self.name == other.name and frozenset(self.sequences) == frozenset(other.sequences)

    def __hash__(self) -> int:
        return hash((self.name, frozenset(self.sequences)))

    def __iter__(self):
        return iter(self.sequences)


def format_value(value) -> str:
    """Render a value the way the CLI prints it (atoms bare, streams as fby chains)."""
    if value is EOD:
        return "eod"
    if value is INF:
        return "+inf"
    if value is ANY:
        return "$"
    if isinstance(value, Atom):
        return value.name
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, frozenset):
        inner = ", ".join(sorted(format_value(v) for v in value))
        return "unordered {" + inner + "}"
    if isinstance(value, tuple):
        return "[" + ", ".join(format_value(v) for v in value) + "]"
    if isinstance(value, TagStream):
        if not value.elements:
            return "eod"
        return " fby ".join(format_value(e) for e in value.elements) + " fby eod"
    if isinstance(value, Observation):
        return f"({format_value(value.property)}, {value.min}, {format_value(value.opt) if value.opt is INF else value.opt})"
    if isinstance(value, ObservationSequence):
        return "[" + ", ".join(format_value(o) for o in value.observations) + "]"
    if isinstance(value, EvidentialStatement):
        return "{" + ", ".join(s.name for s in value.sequences) + "}"
    return repr(value)
