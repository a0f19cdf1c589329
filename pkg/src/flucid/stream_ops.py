"""Classical intensional stream operators and their reverse counterparts.

All operators here work on materialized bounded TagStreams.  Operators
that read relative to a position (next, prev, iseod) take the current
tag explicitly; the evaluator supplies it from the ambient context.
"""

from __future__ import annotations

from .core import EOD, TagStream, UnboundedStream, Value


def _require_bounded(x: TagStream, op: str) -> None:
    if not x.bounded:
        raise UnboundedStream(f"{op} requires a bounded stream")


def first(x: TagStream) -> Value:
    """The element at tag 0 (eod for an empty stream)."""
    return x.at(0)


def next(x: TagStream, tag: int = 0) -> Value:
    """The element one past the given tag."""
    return x.at(tag + 1)


def fby(x: TagStream, y: TagStream, dim: str | None = None) -> TagStream:
    """x followed by y: x's first element, then all of y."""
    dim = dim or y.dimension or x.dimension
    head = x.at(0)
    if head is EOD:
        return TagStream(dim, ())
    _require_bounded(y, "fby")
    return TagStream(dim, (head,) + y.elements)


def pby(x: TagStream, y: TagStream, dim: str | None = None) -> TagStream:
    """x preceded by y: the reverse of fby, prepending the new element."""
    return fby(y, x, dim=dim or x.dimension or y.dimension)


def iseod(x: TagStream, tag: int = 0) -> bool:
    return x.at(tag) is EOD


def wvr(x: TagStream, p: TagStream, dim: str | None = None) -> TagStream:
    """Whenever: keep x's elements at tags where p is true, compacted."""
    _require_bounded(x, "wvr")
    _require_bounded(p, "wvr")
    kept = tuple(v for v, cond in zip(x.elements, p.elements) if cond is True)
    return TagStream(dim or x.dimension, kept)


def asa(x: TagStream, p: TagStream) -> Value:
    """As soon as: the first element of x wvr p (eod when p is never true)."""
    return first(wvr(x, p))


def upon(x: TagStream, p: TagStream, dim: str | None = None) -> TagStream:
    """Advance through x one step each time p is true; repeat otherwise."""
    _require_bounded(x, "upon")
    _require_bounded(p, "upon")
    out = []
    idx = 0
    for tag in range(len(p.elements) + 1):
        v = x.at(idx)
        if v is EOD:
            break
        out.append(v)
        if tag < len(p.elements) and p.elements[tag] is True:
            idx += 1
    return TagStream(dim or x.dimension, tuple(out))


def last(x: TagStream) -> Value:
    """The element just before eod (eod for an empty stream)."""
    _require_bounded(x, "last")
    return x.at(len(x) - 1) if len(x) else EOD


def prev(x: TagStream, tag: int) -> Value:
    """The element one before the given tag; eod at the origin."""
    _require_bounded(x, "prev")
    if tag <= 0:
        return EOD
    return x.at(tag - 1)
