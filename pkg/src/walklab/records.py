"""Walk recording: anonymization, named neighbors, attributed text.

A record renames vertices by order of first discovery (the start is
``1``, the next new vertex ``2``, and so on) and writes the walk as a
token string: ``-`` for an ordinary step, ``;`` for a restart jump,
``#`` for an already-named neighbor announced alongside a step.  Two
walks that differ only by a vertex relabeling produce byte-identical
records, which is the whole point.

The attributed variant renders the same structure as prose built from
per-vertex text snippets, for feeding records to text models.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from .graphs import Graph
from .walks import Walk

__all__ = [
    "Step",
    "Restart",
    "Neighbor",
    "Token",
    "Record",
    "AttributeProvider",
    "record_anonymized",
    "record_named_neighbors",
    "record_attributed",
    "serialize",
    "parse",
]


@dataclass(frozen=True)
class Step:
    id: int


@dataclass(frozen=True)
class Restart:
    id: int


@dataclass(frozen=True)
class Neighbor:
    id: int


Token = Union[Step, Restart, Neighbor]

_SEPARATOR = {Step: "-", Restart: ";", Neighbor: "#"}
_TOKEN_RE = re.compile(r"\d+(?:[-;#]\d+)*")


@dataclass(frozen=True)
class Record:
    """A validated token sequence.

    The constructor enforces the record discipline: the first token is
    ``Step(1)``; a fresh id (one above the running maximum) may appear
    only in a Step token; Restart and Neighbor tokens refer to already
    known ids; Neighbor tokens attach to the preceding step, never to a
    restart; and no token states a self-loop (a step onto the current
    position, or a neighbor equal to it).
    """

    tokens: tuple[Token, ...]

    def __post_init__(self) -> None:
        toks = self.tokens
        if not toks:
            raise ValueError("empty record")
        if toks[0] != Step(1):
            raise ValueError(f"record must begin with Step(1), got {toks[0]!r}")
        max_seen = 1
        pos = 1
        after_restart = False
        for tok in toks[1:]:
            if tok.id < 1:
                raise ValueError(f"ids are positive, got {tok.id}")
            if isinstance(tok, Step):
                if tok.id > max_seen:
                    if tok.id != max_seen + 1:
                        raise ValueError(
                            f"id {tok.id} introduced before {max_seen + 1}"
                        )
                    max_seen = tok.id
                if tok.id == pos:
                    raise ValueError(f"step onto current position {pos}")
                pos = tok.id
                after_restart = False
            elif isinstance(tok, Restart):
                if tok.id > max_seen:
                    raise ValueError(f"restart to unknown id {tok.id}")
                pos = tok.id
                after_restart = True
            elif isinstance(tok, Neighbor):
                if after_restart:
                    raise ValueError("neighbor token after a restart")
                if tok.id > max_seen:
                    raise ValueError(f"neighbor names unknown id {tok.id}")
                if tok.id == pos:
                    raise ValueError(f"neighbor equal to current position {pos}")
            else:
                raise TypeError(f"unknown token {tok!r}")

    @property
    def text(self) -> str:
        parts = [str(self.tokens[0].id)]
        for tok in self.tokens[1:]:
            parts.append(_SEPARATOR[type(tok)] + str(tok.id))
        return "".join(parts)

    def max_id(self) -> int:
        return max(tok.id for tok in self.tokens)

    def __repr__(self) -> str:
        return f"Record({self.text!r})"


def serialize(rec: Record) -> str:
    """Canonical text of a record; inverse of :func:`parse`."""
    return rec.text


def parse(text: str) -> Record:
    """Parse record text back into tokens.

    Raises ``ValueError`` on malformed text or any violation of the
    record discipline (see :class:`Record`).
    """
    if not _TOKEN_RE.fullmatch(text):
        raise ValueError(f"malformed record text: {text!r}")
    ids = re.findall(r"\d+", text)
    seps = re.findall(r"[-;#]", text)
    tokens: list[Token] = [Step(int(ids[0]))]
    for sep, raw in zip(seps, ids[1:]):
        cls = Step if sep == "-" else Restart if sep == ";" else Neighbor
        tokens.append(cls(int(raw)))
    return Record(tuple(tokens))


def _fresh_name(ids: dict[int, int], v: int) -> None:
    if v not in ids:
        ids[v] = len(ids) + 1


def record_anonymized(walk: Walk) -> Record:
    """Rename vertices by first discovery and transcribe the walk."""
    ids = {walk.vertices[0]: 1}
    tokens: list[Token] = [Step(1)]
    for t in range(1, len(walk.vertices)):
        v = walk.vertices[t]
        _fresh_name(ids, v)
        tokens.append(Restart(ids[v]) if walk.restart_flags[t] else Step(ids[v]))
    return Record(tuple(tokens))


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _check_step_edge(g: Graph, u: int, v: int) -> None:
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ValueError(f"walk step ({u}, {v}) is not an edge of the graph")


def record_named_neighbors(walk: Walk, g: Graph) -> Record:
    """Anonymized record that also announces already-named neighbors.

    After each ordinary step to ``v``, every previously discovered
    neighbor of ``v`` whose edge has not yet been recorded is emitted
    as a Neighbor token, ascending by id.  The traversed edge counts as
    recorded first, so it is never announced redundantly.  Restart
    steps announce nothing.
    """
    ids = {walk.vertices[0]: 1}
    recorded: set[tuple[int, int]] = set()
    tokens: list[Token] = [Step(1)]
    for t in range(1, len(walk.vertices)):
        v = walk.vertices[t]
        _fresh_name(ids, v)
        if walk.restart_flags[t]:
            tokens.append(Restart(ids[v]))
            continue
        u_prev = walk.vertices[t - 1]
        _check_step_edge(g, u_prev, v)
        tokens.append(Step(ids[v]))
        recorded.add(_edge_key(u_prev, v))
        for u in sorted((u for u in g.neighbors(v) if u in ids), key=ids.__getitem__):
            if _edge_key(v, u) not in recorded:
                tokens.append(Neighbor(ids[u]))
                recorded.add(_edge_key(v, u))
    return Record(tuple(tokens))


@dataclass(frozen=True)
class AttributeProvider:
    """Per-vertex text for attributed records.

    ``vertex_text`` must cover every visited vertex.  ``edge_direction``
    optionally maps ordered pairs to ``"cites"`` or ``"cited-by"``; a
    missing pair is resolved by looking up the reverse pair and
    flipping.  Without it every edge is rendered with
    ``undirected_word``.  ``labels`` adds a category clause on first
    visits to labeled vertices.  ``link_words`` is the (forward,
    backward) wording pair; the defaults give citation-style prose.
    """

    vertex_text: Mapping[int, str]
    edge_direction: Mapping[tuple[int, int], str] | None = None
    labels: Mapping[int, str] | None = None
    entity: str = "Paper"
    link_words: tuple[str, str] = ("cites", "is cited by")
    undirected_word: str = "is linked to"

    def text_of(self, v: int) -> str:
        try:
            return self.vertex_text[v]
        except KeyError:
            raise ValueError(f"no vertex text for visited vertex {v}") from None

    def direction_word(self, u: int, v: int) -> str:
        """Wording for traversing ``u -> v``."""
        if self.edge_direction is None:
            return self.undirected_word
        d = self.edge_direction.get((u, v))
        if d is None:
            rev = self.edge_direction.get((v, u))
            if rev is None:
                raise ValueError(f"no direction for traversed edge ({u}, {v})")
            d = "cited-by" if rev == "cites" else "cites"
        if d == "cites":
            return self.link_words[0]
        if d == "cited-by":
            return self.link_words[1]
        raise ValueError(f"edge direction must be 'cites' or 'cited-by', got {d!r}")


def record_attributed(walk: Walk, g: Graph, attrs: AttributeProvider) -> str:
    """Render the walk as attributed prose.

    Same structure as :func:`record_named_neighbors`, but vertices carry
    text: the start and every first visit get a ``Title:`` clause (plus
    ``Category:`` when labeled), revisits close with a period, restarts
    become restart sentences, and announced neighbor edges become full
    sentences with direction words.
    """
    ent = attrs.entity
    ids = {walk.vertices[0]: 1}
    recorded: set[tuple[int, int]] = set()
    parts = [f"{ent} 1 - Title: {attrs.text_of(walk.vertices[0])}"]
    for t in range(1, len(walk.vertices)):
        v = walk.vertices[t]
        fresh = v not in ids
        _fresh_name(ids, v)
        if walk.restart_flags[t]:
            parts.append(f" Restart at {ent} 1.")
            continue
        u_prev = walk.vertices[t - 1]
        _check_step_edge(g, u_prev, v)
        word = attrs.direction_word(u_prev, v)
        parts.append(f" {ent} {ids[u_prev]} {word} {ent} {ids[v]}")
        recorded.add(_edge_key(u_prev, v))
        if fresh:
            parts.append(f" - Title: {attrs.text_of(v)}")
            if attrs.labels is not None and v in attrs.labels:
                parts.append(f", Category: {attrs.labels[v]}")
        else:
            parts.append(".")
        for u in sorted((u for u in g.neighbors(v) if u in ids), key=ids.__getitem__):
            if _edge_key(v, u) not in recorded:
                parts.append(f" {ent} {ids[v]} {attrs.direction_word(v, u)} {ent} {ids[u]}.")
                recorded.add(_edge_key(v, u))
    return "".join(parts)
