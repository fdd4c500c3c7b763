"""Encoder/decoder tables built from a valid coloring, and write/read simulation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from subdp.exact import Coloring, validate_coloring
from subdp.graph import GraphInputError, SubgraphSelection, closed_out_neighborhood


class CodecConsistencyError(RuntimeError):
    """An encoder table broke the legality or round-trip condition."""


@dataclass(frozen=True)
class Codec:
    states: tuple[int, ...]
    num_messages: int
    next_state: Mapping[tuple[int, int], int]
    decode: Mapping[int, int]
    subgraph: SubgraphSelection | None = None

    def __post_init__(self) -> None:
        self.verify()

    def verify(self) -> None:
        """Check every (state, message) pair for a legal move that decodes back."""
        states = set(self.states)
        for s in self.states:
            allowed = (
                closed_out_neighborhood(self.subgraph, s)
                if self.subgraph is not None
                else None
            )
            for m in range(1, self.num_messages + 1):
                t = self.next_state.get((s, m))
                if t is None or t not in states:
                    raise CodecConsistencyError(f"no valid target for state {s}, message {m}")
                if allowed is not None and t not in allowed:
                    raise CodecConsistencyError(f"illegal transition {s} -> {t}")
                if self.decode[t] != m:
                    raise CodecConsistencyError(f"state {t} decodes to {self.decode[t]}, expected {m}")


@dataclass(frozen=True)
class Step:
    message: int
    state: int
    read_back: int


@dataclass(frozen=True)
class Trajectory:
    initial_state: int
    steps: tuple[Step, ...]

    @property
    def states(self) -> list[int]:
        return [self.initial_state, *(st.state for st in self.steps)]

    @property
    def read_errors(self) -> int:
        return sum(st.message != st.read_back for st in self.steps)


def build_codec(sel: SubgraphSelection, col: Coloring) -> Codec:
    """Decode by color; encode to the lowest-id neighbor carrying the message's color."""
    if not validate_coloring(sel, col):
        raise GraphInputError("coloring is not valid on this subgraph")
    table = {}
    for s in sel.sorted_nodes():
        for t in sorted(closed_out_neighborhood(sel, s)):
            table.setdefault((s, col[t]), t)
    return Codec(
        states=tuple(sel.sorted_nodes()),
        num_messages=col.num_colors,
        next_state=table,
        decode=dict(col.colors),
        subgraph=sel,
    )


def encode_step(codec: Codec, s: int, m: int) -> int:
    if s not in codec.decode:
        raise GraphInputError(f"unknown state {s}")
    if not 1 <= m <= codec.num_messages:
        raise GraphInputError(f"message {m} outside [1, {codec.num_messages}]")
    return codec.next_state[(s, m)]


def decode_state(codec: Codec, s: int) -> int:
    if s not in codec.decode:
        raise GraphInputError(f"unknown state {s}")
    return codec.decode[s]


def simulate(codec: Codec, start: int, messages: Iterable[int]) -> Trajectory:
    """Write each message in turn from ``start``, reading back after every write."""
    if start not in codec.decode:
        raise GraphInputError(f"unknown start state {start}")
    sel = codec.subgraph
    allowed: dict[int, frozenset[int]] = {}
    s = start
    steps = []
    for m in messages:
        t = encode_step(codec, s, m)
        if sel is not None and s not in allowed:
            allowed[s] = closed_out_neighborhood(sel, s)
        if sel is not None and t not in allowed[s]:
            raise CodecConsistencyError(f"illegal transition {s} -> {t}")
        got = decode_state(codec, t)
        if got != m:
            raise CodecConsistencyError(f"wrote {m} into state {t} but read {got}")
        steps.append(Step(m, t, got))
        s = t
    return Trajectory(start, tuple(steps))
