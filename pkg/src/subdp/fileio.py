"""Plain-text formats for graphs, colorings and codec tables.

Graph files::

    # comments and blank lines are ignored
    bigraph 4 4        # mode ("digraph" | "bigraph"), node count, edge-line count
    0 1
    ...

A ``bigraph`` edge line stands for both arc directions. Colorings are written
as ``coloring <nodes> <colors>`` followed by ``node color`` lines, and codecs
as ``codec <states> <messages>`` followed by ``state decode m→s ...`` lines.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any, Iterator

from subdp.codec import Codec
from subdp.exact import Coloring
from subdp.graph import DirectedGraph, GraphInputError, build_graph, is_bidirectional

GRAPH_MODES = ("digraph", "bigraph")
ARROW = "→"


class ParseError(GraphInputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_graph(text: str) -> DirectedGraph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty graph file") from None
    if len(header) != 3 or header[0] not in GRAPH_MODES:
        raise ParseError("header must be '<digraph|bigraph> <n> <lines>'", lineno)
    mode = header[0]
    n, declared = _ints(header[1:], lineno)
    if n < 0 or declared < 0:
        raise ParseError("node and line counts must be non-negative", lineno)

    arcs: list[tuple[int, int]] = []
    count = 0
    for lineno, tokens in lines:
        if len(tokens) != 2:
            raise ParseError(f"edge line needs 2 fields, got {len(tokens)}", lineno)
        u, v = _ints(tokens, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"node id out of range [0, {n - 1}]", lineno)
        if u == v:
            raise ParseError(f"self-loop on node {u}", lineno)
        arcs.append((u, v))
        if mode == "bigraph":
            arcs.append((v, u))
        count += 1
    if count != declared:
        raise ParseError(f"header declares {declared} edge lines, found {count}")
    return build_graph(n, arcs)


def format_graph(g: DirectedGraph, mode: str | None = None) -> str:
    """Canonical text: ``bigraph`` with ``u < v`` lines when bidirectional."""
    if mode is None:
        mode = "bigraph" if is_bidirectional(g) else "digraph"
    if mode == "bigraph":
        if not is_bidirectional(g):
            raise GraphInputError("only bidirectional graphs can be written as bigraph")
        pairs = [(u, v) for u, v in g.sorted_arcs() if u < v]
    elif mode == "digraph":
        pairs = g.sorted_arcs()
    else:
        raise GraphInputError(f"unknown graph mode {mode!r}")
    body = "".join(f"{u} {v}\n" for u, v in pairs)
    return f"{mode} {g.n} {len(pairs)}\n{body}"


def read_graph(path: str | Path) -> DirectedGraph:
    return parse_graph(Path(path).read_text())


def parse_coloring(text: str) -> Coloring:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty coloring file") from None
    if len(header) != 3 or header[0] != "coloring":
        raise ParseError("header must be 'coloring <nodes> <colors>'", lineno)
    size, ell = _ints(header[1:], lineno)
    colors: dict[int, int] = {}
    for lineno, tokens in lines:
        if len(tokens) != 2:
            raise ParseError("coloring line needs 'node color'", lineno)
        v, c = _ints(tokens, lineno)
        if v in colors:
            raise ParseError(f"node {v} colored twice", lineno)
        if not 1 <= c <= ell:
            raise ParseError(f"color {c} outside [1, {ell}]", lineno)
        colors[v] = c
    if len(colors) != size:
        raise ParseError(f"header declares {size} nodes, found {len(colors)}")
    return Coloring(ell, colors)


def format_coloring(col: Coloring) -> str:
    body = "".join(f"{v} {col[v]}\n" for v in sorted(col.colors))
    return f"coloring {len(col.colors)} {col.num_colors}\n{body}"


def format_codec(codec: Codec) -> str:
    lines = [f"codec {len(codec.states)} {codec.num_messages}"]
    for s in codec.states:
        moves = " ".join(f"{m}{ARROW}{codec.next_state[(s, m)]}" for m in range(1, codec.num_messages + 1))
        lines.append(f"{s} {codec.decode[s]} {moves}")
    return "\n".join(lines) + "\n"


def parse_codec(text: str) -> Codec:
    lines = _content_lines(text.replace("->", ARROW))
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty codec file") from None
    if len(header) != 3 or header[0] != "codec":
        raise ParseError("header must be 'codec <states> <messages>'", lineno)
    size, ell = _ints(header[1:], lineno)
    states: list[int] = []
    decode: dict[int, int] = {}
    table: dict[tuple[int, int], int] = {}
    for lineno, tokens in lines:
        if len(tokens) != 2 + ell:
            raise ParseError(f"state line needs state, decode and {ell} transitions", lineno)
        s, d = _ints(tokens[:2], lineno)
        if s in decode:
            raise ParseError(f"state {s} listed twice", lineno)
        states.append(s)
        decode[s] = d
        for tok in tokens[2:]:
            m_txt, sep, t_txt = tok.partition(ARROW)
            if not sep:
                raise ParseError(f"transition {tok!r} is not 'm{ARROW}s'", lineno)
            m, t = _ints([m_txt, t_txt], lineno)
            table[(s, m)] = t
    if len(states) != size:
        raise ParseError(f"header declares {size} states, found {len(states)}")
    return Codec(tuple(states), ell, table, decode)


def write_report(report: dict[str, Any], path: str | Path) -> None:
    text = json.dumps(report, indent=2, sort_keys=False) + "\n"
    if str(path) == "-":
        print(text, end="")
    else:
        Path(path).write_text(text)


def asset_path(name: str) -> Path:
    return Path(str(resources.files("subdp") / "assets" / name))


def load_asset(name: str) -> DirectedGraph:
    return read_graph(asset_path(name))


def asset_manifest() -> dict[str, dict[str, Any]]:
    return json.loads(asset_path("manifest.json").read_text())
