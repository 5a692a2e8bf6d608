"""Plain-text edge lists.

First non-comment line is ``graph <n>`` or ``digraph <n>``; each further line is
``<u> <v>``. ``#`` starts a comment and blank lines are ignored.
"""

from __future__ import annotations

from pathlib import Path

from .errors import FormatError, EternalDominationError
from .graphs import Digraph, SimpleGraph


def parse_edgelist(text: str) -> SimpleGraph | Digraph:
    header = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2 or tokens[0] not in ("graph", "digraph"):
                raise FormatError(f"line {lineno}: expected 'graph <n>' or 'digraph <n>'")
            try:
                header = (tokens[0], int(tokens[1]))
            except ValueError:
                raise FormatError(f"line {lineno}: vertex count must be an integer") from None
            continue
        if len(tokens) != 2:
            raise FormatError(f"line {lineno}: expected two vertex indices")
        try:
            pairs.append((int(tokens[0]), int(tokens[1])))
        except ValueError:
            raise FormatError(f"line {lineno}: vertex indices must be integers") from None
    if header is None:
        raise FormatError("missing 'graph <n>' / 'digraph <n>' header")
    kind, n = header
    try:
        return SimpleGraph(n, pairs) if kind == "graph" else Digraph(n, pairs)
    except EternalDominationError as exc:
        raise FormatError(str(exc)) from exc


def format_edgelist(g: SimpleGraph | Digraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    if isinstance(g, SimpleGraph):
        lines.append(f"graph {g.n}")
        lines.extend(f"{u} {v}" for u, v in g.edges)
    else:
        lines.append(f"digraph {g.n}")
        lines.extend(f"{u} {v}" for u, v in g.arcs)
    return "\n".join(lines) + "\n"


def read_edgelist(path: str | Path) -> SimpleGraph | Digraph:
    return parse_edgelist(Path(path).read_text())


def write_edgelist(g: SimpleGraph | Digraph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_edgelist(g, comment))


def to_dot(g: SimpleGraph | Digraph) -> str:
    """Graphviz source, for eyeballing small instances."""
    if isinstance(g, SimpleGraph):
        body = [f"  {u} -- {v};" for u, v in g.edges]
        head = "graph G {"
    else:
        body = [f"  {u} -> {v};" for u, v in g.arcs]
        head = "digraph G {"
    nodes = [f"  {v};" for v in range(g.n)]
    return "\n".join([head, *nodes, *body, "}"]) + "\n"
