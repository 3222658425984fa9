"""Plain-text edge-list format.

    # comment lines are ignored
    n m
    u v        (m lines, 0 <= u < v < n)
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError


class GraphParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_graph(text: str) -> Graph:
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        rows.append((lineno, s.split()))
    if not rows:
        raise GraphParseError("missing header line 'n m'")
    lineno, head = rows[0]
    n, m = _ints(head, 2, lineno)
    if n < 1:
        raise GraphParseError("n must be at least 1", lineno)
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise GraphParseError(f"expected {m} edge lines, found {len(body)}", where)
    edges = []
    seen = set()
    for lineno, parts in body:
        u, v = _ints(parts, 2, lineno)
        if not 0 <= u < v < n:
            raise GraphParseError(f"edge '{u} {v}' must satisfy 0 <= u < v < {n}", lineno)
        if (u, v) in seen:
            raise GraphParseError(f"duplicate edge '{u} {v}'", lineno)
        seen.add((u, v))
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def _ints(parts: list[str], count: int, lineno: int) -> list[int]:
    if len(parts) != count:
        raise GraphParseError(f"expected {count} integers, got {len(parts)} fields", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphParseError(f"non-integer field in {' '.join(parts)!r}", lineno) from None


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    edges = g.edges()
    lines.append(f"{g.n} {len(edges)}")
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_graph(g, comment))
