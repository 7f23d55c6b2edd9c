"""Text formats for signed digraphs, Boolean networks and digraphs.

All three formats are line based: a header line naming the kind and the
vertex count, then one record per line.  ``#`` starts a comment anywhere
on a line; blank lines are ignored.  Serialization is deterministic, so
parse/serialize round-trips are bit exact modulo comments and whitespace.
"""

from __future__ import annotations

from .boolnet import BooleanNetwork, LocalFunction
from .graphs import Arc, SignedDigraph, sign_char
from .kernels import Digraph


class FormatError(Exception):
    """Malformed input with a line-number diagnostic."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _records(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line_no, line


def _parse_header(line_no: int, line: str, kind: str) -> int:
    parts = line.split()
    if len(parts) != 2 or parts[0] != kind:
        raise FormatError(line_no, f"expected header '{kind} <n>', got {line!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise FormatError(line_no, f"bad vertex count {parts[1]!r}") from None
    if n < 0:
        raise FormatError(line_no, f"bad vertex count {n}")
    return n


def _parse_vertex(line_no: int, token: str, n: int) -> int:
    try:
        v = int(token)
    except ValueError:
        raise FormatError(line_no, f"bad vertex id {token!r}") from None
    if not 1 <= v <= n:
        raise FormatError(line_no, f"vertex id {v} outside 1..{n}")
    return v


# -- signed digraphs ----------------------------------------------------------


def parse_signed_digraph(text: str) -> SignedDigraph:
    records = _records(text)
    try:
        line_no, line = next(records)
    except StopIteration:
        raise FormatError(1, "missing 'sdigraph <n>' header") from None
    n = _parse_header(line_no, line, "sdigraph")
    arcs: list[Arc] = []
    seen = set()
    for line_no, line in records:
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(line_no, f"expected '<u> <v> <sign>', got {line!r}")
        u = _parse_vertex(line_no, parts[0], n)
        v = _parse_vertex(line_no, parts[1], n)
        if parts[2] not in ("+", "-"):
            raise FormatError(line_no, f"bad sign {parts[2]!r}")
        sign = 1 if parts[2] == "+" else -1
        arc = Arc(u, v, sign)
        if arc in seen:
            raise FormatError(line_no, f"duplicate arc {u} {v} {parts[2]}")
        seen.add(arc)
        arcs.append(arc)
    return SignedDigraph(n, arcs)


def format_signed_digraph(G: SignedDigraph) -> str:
    if G.vertex_set != frozenset(range(1, G.n + 1)):
        raise ValueError("only graphs on contiguous vertices 1..n serialize")
    lines = [f"sdigraph {G.n}"]
    lines += [f"{a.source} {a.target} {sign_char(a.sign)}" for a in G.arcs]
    return "\n".join(lines) + "\n"


# -- Boolean networks ---------------------------------------------------------


def parse_boolean_network(text: str) -> BooleanNetwork:
    records = _records(text)
    try:
        line_no, line = next(records)
    except StopIteration:
        raise FormatError(1, "missing 'boolnet <n>' header") from None
    n = _parse_header(line_no, line, "boolnet")
    locals_: dict[int, LocalFunction] = {}
    for line_no, line in records:
        if ":" not in line:
            raise FormatError(line_no, f"expected '<v> : <inputs> | <table>', got {line!r}")
        head, _, rest = line.partition(":")
        v = _parse_vertex(line_no, head.strip(), n)
        if v in locals_:
            raise FormatError(line_no, f"vertex {v} defined twice")
        if "|" not in rest:
            raise FormatError(line_no, f"missing '|' before the table in {line!r}")
        inputs_part, _, table_part = rest.partition("|")
        inputs = tuple(
            _parse_vertex(line_no, tok, n) for tok in inputs_part.split()
        )
        if len(set(inputs)) != len(inputs):
            raise FormatError(line_no, "duplicate input vertex")
        table_str = table_part.strip()
        if not table_str or set(table_str) - {"0", "1"}:
            raise FormatError(line_no, f"bad table {table_str!r}")
        if len(table_str) != 1 << len(inputs):
            raise FormatError(
                line_no,
                f"table of length {len(table_str)} for {len(inputs)} inputs "
                f"(expected {1 << len(inputs)})",
            )
        locals_[v] = LocalFunction(inputs, tuple(int(b) for b in table_str))
    missing = [v for v in range(1, n + 1) if v not in locals_]
    if missing:
        raise FormatError(0, f"no local function for vertices {missing}")
    return BooleanNetwork([locals_[v] for v in range(1, n + 1)])


def format_boolean_network(f: BooleanNetwork) -> str:
    lines = [f"boolnet {f.n}"]
    for v in range(1, f.n + 1):
        lf = f.local(v)
        inputs = " ".join(str(u) for u in lf.inputs)
        table = "".join(str(b) for b in lf.table)
        if inputs:
            lines.append(f"{v} : {inputs} | {table}")
        else:
            lines.append(f"{v} : | {table}")
    return "\n".join(lines) + "\n"


# -- unsigned digraphs --------------------------------------------------------


def parse_digraph(text: str) -> Digraph:
    records = _records(text)
    try:
        line_no, line = next(records)
    except StopIteration:
        raise FormatError(1, "missing 'digraph <n>' header") from None
    n = _parse_header(line_no, line, "digraph")
    arcs = []
    seen = set()
    for line_no, line in records:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(line_no, f"expected '<u> <v>', got {line!r}")
        u = _parse_vertex(line_no, parts[0], n)
        v = _parse_vertex(line_no, parts[1], n)
        if (u, v) in seen:
            raise FormatError(line_no, f"duplicate arc {u} {v}")
        seen.add((u, v))
        arcs.append((u, v))
    return Digraph(n, arcs)


def format_digraph(D: Digraph) -> str:
    lines = [f"digraph {D.n}"]
    lines += [f"{u} {v}" for u, v in D.arcs]
    return "\n".join(lines) + "\n"


# -- file wrappers ------------------------------------------------------------


def load_signed_digraph(path) -> SignedDigraph:
    with open(path, encoding="utf-8") as handle:
        return parse_signed_digraph(handle.read())


def load_boolean_network(path) -> BooleanNetwork:
    with open(path, encoding="utf-8") as handle:
        return parse_boolean_network(handle.read())


def load_digraph(path) -> Digraph:
    with open(path, encoding="utf-8") as handle:
        return parse_digraph(handle.read())
