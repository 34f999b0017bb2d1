"""Plain-text block formats for polyhedra, linear maps and graph systems.

Every block starts with ``begin <kind>`` and ends with ``end``; entries are
whitespace separated rationals (``p``, ``p/q`` or exact decimals) and lines
starting with ``#`` are comments.
"""
from __future__ import annotations

from pathlib import Path

from .exact_arith import RatMatrix, format_rational, parse_rational
from .representations import EQ, LE, HPolyhedron, Row, VPolyhedron


class ParseError(ValueError):
    def __init__(self, message: str, lineno: int | None = None, source: str | None = None):
        self.message = message
        self.lineno = lineno
        self.source = source
        where = ""
        if source:
            where += f"{source}:"
        if lineno is not None:
            where += f"{lineno}:"
        super().__init__(f"{where} {message}" if where else message)

    def __str__(self):
        return self.args[0]


def _lines(text: str):
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield n, line.split()


def _rationals(tokens, lineno):
    try:
        return tuple(parse_rational(t) for t in tokens)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), lineno) from None


def _int(token, lineno, what):
    try:
        v = int(token)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {token!r}", lineno) from None
    if v < 0:
        raise ParseError(f"negative {what}", lineno)
    return v


def parse_blocks(text: str, source: str | None = None) -> list:
    """Parse every block in ``text``; returns the decoded objects in order."""
    out = []
    lines = list(_lines(text))
    i = 0
    try:
        while i < len(lines):
            n, toks = lines[i]
            if toks[0] != "begin" or len(toks) != 2:
                raise ParseError("expected 'begin <kind>'", n)
            kind = toks[1]
            j = i + 1
            while j < len(lines) and lines[j][1][0] != "end":
                j += 1
            if j == len(lines):
                raise ParseError(f"block '{kind}' is not closed by 'end'", n)
            body = lines[i + 1:j]
            if kind == "h":
                out.append(_parse_h(body, n))
            elif kind == "v":
                out.append(_parse_v(body, n))
            elif kind == "map":
                from .ef_analysis import LinearMap
                out.append(_parse_map(body, n, LinearMap))
            elif kind == "graph":
                from .affine_bridge import GraphL
                out.append(_parse_graph(body, n, GraphL))
            else:
                raise ParseError(f"unknown block kind {kind!r}", n)
            i = j + 1
    except ParseError as exc:
        if source and exc.source is None:
            raise ParseError(exc.message, exc.lineno, source) from None
        raise
    return out


def _header_dim(body, start, key="dim"):
    if not body or body[0][1][0] != key:
        raise ParseError(f"expected '{key}' line", body[0][0] if body else start)
    return body[0]


def _parse_h(body, start) -> HPolyhedron:
    n, toks = _header_dim(body, start)
    if len(toks) != 2:
        raise ParseError("expected 'dim <d>'", n)
    dim = _int(toks[1], n, "dimension")
    rows = []
    for n, toks in body[1:]:
        rel = toks[0]
        if rel not in ("<=", "=", ">="):
            raise ParseError(f"unknown relation {rel!r}", n)
        if "|" not in toks:
            raise ParseError("missing '|' before right-hand side", n)
        bar = toks.index("|")
        coeffs = _rationals(toks[1:bar], n)
        rhs = _rationals(toks[bar + 1:], n)
        if len(coeffs) != dim or len(rhs) != 1:
            raise ParseError(f"expected {dim} coefficients and one right-hand side", n)
        if rel == ">=":
            rows.append(Row(tuple(-c for c in coeffs), LE, -rhs[0]))
        else:
            rows.append(Row(coeffs, LE if rel == "<=" else EQ, rhs[0]))
    return HPolyhedron(dim, tuple(rows))


def _parse_v(body, start) -> VPolyhedron:
    n, toks = _header_dim(body, start)
    if len(toks) != 2:
        raise ParseError("expected 'dim <d>'", n)
    dim = _int(toks[1], n, "dimension")
    gens = {"vertex": [], "ray": [], "lineality": []}
    empty = False
    for n, toks in body[1:]:
        if toks == ["empty"]:
            empty = True
            continue
        if toks[0] not in gens:
            raise ParseError(f"unknown generator kind {toks[0]!r}", n)
        vals = _rationals(toks[1:], n)
        if len(vals) != dim:
            raise ParseError(f"expected {dim} entries", n)
        gens[toks[0]].append(vals)
    if empty and any(gens.values()):
        raise ParseError("'empty' block lists generators", start)
    if not empty and not gens["vertex"]:
        raise ParseError("nonempty V-representation needs a vertex", start)
    return VPolyhedron(dim, tuple(gens["vertex"]), tuple(gens["ray"]), tuple(gens["lineality"]))


def _parse_map(body, start, cls):
    n, toks = _header_dim(body, start, "dims")
    if len(toks) != 3:
        raise ParseError("expected 'dims <target> <source>'", n)
    target, source = _int(toks[1], n, "dimension"), _int(toks[2], n, "dimension")
    rows, offset = [], None
    for n, toks in body[1:]:
        vals = _rationals(toks[1:], n)
        if toks[0] == "row":
            if len(vals) != source:
                raise ParseError(f"expected {source} entries", n)
            rows.append(vals)
        elif toks[0] == "offset":
            if len(vals) != target:
                raise ParseError(f"expected {target} entries", n)
            offset = vals
        else:
            raise ParseError(f"unknown map line {toks[0]!r}", n)
    if len(rows) != target:
        raise ParseError(f"expected {target} rows, got {len(rows)}", start)
    return cls(RatMatrix.from_rows(rows, cols=source), offset)


def _parse_graph(body, start, cls):
    n, toks = _header_dim(body, start, "dims")
    if len(toks) != 4:
        raise ParseError("expected 'dims <m> <p> <q>'", n)
    m, p, q = (_int(t, n, "dimension") for t in toks[1:])
    b_rows, c_rows, rhs = [], [], None
    for n, toks in body[1:]:
        vals = _rationals(toks[1:], n)
        if toks[0] == "B-row":
            if len(vals) != p:
                raise ParseError(f"expected {p} entries", n)
            b_rows.append(vals)
        elif toks[0] == "C-row":
            if len(vals) != q:
                raise ParseError(f"expected {q} entries", n)
            c_rows.append(vals)
        elif toks[0] == "b":
            if len(vals) != m:
                raise ParseError(f"expected {m} entries", n)
            rhs = vals
        else:
            raise ParseError(f"unknown graph line {toks[0]!r}", n)
    if len(b_rows) != m or len(c_rows) != m or rhs is None:
        raise ParseError(f"expected {m} B-rows, {m} C-rows and a 'b' line", start)
    return cls(RatMatrix.from_rows(b_rows, cols=p), RatMatrix.from_rows(c_rows, cols=q), rhs)


def _fmt(values) -> str:
    return " ".join(format_rational(v) for v in values)


def format_h(h: HPolyhedron) -> str:
    out = ["begin h", f"dim {h.dim}"]
    for r in h.rows:
        rel = "<=" if r.rel == LE else "="
        out.append(f"{rel} {_fmt(r.coeffs)} | {format_rational(r.rhs)}".replace("  ", " "))
    out.append("end")
    return "\n".join(out) + "\n"


def format_v(v: VPolyhedron) -> str:
    out = ["begin v", f"dim {v.dim}"]
    if v.is_empty:
        out.append("empty")
    for kind, pts in (("vertex", v.vertices), ("ray", v.rays), ("lineality", v.lineality)):
        out.extend(f"{kind} {_fmt(p)}".rstrip() for p in pts)
    out.append("end")
    return "\n".join(out) + "\n"


def format_map(lm) -> str:
    out = ["begin map", f"dims {lm.matrix.rows} {lm.matrix.cols}"]
    out.extend(f"row {_fmt(r)}".rstrip() for r in lm.matrix.to_rows())
    if lm.offset is not None:
        out.append(f"offset {_fmt(lm.offset)}".rstrip())
    out.append("end")
    return "\n".join(out) + "\n"


def format_graph(g) -> str:
    out = ["begin graph", f"dims {g.B.rows} {g.B.cols} {g.C.cols}"]
    out.extend(f"B-row {_fmt(r)}".rstrip() for r in g.B.to_rows())
    out.extend(f"C-row {_fmt(r)}".rstrip() for r in g.C.to_rows())
    out.append(f"b {_fmt(g.b)}".rstrip())
    out.append("end")
    return "\n".join(out) + "\n"


def format_any(obj) -> str:
    if isinstance(obj, HPolyhedron):
        return format_h(obj)
    if isinstance(obj, VPolyhedron):
        return format_v(obj)
    if hasattr(obj, "matrix"):
        return format_map(obj)
    return format_graph(obj)


def read_one(path: str | Path, kind: type | tuple | None = None):
    """Read the single block in ``path``, optionally checking its type."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", None, str(path)) from None
    blocks = parse_blocks(text, str(path))
    if len(blocks) != 1:
        raise ParseError(f"expected exactly one block, found {len(blocks)}", None, str(path))
    if kind is not None and not isinstance(blocks[0], kind):
        raise ParseError(f"unexpected block type {type(blocks[0]).__name__}", None, str(path))
    return blocks[0]
