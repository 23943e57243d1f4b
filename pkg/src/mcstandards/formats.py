"""Text formats for problems and graphs, and the JSON report document.

Problem file, version 1::

    # comments run to end of line
    version 1                      (optional)
    variables
      y1 : interval 0 1
      x  : set 0, 0.5, 2
    objectives
      F1 : max : y1 + y3
    constraints
      y1 + y3 <= 1

Graph file: one arc per line, ``from to [capacity]`` (capacity defaults to 1).
"""

from __future__ import annotations

import json
import math
import re
from pathlib import Path

from .errors import ParseError
from .expr import parse, to_source
from .problem import (Constraint, Direction, FiniteSet, Interval, Objective, Problem, Relation,
                      VariableDomain)
from .circuits import Arc, Digraph

FORMAT_VERSION = 1
REPORT_SCHEMA = "mcstandards.report"
REPORT_SCHEMA_VERSION = 1

_SECTIONS = ("variables", "objectives", "constraints")
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_REL_RE = re.compile(r"<=|>=|=")


def _strip_comment(line):
    i = line.find("#")
    return line if i < 0 else line[:i]


def _number(text, line, col, path):
    try:
        return float(text)
    except ValueError:
        raise ParseError(f"expected a number, got {text.strip()!r}", col, None, line, path) from None


def _expr(text, offset, line, path):
    try:
        return parse(text)
    except ParseError as err:
        raise err.located(line=line, path=path, shift=offset) from None


def _variable(body, offset, line, path):
    name, sep, rest = body.partition(":")
    if not sep or not _NAME_RE.match(name.strip()):
        raise ParseError("expected 'name : interval lo hi' or 'name : set v1, v2, ...'",
                         offset, None, line, path)
    rest_off = offset + len(name) + 1
    words = rest.split(None, 1)
    if not words:
        raise ParseError("missing domain", rest_off, None, line, path)
    kind = words[0]
    args = words[1] if len(words) > 1 else ""
    if kind == "interval":
        bounds = args.split()
        if len(bounds) != 2:
            raise ParseError("interval needs two bounds", rest_off, None, line, path)
        domain = Interval(_number(bounds[0], line, rest_off, path),
                          _number(bounds[1], line, rest_off, path))
    elif kind == "set":
        values = [v for v in re.split(r"[,\s]+", args.strip()) if v]
        domain = FiniteSet(tuple(_number(v, line, rest_off, path) for v in values))
    else:
        raise ParseError(f"unknown domain kind {kind!r}", rest_off, None, line, path)
    return VariableDomain(name.strip(), domain)


def _objective(body, offset, line, path):
    parts = body.split(":", 2)
    if len(parts) != 3 or not _NAME_RE.match(parts[0].strip()):
        raise ParseError("expected 'name : max|min : expression'", offset, None, line, path)
    sense = parts[1].strip()
    if sense not in ("max", "min"):
        raise ParseError(f"direction must be max or min, got {sense!r}",
                         offset + len(parts[0]) + 1, None, line, path)
    expr_off = offset + len(parts[0]) + len(parts[1]) + 2
    return Objective(parts[0].strip(), _expr(parts[2], expr_off, line, path), Direction(sense))


def _constraint(body, offset, line, path):
    m = _REL_RE.search(body)
    if m is None:
        raise ParseError("constraint needs <=, = or >=", offset, None, line, path)
    lhs = _expr(body[:m.start()], offset, line, path)
    rhs = _number(body[m.end():], line, offset + m.end(), path)
    return Constraint(lhs, Relation(m.group()), rhs)


def loads_problem(text: str, path=None) -> Problem:
    section = None
    found = {s: [] for s in _SECTIONS}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        stripped = body.strip()
        if not stripped:
            continue
        offset = len(body) - len(body.lstrip())
        header = stripped.rstrip(":").strip()
        if header in _SECTIONS:
            section = header
            continue
        if section is None:
            words = stripped.split()
            if words[0] == "version":
                if len(words) != 2 or words[1] != str(FORMAT_VERSION):
                    raise ParseError(f"unsupported format version {stripped!r}",
                                     offset, None, lineno, path)
                continue
            raise ParseError("content before any section header", offset, None, lineno, path)
        reader = {"variables": _variable, "objectives": _objective,
                  "constraints": _constraint}[section]
        found[section].append(reader(stripped, offset, lineno, path))
    try:
        return Problem(tuple(found["variables"]), tuple(found["objectives"]),
                       tuple(found["constraints"]))
    except Exception as err:
        raise ParseError(str(err), None, None, None, path) from None


def load_problem(path) -> Problem:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as err:
        raise ParseError(f"cannot read problem file: {err.strerror}", None, None, None, path) from None
    return loads_problem(text, path)


def dumps_problem(p: Problem) -> str:
    lines = [f"version {FORMAT_VERSION}", "variables"]
    for v in p.variables:
        if isinstance(v.kind, Interval):
            lines.append(f"  {v.name} : interval {v.kind.lower!r} {v.kind.upper!r}")
        else:
            lines.append(f"  {v.name} : set " + ", ".join(repr(x) for x in v.kind.values))
    lines.append("objectives")
    for o in p.objectives:
        lines.append(f"  {o.name} : {o.direction.value} : {to_source(o.expr)}")
    lines.append("constraints")
    for c in p.constraints:
        lines.append(f"  {to_source(c.lhs)} {c.relation.value} {c.rhs!r}")
    return "\n".join(lines) + "\n"


def _vertex(token):
    try:
        return int(token)
    except ValueError:
        return token


def loads_graph(text: str, path=None) -> Digraph:
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = _strip_comment(raw).split()
        if not fields:
            continue
        if len(fields) not in (2, 3):
            raise ParseError("expected 'from to [capacity]'", 0, None, lineno, path)
        cap = _number(fields[2], lineno, 0, path) if len(fields) == 3 else 1.0
        arcs.append(Arc(_vertex(fields[0]), _vertex(fields[1]), cap))
    try:
        return Digraph.from_arcs(arcs)
    except Exception as err:
        raise ParseError(str(err), None, None, None, path) from None


def load_graph(path) -> Digraph:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as err:
        raise ParseError(f"cannot read graph file: {err.strerror}", None, None, None, path) from None
    return loads_graph(text, path)


def dumps_graph(g: Digraph) -> str:
    return "".join(f"{a.tail} {a.head} {a.capacity!r}\n" for a in g.arcs)


def dumps_report(command: str, payload: dict) -> str:
    """Serialize one run as a self-describing JSON document.

    Key order is fixed and floats use shortest round-trip repr, so equal
    inputs give byte-identical documents.
    """
    doc = {"schema": REPORT_SCHEMA, "version": REPORT_SCHEMA_VERSION, "command": command}
    doc.update(payload)
    return json.dumps(_finite(doc), indent=2, allow_nan=False) + "\n"


def _finite(obj):
    # JSON has no infinity; non-finite floats travel as "inf" / "-inf" / "nan"
    if isinstance(obj, float) and not math.isfinite(obj):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _finite(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_finite(v) for v in obj]
    return obj
