"""Instance files, ordering files and JSON result records.

Instance file layout::

    # comment lines start with '#'
    n k m
    v1 v2 ... vk        (m lines, 0-based ids)
"""

from __future__ import annotations

import json
from fractions import Fraction

from .discrepancy import PrefixProfile, certify, first_deletion_bound
from .errors import GrdiscError, ParseError
from .hypergraph import UniformHypergraph


def decimal(num: int, den: int = 1) -> str:
    """Display rendering with 12 significant digits."""
    if den == 0:
        return "0"
    return format(float(Fraction(num, den)), ".12g")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_instance(text: str) -> UniformHypergraph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty instance file: missing 'n k m' header") from None
    fields = header.split()
    if len(fields) != 3:
        raise ParseError(f"line {lineno}: header must be 'n k m', got {header!r}")
    try:
        n, k, m = (int(x) for x in fields)
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer header {header!r}") from None
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: negative n or m")
    edges = []
    for lineno, line in lines:
        try:
            edges.append(tuple(int(x) for x in line.split()))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex id in {line!r}") from None
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, file has {len(edges)}")
    try:
        return UniformHypergraph(n, k, edges)
    except GrdiscError as exc:
        raise ParseError(f"invalid instance: {exc}") from exc


def format_instance(H: UniformHypergraph) -> str:
    lines = [f"{H.n} {H.k} {H.m}"]
    lines += [" ".join(map(str, edge)) for edge in H.edges]
    return "\n".join(lines) + "\n"


def read_instance(path) -> UniformHypergraph:
    with open(path) as fh:
        return parse_instance(fh.read())


def write_instance(H: UniformHypergraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_instance(H))


def parse_ordering(text: str) -> list:
    """Whitespace-separated ids, or a JSON result record with an ``ordering``."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            return [int(v) for v in json.loads(stripped)["ordering"]]
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"unreadable ordering record: {exc}") from None
    try:
        return [int(tok) for tok in stripped.split()]
    except ValueError:
        raise ParseError("ordering file must contain integer vertex ids") from None


def result_record(H: UniformHypergraph, profile: PrefixProfile, variant=None, timing=None) -> dict:
    """JSON-ready record; exact integers are emitted as decimal strings."""
    ctx = profile.context
    den = ctx.denominator
    p = ctx.density
    cert = certify(profile)
    return {
        "n": H.n,
        "k": H.k,
        "m": H.m,
        "p": f"{p.numerator}/{p.denominator}",
        "p_decimal": decimal(p.numerator, p.denominator),
        "denominator": str(den),
        "variant": None if variant is None else getattr(variant, "value", str(variant)),
        "ordering": list(profile.ordering),
        "rows": [
            {"i": i, "e_i": e_i, "N_i": str(N), "value": decimal(N, den)}
            for i, e_i, N in profile.rows
        ],
        "maxAbsScaled": str(cert.max_abs_scaled),
        "maxAbs": decimal(cert.max_abs_scaled, den),
        "boundScaled": str(cert.bound_scaled),
        "bound": decimal(cert.bound_scaled, den),
        "withinBound": cert.within_bound,
        "firstViolationIndex": cert.first_violation_index,
        "firstDeletionBoundScaled": str(first_deletion_bound(H)) if H.n else "0",
        "timing": timing,
    }
