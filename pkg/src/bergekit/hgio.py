"""Text and JSON formats for hypergraphs.

``.hg``: lines starting with ``#`` are comments; the first data line is
``n m``, followed by ``m`` lines of space-separated vertex ids.  ``.rbhg`` is
the same with each edge line prefixed by ``r`` or ``b``.  The JSON mirror is
``{"n": ..., "edges": [[...], ...], "colors": [...]}`` with optional colors.

Writers emit the normalized edge order of :class:`Hypergraph`; readers accept
edges in any order.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .hypercore import (BLUE, RED, Hypergraph, HypergraphError, RedBlueHypergraph,
                        UniformHypergraph, make_uniform)

PathLike = Union[str, Path]
_COLOR_TOKENS = {"r": RED, "b": BLUE}


class FormatError(HypergraphError):
    pass


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if line and not line.startswith("#"):
            out.append((i, line))
    return out


def _ints(lineno: int, tokens: list[str]) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def _parse(text: str, colored: bool) -> tuple[int, list[list[int]], list[str]]:
    lines = _data_lines(text)
    if not lines:
        raise FormatError("missing header line 'n m'")
    lineno, header = lines[0]
    head = _ints(lineno, header.split())
    if len(head) != 2 or head[0] < 0 or head[1] < 0:
        raise FormatError(f"line {lineno}: header must be 'n m' with n, m >= 0")
    n, m = head
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}")
    edges, colors = [], []
    for lineno, line in body:
        tokens = line.split()
        if colored:
            if tokens[0] not in _COLOR_TOKENS:
                raise FormatError(f"line {lineno}: edge must start with 'r' or 'b'")
            colors.append(_COLOR_TOKENS[tokens[0]])
            tokens = tokens[1:]
        if not tokens:
            raise FormatError(f"line {lineno}: empty edge")
        edges.append(_ints(lineno, tokens))
    return n, edges, colors


def loads_hg(text: str) -> Hypergraph:
    n, edges, _ = _parse(text, colored=False)
    return Hypergraph(n, tuple(tuple(e) for e in edges))


def dumps_hg(H: Hypergraph) -> str:
    lines = [f"{H.n} {H.m}"] + [" ".join(map(str, e)) for e in H.edges]
    return "\n".join(lines) + "\n"


def loads_rbhg(text: str, r: int | None = None) -> RedBlueHypergraph:
    n, edges, colors = _parse(text, colored=True)
    red = [e for e, c in zip(edges, colors) if c == RED]
    blue = [e for e, c in zip(edges, colors) if c == BLUE]
    if r is None:
        if not edges:
            raise FormatError("cannot infer uniformity of an edgeless red-blue file")
        r = len(edges[0])
    return RedBlueHypergraph.from_parts(n, r, red, blue)


def dumps_rbhg(H: RedBlueHypergraph) -> str:
    lines = [f"{H.base.n} {H.base.m}"]
    for e, c in zip(H.base.edges, H.colors):
        lines.append(("r " if c == RED else "b ") + " ".join(map(str, e)))
    return "\n".join(lines) + "\n"


def to_json(H: Union[Hypergraph, RedBlueHypergraph]) -> dict:
    if isinstance(H, RedBlueHypergraph):
        return {"n": H.base.n, "edges": [list(e) for e in H.base.edges],
                "colors": list(H.colors)}
    return {"n": H.n, "edges": [list(e) for e in H.edges]}


def from_json(obj: dict) -> Union[Hypergraph, RedBlueHypergraph]:
    try:
        n, edges = obj["n"], obj["edges"]
    except (KeyError, TypeError):
        raise FormatError("JSON hypergraph needs fields 'n' and 'edges'") from None
    if "colors" in obj:
        colors = obj["colors"]
        if len(colors) != len(edges):
            raise FormatError("'colors' and 'edges' differ in length")
        r = len(edges[0]) if edges else 1
        return RedBlueHypergraph.from_parts(
            n, r, [e for e, c in zip(edges, colors) if c == RED],
            [e for e, c in zip(edges, colors) if c == BLUE])
    return Hypergraph(n, tuple(tuple(e) for e in edges))


def read(path: PathLike) -> Union[Hypergraph, RedBlueHypergraph]:
    """Read by extension: ``.hg``, ``.rbhg`` or ``.json``."""
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".rbhg":
        return loads_rbhg(text)
    if path.suffix == ".json":
        try:
            return from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: {exc}") from None
    return loads_hg(text)


def read_uniform(path: PathLike, r: int | None = None) -> UniformHypergraph:
    H = read(path)
    if isinstance(H, RedBlueHypergraph):
        raise FormatError(f"{path}: expected an uncolored hypergraph")
    sizes = set(H.edge_sizes())
    if len(sizes) > 1:
        raise FormatError(f"{path}: edges of sizes {sorted(sizes)}; expected one uniformity")
    return make_uniform(H.n, H.edges, r)


def write(H: Union[Hypergraph, RedBlueHypergraph], path: PathLike) -> None:
    path = Path(path)
    if path.suffix == ".json":
        text = json.dumps(to_json(H), sort_keys=True) + "\n"
    elif isinstance(H, RedBlueHypergraph):
        text = dumps_rbhg(H)
    else:
        text = dumps_hg(H)
    path.write_text(text)


CORPUS = Path(__file__).resolve().parent / "corpus"


def corpus_names() -> list[str]:
    return sorted(p.name for p in CORPUS.glob("*.hg"))


def resolve(path: PathLike) -> Path:
    """``path`` itself if it exists, else the shipped corpus file of that name."""
    p = Path(path)
    if p.exists():
        return p
    alt = CORPUS / p.name
    if alt.exists():
        return alt
    raise FileNotFoundError(f"no such file: {path}")


def load_pattern(name: PathLike, r: int | None = None) -> UniformHypergraph:
    return read_uniform(resolve(name), r)
