"""Graph ingestion and encoding: graph6 and plain edge lists.

graph6 follows the de-facto format: every byte is a 6-bit value plus 63,
the vertex count comes first (1, 4 or 8 bytes) and the upper triangle of the
adjacency matrix follows column by column, ``x(0,1) x(0,2) x(1,2) x(0,3)...``,
padded with zero bits. sparse6 and digraph6 records are rejected.
"""

import logging
from pathlib import Path
from typing import Iterable, Iterator, List, Literal, Optional, Tuple, Union

import numpy as np

from walksig.core.errors import GraphFormatError, GraphStructureError
from walksig.models.graph import Graph, GraphFamily

logger = logging.getLogger(__name__)

FamilyFormat = Literal["graph6", "edge-list"]

GRAPH6_HEADER = b">>graph6<<"
_SMALL_LIMIT = 62
_MEDIUM_LIMIT = 258047
_LARGE_LIMIT = 68719476735


def _as_bytes(line: Union[str, bytes]) -> bytes:
    if isinstance(line, str):
        try:
            return line.encode("ascii")
        except UnicodeEncodeError as exc:
            raise GraphFormatError("record is not ascii", offset=exc.start) from None
    return bytes(line)


def _decode_size(data: bytes, offset: int) -> Tuple[int, int]:
    """Return ``(n, payload_offset)`` for the size header starting at ``offset``."""
    first = data[offset] - 63
    if first < 63:
        return first, offset + 1
    if len(data) >= offset + 2 and data[offset + 1] - 63 < 63:
        width, start = 3, offset + 1
    else:
        width, start = 6, offset + 2
    if len(data) < start + width:
        raise GraphFormatError("malformed length header: record ends inside it", offset=len(data))
    n = 0
    for byte in data[start : start + width]:
        n = (n << 6) | (byte - 63)
    return n, start + width


def _encode_size(n: int) -> bytes:
    if n <= _SMALL_LIMIT:
        return bytes([n + 63])
    if n <= _MEDIUM_LIMIT:
        return bytes([126] + [((n >> shift) & 63) + 63 for shift in (12, 6, 0)])
    if n <= _LARGE_LIMIT:
        return bytes([126, 126] + [((n >> shift) & 63) + 63 for shift in (30, 24, 18, 12, 6, 0)])
    raise GraphStructureError(f"graph6 cannot encode {n} vertices")


def _upper_triangle(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Positions of the graph6 bit stream: ``(small, big)`` in (big, small) order."""
    big, small = np.tril_indices(n, k=-1)
    return small, big


def parse_graph6(line: Union[str, bytes]) -> Graph:
    """Decode one graph6 record."""
    data = _as_bytes(line).strip()
    offset = len(GRAPH6_HEADER) if data.startswith(GRAPH6_HEADER) else 0
    if offset >= len(data):
        raise GraphFormatError("empty graph6 record", offset=offset)
    if data[offset : offset + 1] == b":":
        raise GraphFormatError("sparse6 records are not supported", offset=offset)
    if data[offset : offset + 1] == b"&":
        raise GraphFormatError("digraph6 records are not supported", offset=offset)
    for position in range(offset, len(data)):
        if not 63 <= data[position] <= 126:
            raise GraphFormatError(
                f"byte value {data[position]} outside 63..126", offset=position
            )

    n, start = _decode_size(data, offset)
    if n == 0:
        raise GraphFormatError("record encodes a graph without vertices", offset=offset)
    bit_count = n * (n - 1) // 2
    byte_count = -(-bit_count // 6)
    payload = data[start:]
    if len(payload) < byte_count:
        raise GraphFormatError(
            f"truncated bit payload: {len(payload)} of {byte_count} bytes", offset=len(data)
        )
    if len(payload) > byte_count:
        raise GraphFormatError("trailing bytes after bit payload", offset=start + byte_count)

    values = np.frombuffer(payload, dtype=np.uint8).astype(np.int64) - 63
    bits = ((values[:, None] >> np.arange(5, -1, -1)) & 1).ravel()[:bit_count]
    adjacency = np.zeros((n, n), dtype=bool)
    small, big = _upper_triangle(n)
    adjacency[small, big] = bits.astype(bool)
    adjacency |= adjacency.T
    return Graph(n, adjacency)


def encode_graph6(g: Graph) -> bytes:
    """Encode a graph as one graph6 record (no header, no newline)."""
    small, big = _upper_triangle(g.n)
    bits = g.adjacency[small, big].astype(np.int64)
    padding = (-len(bits)) % 6
    if padding:
        bits = np.concatenate([bits, np.zeros(padding, dtype=np.int64)])
    values = (bits.reshape(-1, 6) << np.arange(5, -1, -1)).sum(axis=1) + 63
    return _encode_size(g.n) + bytes(values.astype(np.uint8).tolist())


def _content(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _iter_edge_list_blocks(lines: Iterable[str]) -> Iterator[Tuple[int, Graph]]:
    """Yield ``(first_line_number, graph)`` for each ``n`` + edge-lines block."""
    n: Optional[int] = None
    start = 0
    edges: List[Tuple[int, int]] = []

    def finish() -> Graph:
        adjacency = np.zeros((n, n), dtype=bool)
        for i, j in edges:
            adjacency[i, j] = adjacency[j, i] = True
        return Graph(n, adjacency)

    for lineno, raw in enumerate(lines, start=1):
        text = _content(raw if isinstance(raw, str) else raw.decode("ascii", "replace"))
        if not text:
            continue
        tokens = text.split()
        try:
            numbers = [int(t) for t in tokens]
        except ValueError:
            raise GraphFormatError(f"non-integer token in {text!r}", line=lineno) from None
        if len(numbers) == 1:
            if n is not None:
                yield start, finish()
            n, start, edges = numbers[0], lineno, []
            if n < 1:
                raise GraphFormatError(f"vertex count must be positive, got {n}", line=lineno)
        elif len(numbers) == 2:
            if n is None:
                raise GraphFormatError("edge line before the vertex count", line=lineno)
            i, j = numbers
            if not (0 <= i < n and 0 <= j < n):
                raise GraphFormatError(
                    f"vertex index out of range in edge ({i}, {j}) for n={n}", line=lineno
                )
            if i == j:
                raise GraphFormatError(f"self-loop at vertex {i}", line=lineno)
            edges.append((i, j))
        else:
            raise GraphFormatError(f"expected 'n' or 'i j', got {text!r}", line=lineno)
    if n is not None:
        yield start, finish()


def parse_edge_list(text: str) -> Graph:
    """Parse a single ``n`` followed by 0-based ``i j`` edge lines."""
    blocks = list(_iter_edge_list_blocks(text.splitlines()))
    if not blocks:
        raise GraphFormatError("empty edge list")
    if len(blocks) > 1:
        raise GraphFormatError("more than one graph in edge list", line=blocks[1][0])
    return blocks[0][1]


def encode_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{i} {j}" for i, j in g.edges()]
    return "\n".join(lines) + "\n"


def load_family(
    lines: Iterable[Union[str, bytes]], fmt: FamilyFormat = "graph6", source: str = ""
) -> GraphFamily:
    """Read a family: one graph6 record per line, or concatenated edge-list blocks."""
    if fmt == "edge-list":
        members = tuple(graph for _, graph in _iter_edge_list_blocks(lines))
    elif fmt == "graph6":
        graphs = []
        for lineno, raw in enumerate(lines, start=1):
            try:
                record = _as_bytes(raw).strip()
                if not record:
                    continue
                graphs.append(parse_graph6(record))
            except GraphFormatError as exc:
                raise exc.at_line(lineno) from None
        members = tuple(graphs)
    else:
        raise ValueError(f"unknown family format {fmt!r}")
    logger.info("loaded %d graphs from %s", len(members), source or "<stream>")
    return GraphFamily(members, source=source)


def detect_format(text: str) -> FamilyFormat:
    """Edge lists start with a lone integer; anything else is graph6."""
    for line in text.splitlines():
        content = _content(line)
        if content:
            return "edge-list" if content.isdigit() else "graph6"
    return "graph6"


def _ascii_lines(data: bytes) -> List[str]:
    lines = []
    for lineno, raw in enumerate(data.splitlines(), start=1):
        try:
            lines.append(raw.decode("ascii"))
        except UnicodeDecodeError as exc:
            raise GraphFormatError("record is not ascii", offset=exc.start, line=lineno) from None
    return lines


def load_family_file(path: Union[str, Path], fmt: str = "auto") -> GraphFamily:
    path = Path(path)
    lines = _ascii_lines(path.read_bytes())
    if fmt == "auto":
        fmt = detect_format("\n".join(lines))
    return load_family(lines, fmt, source=str(path))


def write_family(family: Iterable[Graph], fmt: FamilyFormat = "graph6") -> str:
    if fmt == "graph6":
        return "".join(encode_graph6(g).decode("ascii") + "\n" for g in family)
    if fmt == "edge-list":
        return "\n".join(encode_edge_list(g) for g in family)
    raise ValueError(f"unknown family format {fmt!r}")
