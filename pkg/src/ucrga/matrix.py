"""Dense real matrix plumbing: validation, CSV/JSON interchange, elementary algebra.

Matrices are plain 2-D C-ordered float64 numpy arrays. Diagonal scalings are
1-D arrays of nonzero factors; permutations are 1-D arrays holding a bijection
of 0..n-1. Every function here is pure and never mutates its arguments.
"""

import numpy as np

__all__ = [
    "MatrixFormatError",
    "DimensionError",
    "as_matrix",
    "as_scaling",
    "as_permutation",
    "parse_csv",
    "format_csv",
    "matrix_to_json",
    "matrix_from_json",
    "hadamard",
    "matmul",
    "transpose",
    "apply_diag",
    "permute",
]


class MatrixFormatError(ValueError):
    """Raised when matrix text input (CSV or JSON form) is malformed."""


class DimensionError(ValueError):
    """Raised when operand shapes or lengths are incompatible."""


def as_matrix(values) -> np.ndarray:
    """Validate ``values`` as a matrix: 2-D, nonempty, all entries finite.

    Returns a fresh float64 array; NaN and Inf are rejected outright because
    they would silently corrupt the log-space balancing downstream.
    """
    a = np.array(values, dtype=float, order="C")
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got {a.ndim} dimension(s)")
    if a.shape[0] == 0 or a.shape[1] == 0:
        raise DimensionError("matrix must have at least one row and one column")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite (no NaN or Inf)")
    return a


def as_scaling(entries, size: int | None = None) -> np.ndarray:
    """Validate a vector of diagonal scale factors: finite and nonzero."""
    d = np.array(entries, dtype=float).reshape(-1)
    if size is not None and d.size != size:
        raise DimensionError(f"scaling has length {d.size}, expected {size}")
    if not np.all(np.isfinite(d)):
        raise ValueError("scaling entries must be finite")
    if np.any(d == 0.0):
        raise ValueError("scaling entries must be nonzero")
    return d


def as_permutation(mapping, size: int | None = None) -> np.ndarray:
    """Validate an index vector as a bijection on 0..n-1."""
    p = np.array(mapping, dtype=int).reshape(-1)
    if size is not None and p.size != size:
        raise DimensionError(f"permutation has length {p.size}, expected {size}")
    if not np.array_equal(np.sort(p), np.arange(p.size)):
        raise ValueError("permutation must contain each index 0..n-1 exactly once")
    return p


def parse_csv(text: str) -> np.ndarray:
    """Parse comma-separated matrix text, one row per line.

    Fields may carry surrounding whitespace; scientific notation is accepted.
    LF and CRLF line endings both work; trailing blank lines are ignored.
    """
    lines = text.splitlines()
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise MatrixFormatError("empty input: no matrix rows found")
    width = None
    rows = []
    for lineno, line in enumerate(lines, start=1):
        fields = line.split(",")
        if width is None:
            width = len(fields)
        elif len(fields) != width:
            raise MatrixFormatError(
                f"line {lineno}: expected {width} comma-separated fields, got {len(fields)}"
            )
        row = []
        for colno, field in enumerate(fields, start=1):
            stripped = field.strip()
            try:
                value = float(stripped)
            except ValueError:
                raise MatrixFormatError(
                    f"row {lineno}, column {colno}: cannot parse {stripped!r} as a number"
                ) from None
            if not np.isfinite(value):
                raise MatrixFormatError(
                    f"row {lineno}, column {colno}: non-finite value {stripped!r}"
                )
            row.append(value)
        rows.append(row)
    return as_matrix(rows)


def format_csv(a) -> str:
    """Render a matrix as CSV text at full precision (losslessly reparseable)."""
    a = as_matrix(a)
    return "\n".join(",".join(repr(float(x)) for x in row) for row in a) + "\n"


def matrix_to_json(a) -> dict:
    """Matrix as a JSON-ready object: {"rows", "cols", "data"} with row-major data."""
    a = as_matrix(a)
    return {"rows": int(a.shape[0]), "cols": int(a.shape[1]), "data": [float(x) for x in a.ravel()]}


def matrix_from_json(obj) -> np.ndarray:
    """Inverse of :func:`matrix_to_json`, with full validation."""
    if not isinstance(obj, dict):
        raise MatrixFormatError("JSON matrix must be an object with rows/cols/data")
    try:
        rows, cols, data = obj["rows"], obj["cols"], obj["data"]
    except KeyError as exc:
        raise MatrixFormatError(f"JSON matrix is missing key {exc}") from None
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 1 or cols < 1:
        raise MatrixFormatError("JSON matrix rows/cols must be positive integers")
    if not isinstance(data, list) or len(data) != rows * cols:
        raise MatrixFormatError(
            f"JSON matrix data must be a list of length rows*cols ({rows * cols})"
        )
    try:
        flat = [float(x) for x in data]
    except (TypeError, ValueError):
        raise MatrixFormatError("JSON matrix data must contain only numbers") from None
    return as_matrix(np.array(flat).reshape(rows, cols))


def hadamard(a, b) -> np.ndarray:
    """Elementwise product of two equal-shaped matrices."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise DimensionError(f"elementwise product needs equal shapes, got {a.shape} and {b.shape}")
    return a * b


def matmul(a, b) -> np.ndarray:
    """Standard matrix product."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"inner dimensions differ: {a.shape} times {b.shape}")
    return a @ b


def transpose(a) -> np.ndarray:
    """Transpose (as a new array)."""
    return np.asarray(a, dtype=float).T.copy()


def apply_diag(left, a, right) -> np.ndarray:
    """Scale row i by left[i] and column j by right[j]: diag(left) @ a @ diag(right)."""
    a = np.asarray(a, dtype=float)
    left = as_scaling(left, a.shape[0])
    right = as_scaling(right, a.shape[1])
    return left[:, None] * a * right[None, :]


def permute(a, row_order, col_order) -> np.ndarray:
    """Reindex: result[i, j] = a[row_order[i], col_order[j]]."""
    a = np.asarray(a, dtype=float)
    row_order = as_permutation(row_order, a.shape[0])
    col_order = as_permutation(col_order, a.shape[1])
    return a[np.ix_(row_order, col_order)]
