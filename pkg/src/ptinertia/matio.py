"""Text I/O for matrices and ket literals.

Matrix file format: one header line ``dim m n`` (three integers, with
``m*n == dim``; ``m = n = 0`` marks a matrix without bipartite structure),
followed by ``dim`` rows of ``dim`` whitespace-separated entries.  An entry is
either a decimal complex token ``re+imj`` or an exact rational token
``p/q+r/sj``.  Files whose every entry is rational can be routed to the exact
inertia path.
"""

from __future__ import annotations

import io
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import ExactMatrix, GaussianRational

_RAT = r"[+-]?\d+(?:/\d+)?"
_RAT_FULL = re.compile(rf"^({_RAT})(?:([+-]\d+(?:/\d+)?)j)?$")
_RAT_IMAG = re.compile(rf"^({_RAT})j$")

_KET_TERM = re.compile(r"([+-]?)\s*([^|+-]*)\s*\|\s*(\d+)\s*,\s*(\d+)\s*>")


@dataclass
class MatrixFile:
    """Parsed matrix file: float view plus the exact view when available."""

    mat: np.ndarray
    m: int
    n: int
    exact: ExactMatrix | None

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    @property
    def bipartite(self) -> bool:
        return self.m > 0 and self.n > 0


def parse_entry(token: str) -> tuple[complex, GaussianRational | None]:
    """Parse one entry token; returns (float value, exact value or None)."""
    match = _RAT_FULL.match(token)
    if match:
        re_part = Fraction(match.group(1))
        im_part = Fraction(match.group(2)) if match.group(2) else Fraction(0)
        g = GaussianRational(re_part, im_part)
        return complex(g), g
    match = _RAT_IMAG.match(token)
    if match:
        g = GaussianRational(0, Fraction(match.group(1)))
        return complex(g), g
    try:
        return complex(token), None
    except ValueError as exc:
        raise ValueError(f"cannot parse matrix entry {token!r}") from exc


def format_complex(z: complex) -> str:
    z = complex(z)
    re_s = repr(z.real)
    im_s = repr(z.imag)
    if not im_s.startswith("-"):
        im_s = "+" + im_s
    return f"{re_s}{im_s}j"


def format_exact(g: GaussianRational) -> str:
    return str(g)


def loads_matrix(text: str) -> MatrixFile:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    header = lines[0].split()
    if len(header) != 3:
        raise ValueError(f"header must be 'dim m n', got {lines[0]!r}")
    dim, m, n = (int(tok) for tok in header)
    if dim <= 0:
        raise ValueError("matrix dimension must be positive")
    if (m, n) != (0, 0) and m * n != dim:
        raise ValueError(f"bipartite header ({m},{n}) inconsistent with dim={dim}")
    if len(lines) - 1 != dim:
        raise ValueError(f"expected {dim} matrix rows, found {len(lines) - 1}")
    mat = np.zeros((dim, dim), dtype=complex)
    exact: ExactMatrix | None = [[GaussianRational() for _ in range(dim)] for _ in range(dim)]
    for i, line in enumerate(lines[1:]):
        tokens = line.split()
        if len(tokens) != dim:
            raise ValueError(f"row {i} has {len(tokens)} entries, expected {dim}")
        for j, tok in enumerate(tokens):
            value, g = parse_entry(tok)
            mat[i, j] = value
            if exact is not None and g is not None:
                exact[i][j] = g
            else:
                exact = None
    return MatrixFile(mat=mat, m=m, n=n, exact=exact)


def load_matrix(path) -> MatrixFile:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_matrix(fh.read())


def dumps_matrix(mat: np.ndarray, m: int = 0, n: int = 0,
                 exact: ExactMatrix | None = None) -> str:
    mat = np.asarray(mat, dtype=complex)
    dim = mat.shape[0]
    if (m, n) != (0, 0) and m * n != dim:
        raise ValueError(f"bipartite dims ({m},{n}) inconsistent with dim={dim}")
    out = io.StringIO()
    out.write(f"{dim} {m} {n}\n")
    for i in range(dim):
        if exact is not None:
            row = " ".join(format_exact(exact[i][j]) for j in range(dim))
        else:
            row = " ".join(format_complex(mat[i, j]) for j in range(dim))
        out.write(row + "\n")
    return out.getvalue()


def save_matrix(path, mat: np.ndarray, m: int = 0, n: int = 0,
                exact: ExactMatrix | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_matrix(mat, m, n, exact))


def parse_coefficient(text: str) -> complex:
    text = text.strip()
    if not text:
        return 1.0
    if "/" in text and "j" not in text:
        return complex(Fraction(text))
    return complex(text.replace(" ", ""))


def parse_ket(literal: str, m: int, n: int) -> np.ndarray:
    """Parse a ket literal like ``"1|0,0> + 1|1,1> + 0.5|2,2>"``.

    Coefficients may be decimal, rational ``p/q``, or complex; an omitted
    coefficient means 1.  Returns the amplitude vector in the row-major
    (A-index, B-index) convention.
    """
    vec = np.zeros(m * n, dtype=complex)
    matched_spans = []
    for match in _KET_TERM.finditer(literal):
        sign, coef_text, i_s, j_s = match.groups()
        i, j = int(i_s), int(j_s)
        if i >= m or j >= n:
            raise ValueError(f"ket index |{i},{j}> out of range for dims ({m},{n})")
        coef = parse_coefficient(coef_text)
        if sign == "-":
            coef = -coef
        vec[i * n + j] += coef
        matched_spans.append(match.span())
    if not matched_spans:
        raise ValueError(f"no ket terms found in {literal!r}")
    leftover = literal
    for start, end in reversed(matched_spans):
        leftover = leftover[:start] + leftover[end:]
    if leftover.strip(" +"):
        raise ValueError(f"unparsed text in ket literal: {leftover.strip()!r}")
    return vec
