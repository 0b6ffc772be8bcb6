"""Jacobi-Trudi determinant expressions for diagonal-constant tableaux.

For a shape with diagonal weights a_d (the label on every cell with
column - row = d) the Schur-type value equals two determinants:

* the row reading ("H side"): a width x width matrix whose (i, j) entry is
  the linear value of the descending offsets a_(j-1), a_(j-2), ...,
  a_(j - (conjugate_i + j - i));
* the column reading ("E side"): a height x height matrix of linear values
  of the ascending offsets a_(1-j), ..., a_(part_i - i), evaluated at 1-t.

Entries with index length zero are one, with negative length zero.  The E
side is produced by computing the linear values at t and then substituting
t -> 1-t, which reuses the tested substitution instead of a second
summation routine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import PolyRing, TPoly, ring_determinant
from .shapes import Partition
from .values import (
    CoefficientMap,
    DiagonalWeights,
    diagonal_tableau,
    linear_value,
    rational_map,
    schur_value,
)


@dataclass(frozen=True)
class JTMatrixSpec:
    """Which determinant matrix to build: side "H" (row reading, width x
    width) or "E" (column reading, height x height, at 1-t)."""

    shape: Partition
    side: str
    N: int
    cmap: CoefficientMap
    weights: DiagonalWeights


def build_jt_matrix(spec: JTMatrixSpec) -> list[list[TPoly]]:
    if spec.side == "H":
        return _h_matrix(spec.shape, spec.N, spec.cmap, spec.weights)
    if spec.side == "E":
        return _e_matrix(spec.shape, spec.N, spec.cmap, spec.weights)
    raise ValueError(f"matrix side must be 'H' or 'E', got {spec.side!r}")


def _h_matrix(
    shape: Partition, N: int, cmap: CoefficientMap, weights: DiagonalWeights
) -> list[list[TPoly]]:
    ring = cmap.ring
    conj = shape.conjugate().parts
    n = shape.width
    matrix = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            length = conj[i - 1] + j - i
            if length == 0:
                row.append(TPoly.one(ring))
            elif length < 0:
                row.append(TPoly.zero(ring))
            else:
                keys = [weights[j - 1 - s] for s in range(length)]
                row.append(linear_value(keys, N, cmap))
        matrix.append(row)
    return matrix


def _e_matrix(
    shape: Partition, N: int, cmap: CoefficientMap, weights: DiagonalWeights
) -> list[list[TPoly]]:
    ring = cmap.ring
    n = shape.height
    matrix = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            length = shape.parts[i - 1] - i + j
            if length == 0:
                row.append(TPoly.one(ring))
            elif length < 0:
                row.append(TPoly.zero(ring))
            else:
                keys = [weights[1 - j + s] for s in range(length)]
                row.append(linear_value(keys, N, cmap).subs_one_minus_t())
        matrix.append(row)
    return matrix


@dataclass(frozen=True)
class JTReport:
    """Direct Schur value and both determinants for one instance."""

    shape: Partition
    N: int
    schur: TPoly
    det_h: TPoly
    det_e: TPoly
    equal: bool


def verify_jacobi_trudi(
    shape: Partition, N: int, cmap: CoefficientMap, weights: DiagonalWeights
) -> JTReport:
    """Compute the Schur value of the diagonal-constant tableau and both
    determinants, and compare all three."""
    poly_ring = PolyRing(cmap.ring)
    schur = schur_value(diagonal_tableau(shape, weights), N, cmap)
    det_h = ring_determinant(_h_matrix(shape, N, cmap, weights), poly_ring)
    det_e = ring_determinant(_e_matrix(shape, N, cmap, weights), poly_ring)
    equal = schur == det_h and det_h == det_e
    return JTReport(shape, N, schur, det_h, det_e, equal)


@dataclass(frozen=True)
class PalindromeReport:
    keys: tuple[int, ...]
    N: int
    poly: TPoly
    flipped: TPoly
    equal: bool


def palindrome_weights(keys) -> DiagonalWeights:
    """Symmetric diagonal window: offset d carries the key with index |d|."""
    keys = tuple(keys)
    r = len(keys)
    return DiagonalWeights({d: keys[abs(d)] for d in range(1 - r, r)})


def verify_palindromic_matrix(
    keys, N: int, cmap: CoefficientMap | None = None
) -> PalindromeReport:
    """Build the r x r determinant for the square shape with the symmetric
    diagonal window over keys and check it is fixed by t -> 1-t."""
    keys = tuple(keys)
    r = len(keys)
    if r < 1:
        raise ValueError("need at least one key")
    if cmap is None:
        cmap = rational_map()
    shape = Partition((r,) * r)
    matrix = _h_matrix(shape, N, cmap, palindrome_weights(keys))
    poly = ring_determinant(matrix, PolyRing(cmap.ring))
    flipped = poly.subs_one_minus_t()
    return PalindromeReport(keys, N, poly, flipped, poly == flipped)
