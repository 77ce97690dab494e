"""Signed Pauli operators in binary (x|z) form and generator matrices.

An n-qubit Pauli operator is stored as two n-bit masks plus a real sign.
Bit j of each mask refers to qubit j, and the single-qubit letters map as

    (x, z) = (0, 0) -> I    (1, 0) -> X    (1, 1) -> Y    (0, 1) -> Z

The stored operator is ``sign * i^{|x & z|} * X^x Z^z``, so the (1, 1)
combination is exactly Y and every stored operator is Hermitian.  Products
of commuting operators therefore keep a real sign; multiplying a pair that
anticommutes would need an imaginary phase and raises instead.

A stabilizer state on n qubits is described by a ``GeneratorMatrix`` of n
independent, pairwise commuting rows.  ``to_canonical_form`` row-reduces a
generator matrix over GF(2) into the block pattern

    [ I A | B 0 ]
    [ 0 0 | A^T I ]

(x parts left of the bar, z parts right, B symmetric), recording any qubit
swaps in ``qubit_of_column``.  This shape is the entry point for turning a
generator matrix into a decorated graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

GATE_ARITY = {"H": 1, "S": 1, "Z": 1, "CZ": 2}

_LETTER_OF_BITS = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_BITS_OF_LETTER = {v: k for k, v in _LETTER_OF_BITS.items()}


@dataclass(frozen=True)
class PauliString:
    """A signed n-qubit Pauli operator."""

    n: int
    x: int
    z: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one qubit, got n={self.n}")
        if not 0 <= self.x < (1 << self.n):
            raise ValueError(f"x mask {self.x:#x} out of range for n={self.n}")
        if not 0 <= self.z < (1 << self.n):
            raise ValueError(f"z mask {self.z:#x} out of range for n={self.n}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, 0, 0, 1)

    @classmethod
    def from_label(cls, label: str) -> "PauliString":
        """Build from text such as ``+XXZ`` or ``-IZ`` (qubit 0 first)."""
        if not label:
            raise ValueError("empty Pauli label")
        sign = 1
        body = label
        if label[0] in "+-":
            sign = 1 if label[0] == "+" else -1
            body = label[1:]
        x = z = 0
        for j, ch in enumerate(body):
            try:
                xb, zb = _BITS_OF_LETTER[ch]
            except KeyError:
                raise ValueError(f"bad Pauli letter {ch!r} in {label!r}") from None
            x |= xb << j
            z |= zb << j
        return cls(len(body), x, z, sign)

    def letter(self, j: int) -> str:
        return _LETTER_OF_BITS[(self.x >> j) & 1, (self.z >> j) & 1]

    def label(self) -> str:
        body = "".join(self.letter(j) for j in range(self.n))
        return ("+" if self.sign > 0 else "-") + body

    def __str__(self) -> str:
        return self.label()


def skew_product(p: PauliString, q: PauliString) -> int:
    """Symplectic (commutation) parity: 0 if p and q commute, 1 if not."""
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    return ((p.x & q.z).bit_count() + (p.z & q.x).bit_count()) & 1


def multiply(p: PauliString, q: PauliString) -> PauliString:
    """Product p*q of two commuting Pauli operators.

    Raises ValueError when p and q anticommute, since the product would
    then carry an imaginary phase that a signed operator cannot hold.
    """
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    x = p.x ^ q.x
    z = p.z ^ q.z
    # Phase of the bitwise product, as a power of i mod 4.
    t = (
        (p.x & p.z).bit_count()
        + (q.x & q.z).bit_count()
        + 2 * (p.z & q.x).bit_count()
        - (x & z).bit_count()
    ) % 4
    if t % 2:
        raise ValueError("operands anticommute; product phase is imaginary")
    sign = p.sign * q.sign * (1 if t == 0 else -1)
    return PauliString(p.n, x, z, sign)


def conjugate(p: PauliString, gate: str, *targets: int) -> PauliString:
    """Image of p under conjugation by a Clifford gate, U p U^dagger.

    Supported gates: H, S, Z on one target and CZ on two.  Note that Z and
    CZ are self-inverse and S only ever appears here through rules that fix
    the direction, so no dagger variants are needed.
    """
    arity = GATE_ARITY.get(gate)
    if arity is None:
        raise ValueError(f"unknown gate {gate!r}")
    if len(targets) != arity:
        raise ValueError(f"{gate} takes {arity} target(s), got {len(targets)}")
    for t in targets:
        if not 0 <= t < p.n:
            raise ValueError(f"target {t} out of range for n={p.n}")
    x, z, sign = p.x, p.z, p.sign
    if gate == "H":
        (t,) = targets
        xb = (x >> t) & 1
        zb = (z >> t) & 1
        if xb and zb:
            sign = -sign
        x ^= (xb ^ zb) << t
        z ^= (xb ^ zb) << t
    elif gate == "S":
        (t,) = targets
        xb = (x >> t) & 1
        zb = (z >> t) & 1
        if xb and zb:
            sign = -sign
        z ^= xb << t
    elif gate == "Z":
        (t,) = targets
        if (x >> t) & 1:
            sign = -sign
    else:  # CZ
        a, b = targets
        if a == b:
            raise ValueError("CZ targets must differ")
        xa = (x >> a) & 1
        za = (z >> a) & 1
        xb = (x >> b) & 1
        zb = (z >> b) & 1
        if xa and xb and (za ^ zb):
            sign = -sign
        z ^= (xb << a) | (xa << b)
    return PauliString(p.n, x, z, sign)


def permute_qubits(p: PauliString, perm: Sequence[int]) -> PauliString:
    """Relabel qubits: bit c of the input moves to bit perm[c]."""
    if sorted(perm) != list(range(p.n)):
        raise ValueError("perm is not a permutation of the qubits")
    x = z = 0
    for c, q in enumerate(perm):
        x |= ((p.x >> c) & 1) << q
        z |= ((p.z >> c) & 1) << q
    return PauliString(p.n, x, z, p.sign)


def _gf2_rank(rows: Iterable[int]) -> int:
    pivots: list[int] = []
    for row in rows:
        for p in pivots:
            row = min(row, row ^ p)
        if row:
            pivots.append(row)
    return len(pivots)


@dataclass(frozen=True)
class GeneratorMatrix:
    """n independent, pairwise commuting rows fixing a stabilizer state.

    ``qubit_of_column[c]`` is the original qubit label sitting at column c;
    it starts as the identity and records swaps made by canonicalization.
    """

    n: int
    rows: tuple[PauliString, ...]
    qubit_of_column: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one qubit, got n={self.n}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        for row in self.rows:
            if row.n != self.n:
                raise ValueError(f"row {row} has {row.n} qubits, expected {self.n}")
        if self.qubit_of_column is None:
            object.__setattr__(self, "qubit_of_column", tuple(range(self.n)))
        if sorted(self.qubit_of_column) != list(range(self.n)):
            raise ValueError("qubit_of_column is not a permutation")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if skew_product(self.rows[i], self.rows[j]):
                    raise ValueError(f"rows {i} and {j} anticommute")
        if _gf2_rank(r.x | (r.z << self.n) for r in self.rows) != self.n:
            raise ValueError("rows are not independent")


def left_rank(mat: GeneratorMatrix) -> int:
    """GF(2) rank of the x-part block."""
    return _gf2_rank(r.x for r in mat.rows)


def to_canonical_form(mat: GeneratorMatrix) -> tuple[GeneratorMatrix, int]:
    """Row-reduce into [I A | B 0; 0 0 | A^T I] and return (matrix, rank).

    Row operations multiply signed rows, so signs stay attached to the
    group elements.  When a column has no x-pivot it is swapped with the
    lowest-index later column that has one, and the swap is recorded in
    ``qubit_of_column``.  The reduction is deterministic.
    """
    n = mat.n
    rows = list(mat.rows)
    perm = list(mat.qubit_of_column)

    def col_swap(c1: int, c2: int) -> None:
        for i, r in enumerate(rows):
            x, z = r.x, r.z
            x1, x2 = (x >> c1) & 1, (x >> c2) & 1
            z1, z2 = (z >> c1) & 1, (z >> c2) & 1
            x ^= ((x1 ^ x2) << c1) | ((x1 ^ x2) << c2)
            z ^= ((z1 ^ z2) << c1) | ((z1 ^ z2) << c2)
            rows[i] = PauliString(n, x, z, r.sign)
        perm[c1], perm[c2] = perm[c2], perm[c1]

    def pivot_search(col: int, start: int, part: str) -> Optional[int]:
        for i in range(start, n):
            bits = rows[i].x if part == "x" else rows[i].z
            if (bits >> col) & 1:
                return i
        return None

    # Left block: bring the x parts to [I A; 0 0] with full row reduction.
    rank = 0
    for col in range(n):
        hit = pivot_search(col, rank, "x")
        if hit is None:
            swap_with = None
            for later in range(col + 1, n):
                if pivot_search(later, rank, "x") is not None:
                    swap_with = later
                    break
            if swap_with is None:
                break
            col_swap(col, swap_with)
            hit = pivot_search(col, rank, "x")
        rows[rank], rows[hit] = rows[hit], rows[rank]
        for i in range(n):
            if i != rank and (rows[i].x >> col) & 1:
                rows[i] = multiply(rows[i], rows[rank])
        rank += 1

    # Bottom rows now have zero x part; bring their z tail to [A^T I].
    for col in range(rank, n):
        pivot = rank + (col - rank)
        hit = pivot_search(col, pivot, "z")
        if hit is None:
            raise ValueError("rows are not an independent commuting set")
        rows[pivot], rows[hit] = rows[hit], rows[pivot]
        for i in range(rank, n):
            if i != pivot and (rows[i].z >> col) & 1:
                rows[i] = multiply(rows[i], rows[pivot])
    # Clear the top-right z block using the bottom identity rows.
    for i in range(rank):
        for col in range(rank, n):
            if (rows[i].z >> col) & 1:
                rows[i] = multiply(rows[i], rows[col])

    out = GeneratorMatrix(n, tuple(rows), tuple(perm))
    canonical_blocks(out, rank)  # shape self-check; raises if violated
    return out, rank


def canonical_blocks(
    mat: GeneratorMatrix, rank: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Extract (A, B) from a canonical-form matrix, validating the shape.

    A has ``rank`` rows of width n-rank (bit c is column rank+c); B has
    ``rank`` rows of width rank and must be symmetric.  Raises ValueError
    when the matrix does not have the canonical block pattern.
    """
    n = mat.n
    r = rank
    top_mask = (1 << r) - 1
    tail_mask = ((1 << n) - 1) ^ top_mask
    a_rows = []
    b_rows = []
    for i in range(r):
        row = mat.rows[i]
        if row.x & top_mask != (1 << i):
            raise ValueError(f"row {i}: left block is not the identity")
        if row.z & tail_mask:
            raise ValueError(f"row {i}: upper-right z block is not zero")
        a_rows.append((row.x & tail_mask) >> r)
        b_rows.append(row.z & top_mask)
    for i in range(r, n):
        row = mat.rows[i]
        if row.x:
            raise ValueError(f"row {i}: lower x block is not zero")
        if row.z & tail_mask != (1 << i):
            raise ValueError(f"row {i}: lower-right z block is not the identity")
        e = row.z & top_mask
        for c in range(r):
            if ((e >> c) & 1) != ((a_rows[c] >> (i - r)) & 1):
                raise ValueError("lower-left z block is not A^T")
    for i in range(r):
        for j in range(r):
            if ((b_rows[i] >> j) & 1) != ((b_rows[j] >> i) & 1):
                raise ValueError("B block is not symmetric")
    return tuple(a_rows), tuple(b_rows)
