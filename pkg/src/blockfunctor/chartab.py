"""Exact character tables over a prime field.

Character values are residues modulo a prime q with q = 1 (mod exponent)
and q > 2|G|: the class-multiplication matrices are simultaneously
diagonalized over F_q, the one-dimensional common eigenspaces are the
central characters, and degrees are recovered as the unique integer
square roots below sqrt(|G|).  Every reported quantity (degrees, fixed
point dimensions) is a bounded rational integer, so residue arithmetic
plus bounded lifting is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import PRIME_SEARCH_CAP, max_order
from .errors import DomainError, InternalCheckError, SizeBoundError
from .permgroup import PermGroup, Subgroup, is_prime


def character_prime(exponent: int, order: int, cap: int = PRIME_SEARCH_CAP) -> int:
    """Smallest prime q = 1 (mod exponent) with q > 2*order."""
    q = 2 * order + 1
    q += (-(q - 1)) % exponent
    while q <= cap:
        if is_prime(q):
            return q
        q += exponent
    raise DomainError(f"no suitable prime below {cap} for exponent {exponent}")


# -- small exact linear algebra mod q ---------------------------------------

def _rref(rows, q):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] % q), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][col], -1, q)
        rows[r] = [v * inv % q for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] % q:
                f = rows[i][col]
                rows[i] = [(v - f * w) % q for v, w in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r]], pivots


def _kernel_basis(mat, q):
    """Basis of the null space of a square matrix, as rref'd row vectors."""
    n = len(mat)
    reduced, pivots = _rref(mat, q)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * n
        vec[fc] = 1
        for row, pc in zip(reduced, pivots):
            vec[pc] = (-row[fc]) % q
        basis.append(tuple(vec))
    basis, _ = _rref(basis, q)
    return basis


def _charpoly(mat, q):
    """Characteristic polynomial coefficients [1, c1, ..., cn] mod q."""
    n = len(mat)
    coeffs = [1]
    work = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        work = [
            [sum(mat[i][t] * work[t][j] for t in range(n)) % q for j in range(n)]
            for i in range(n)
        ]
        trace = sum(work[i][i] for i in range(n)) % q
        ck = (-trace * pow(k, -1, q)) % q
        coeffs.append(ck)
        for i in range(n):
            work[i][i] = (work[i][i] + ck) % q
    return coeffs


def _poly_roots(coeffs, q):
    roots = []
    for x in range(q):
        acc = 0
        for c in coeffs:
            acc = (acc * x + c) % q
        if acc == 0:
            roots.append(x)
    return roots


def _pivot_columns(rref_rows):
    pivots = []
    for row in rref_rows:
        pivots.append(next(c for c, v in enumerate(row) if v))
    return pivots


@dataclass(frozen=True)
class CharacterTable:
    """Irreducible character values of a group as residues mod q.

    Rows are characters sorted by (degree, value columns); columns follow
    the canonical class order with the identity class first.
    """

    group: PermGroup
    modulus: int
    class_reps: tuple
    class_sizes: tuple
    degrees: tuple
    values: tuple  # tuple of rows, each a tuple of residues

    @property
    def n_classes(self) -> int:
        return len(self.class_reps)

    def value(self, row: int, element) -> int:
        return self.values[row][self.group.class_index_of(element)]


def _class_matrix(classes, class_of, i, q):
    """Matrix of multiplication by the i-th class sum acting on class sums."""
    k = len(classes)
    mat = [[0] * k for _ in range(k)]
    for col in range(k):
        z = classes[col].rep
        for x in classes[i].elements:
            mat[class_of[x.inverse() * z]][col] += 1
    return [[v % q for v in row] for row in mat]


def _split_space(basis, mat, k, q):
    """Split a common eigenspace sum along one class matrix.

    The basis rows must be in rref; returns a list of rref'd sub-bases,
    one per eigenvalue of the restricted operator.
    """
    d = len(basis)
    pivots = _pivot_columns(basis)
    images = []
    for vec in basis:
        img = tuple(sum(mat[r][c] * vec[c] for c in range(k)) % q for r in range(k))
        images.append(img)
    coords = []
    for img in images:
        c = [img[pc] for pc in pivots]
        rebuilt = [0] * k
        for coeff, row in zip(c, basis):
            rebuilt = [(a + coeff * b) % q for a, b in zip(rebuilt, row)]
        if tuple(rebuilt) != img:
            raise InternalCheckError("class matrix leaves a split subspace")
        coords.append(c)
    # operator on coordinate columns: basis vector a maps to sum coords[a][b] * basis[b]
    op = [[coords[a][b] for a in range(d)] for b in range(d)]
    pieces = []
    covered = 0
    for lam in _poly_roots(_charpoly(op, q), q):
        shifted = [
            [(op[r][c] - (lam if r == c else 0)) % q for c in range(d)]
            for r in range(d)
        ]
        kvecs = _kernel_basis(shifted, q)
        if not kvecs:
            continue
        lifted = []
        for kvec in kvecs:
            row = [0] * k
            for coeff, bvec in zip(kvec, basis):
                row = [(a + coeff * b) % q for a, b in zip(row, bvec)]
            lifted.append(tuple(row))
        reduced, _ = _rref(lifted, q)
        pieces.append(reduced)
        covered += len(reduced)
    if covered != d:
        raise InternalCheckError("restricted class matrix is not diagonalizable")
    return pieces


def character_table(G: PermGroup) -> CharacterTable:
    """The exact character table of G over a suitable prime field."""
    if G.order > max_order():
        raise SizeBoundError(
            f"character table refused for order {G.order} > {max_order()}"
        )
    classes = G.conjugacy_data()
    k = len(classes)
    q = character_prime(G.exponent(), G.order)
    class_of = {x: i for i, cls in enumerate(classes) for x in cls.elements}
    inv_class = [class_of[cls.rep.inverse()] for cls in classes]
    sizes = [cls.size for cls in classes]

    spaces = [[tuple(int(i == j) for j in range(k)) for i in range(k)]]
    for i in range(1, k):
        if all(len(b) == 1 for b in spaces):
            break
        mat = _class_matrix(classes, class_of, i, q)
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
            else:
                new_spaces.extend(_split_space(basis, mat, k, q))
        spaces = new_spaces
    if any(len(b) != 1 for b in spaces):
        raise InternalCheckError("class matrices failed to separate the characters")

    rows = []
    for (vec,) in spaces:
        if vec[0] % q == 0:
            raise InternalCheckError("central character vanishes on the identity")
        scale = pow(vec[0], -1, q)
        omega = [v * scale % q for v in vec]
        total = 0
        for j in range(k):
            total = (total + omega[j] * omega[inv_class[j]] * pow(sizes[j], -1, q)) % q
        rhs = G.order * pow(total, -1, q) % q
        degree = next(
            (d for d in range(1, math.isqrt(G.order) + 1) if d * d % q == rhs),
            None,
        )
        if degree is None:
            raise InternalCheckError("no integral degree matches a central character")
        values = tuple(
            degree * omega[j] % q * pow(sizes[j], -1, q) % q for j in range(k)
        )
        rows.append((degree, values))
    rows.sort()

    table = CharacterTable(
        group=G,
        modulus=q,
        class_reps=tuple(cls.rep for cls in classes),
        class_sizes=tuple(sizes),
        degrees=tuple(d for d, _ in rows),
        values=tuple(v for _, v in rows),
    )
    _verify_table(table)
    return table


def _verify_table(table: CharacterTable):
    q = table.modulus
    G = table.group
    k = table.n_classes
    if sum(d * d for d in table.degrees) != G.order:
        raise InternalCheckError("degrees do not satisfy the order identity")
    inv_class = [G.class_index_of(rep.inverse()) for rep in table.class_reps]
    order_inv = pow(G.order % q, -1, q)
    for a in range(k):
        for b in range(a, k):
            total = 0
            for j in range(k):
                total = (
                    total
                    + table.class_sizes[j]
                    * table.values[a][j]
                    * table.values[b][inv_class[j]]
                ) % q
            if total * order_inv % q != (1 if a == b else 0):
                raise InternalCheckError("row orthogonality fails mod q")


def fixed_point_dim(table: CharacterTable, row: int, H: Subgroup) -> int:
    """Dimension of the H-fixed points on the row-th irreducible module.

    Computed as the residue of (1/|H|) * sum of character values over H,
    lifted to the unique integer in [0, degree].
    """
    if not 0 <= row < table.n_classes:
        raise DomainError(f"character index {row} out of range")
    G = table.group
    if H.parent is not G:
        for g in H.generators:
            if not G.contains(g):
                raise DomainError("subgroup does not live in the table's group")
    q = table.modulus
    total = 0
    for h in H.elements():
        total = (total + table.values[row][G.class_index_of(h)]) % q
    value = total * pow(H.order % q, -1, q) % q
    if value > table.degrees[row]:
        raise InternalCheckError(
            f"fixed-point dimension lift {value} exceeds the degree "
            f"{table.degrees[row]}"
        )
    return value
