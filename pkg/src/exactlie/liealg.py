"""Classical matrix Lie algebras, sl2-triples and transverse slices.

Algebras are cut out of gl_m by a bilinear form (or tracelessness for type
A) and carried around as explicit Scalar matrices.  Nilpotent elements come
with adapted bases: each Jordan block gets the chain basis whose form is
the alternating binomial antidiagonal, which keeps every structure constant
rational and makes the printed models downstream reproducible literally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .polymat import PolyMatrix, nullspace, rank
from .scalar import Scalar


# ---------------------------------------------------------------------------
# algebras
# ---------------------------------------------------------------------------


def standard_form(family: str, size: int) -> PolyMatrix:
    """Reference bilinear forms: antidiagonal ones for so, antidiagonal
    split signs for sp."""
    if family == "so":
        return PolyMatrix(
            [[1 if i + j == size - 1 else 0 for j in range(size)] for i in range(size)]
        )
    if family == "sp":
        if size % 2:
            raise ValueError("sp needs even size")
        half = size // 2
        rows = [[0] * size for _ in range(size)]
        for i in range(size):
            rows[i][size - 1 - i] = 1 if i < half else -1
        return PolyMatrix(rows)
    raise ValueError(f"no standard form for family {family!r}")


@dataclass
class AlgebraDescriptor:
    family: str
    size: int
    form: Optional[PolyMatrix]
    basis: Tuple[PolyMatrix, ...]
    name: str
    # for form-algebras: position (i, j) whose entry carries coordinate k
    _free_positions: Optional[Tuple[Tuple[int, int], ...]] = field(
        default=None, repr=False
    )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, m: PolyMatrix) -> bool:
        if m.nrows != self.size or m.ncols != self.size:
            return False
        if self.family == "sl":
            return not m.trace()
        g = self.form
        return (m.transpose() * g + g * m).is_zero()

    def coords(self, m: PolyMatrix) -> List[Scalar]:
        """Coordinates of m in the stored basis; raises if m is outside."""
        if not self.contains(m):
            raise ValueError(f"matrix is not in {self.name}")
        if self._free_positions is not None:
            out = [m.entry(i, j) for i, j in self._free_positions]
        else:
            # sl basis: E_ij off-diagonal, then H_k = E_kk - E_(k+1)(k+1);
            # the H coordinates are partial sums of the diagonal
            out = []
            for i in range(self.size):
                for j in range(self.size):
                    if i != j:
                        out.append(m.entry(i, j))
            running = Scalar(0)
            for k in range(self.size - 1):
                running = running + m.entry(k, k)
                out.append(running)
        recombined = self.combination(out)
        if recombined != m:
            raise AssertionError("coordinate readout failed to reproduce the matrix")
        return out

    def combination(self, coeffs: Sequence[Scalar]) -> PolyMatrix:
        if len(coeffs) != self.dim:
            raise ValueError("coefficient count mismatch")
        out = PolyMatrix.zeros(self.size, self.size)
        for c, b in zip(coeffs, self.basis):
            if c:
                out = out + b.scale(c)
        return out


def make_algebra(
    family: str, size: int, form: Optional[PolyMatrix] = None
) -> AlgebraDescriptor:
    """Construct sl/so/sp of the given matrix size.  For so/sp the basis is
    the deterministic kernel basis of M^T G + G M = 0; its free-coordinate
    structure doubles as an O(1) coordinate readout."""
    if family == "sl":
        basis: List[PolyMatrix] = []
        for i in range(size):
            for j in range(size):
                if i == j:
                    continue
                e = PolyMatrix.zeros(size, size)
                e.rows[i][j] = Scalar(1)
                basis.append(e)
        for k in range(size - 1):
            e = PolyMatrix.zeros(size, size)
            e.rows[k][k] = Scalar(1)
            e.rows[k + 1][k + 1] = Scalar(-1)
            basis.append(e)
        return AlgebraDescriptor(
            family, size, None, tuple(basis), f"sl{size}", None
        )
    if family not in ("so", "sp"):
        raise ValueError(f"unknown family {family!r}")
    g = standard_form(family, size) if form is None else form
    if family == "so" and not g.is_symmetric():
        raise ValueError("so needs a symmetric form")
    if family == "sp" and not g.is_skew():
        raise ValueError("sp needs a skew form")
    # constraint rows: (M^T G + G M)_(a,b) = 0, unknowns M_(i,j) flattened
    n2 = size * size
    rows: List[List[Scalar]] = []
    for a in range(size):
        for b in range(size):
            coeff = [Scalar(0)] * n2
            for k in range(size):
                # (M^T G)_(a,b) = sum_k M_(k,a) G_(k,b)
                coeff[k * size + a] = coeff[k * size + a] + g.entry(k, b)
                # (G M)_(a,b) = sum_k G_(a,k) M_(k,b)
                coeff[k * size + b] = coeff[k * size + b] + g.entry(a, k)
            rows.append(coeff)
    kernel = nullspace(PolyMatrix(rows))
    basis = []
    free_positions = []
    for vec in kernel:
        m = PolyMatrix([[vec[i * size + j] for j in range(size)] for i in range(size)])
        basis.append(m)
    # each kernel vector is 1 on its own free column and 0 on the others
    free_cols = []
    for idx, vec in enumerate(kernel):
        ones = [p for p, v in enumerate(vec) if v == Scalar(1)]
        pick = None
        for p in ones:
            if all(not other[p] for j, other in enumerate(kernel) if j != idx):
                pick = p
                break
        if pick is None:
            raise AssertionError("kernel basis lost its free-column structure")
        free_cols.append(pick)
    free_positions = tuple((p // size, p % size) for p in free_cols)
    expected = size * (size - 1) // 2 if family == "so" else size * (size + 1) // 2
    if len(basis) != expected:
        raise AssertionError(
            f"{family}{size} basis has {len(basis)} elements, expected {expected}"
        )
    return AlgebraDescriptor(
        family, size, g, tuple(basis), f"{family}{size}", free_positions
    )


def bracket(x: PolyMatrix, y: PolyMatrix) -> PolyMatrix:
    return x * y - y * x


def ad_matrix(alg: AlgebraDescriptor, x: PolyMatrix) -> PolyMatrix:
    cols = [alg.coords(bracket(x, b)) for b in alg.basis]
    return PolyMatrix([[cols[j][i] for j in range(alg.dim)] for i in range(alg.dim)])


# ---------------------------------------------------------------------------
# Jordan types
# ---------------------------------------------------------------------------


def jordan_type(m: PolyMatrix) -> Tuple[int, ...]:
    """Partition of the size of a nilpotent matrix by Jordan block sizes."""
    n = m.nrows
    ranks = [n]
    power = PolyMatrix.identity(n)
    for _ in range(n + 1):
        power = power * m
        r = rank(power)
        ranks.append(r)
        if r == 0:
            break
    if ranks[-1] != 0:
        raise ValueError("matrix is not nilpotent")
    while len(ranks) < n + 2:
        ranks.append(0)
    parts: List[int] = []
    for j in range(1, n + 1):
        mult = ranks[j - 1] - 2 * ranks[j] + ranks[j + 1]
        parts.extend([j] * mult)
    parts.sort(reverse=True)
    assert sum(parts) == n
    return tuple(parts)


def valid_partition(family: str, size: int, parts: Sequence[int]) -> bool:
    """Jordan types that occur in the family: sp pairs odd parts, so pairs
    even parts, sl allows everything."""
    parts = list(parts)
    if any(p <= 0 for p in parts) or sum(parts) != size:
        return False
    if family == "sl":
        return True
    counts: Dict[int, int] = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    if family == "sp":
        return size % 2 == 0 and all(
            counts.get(p, 0) % 2 == 0 for p in counts if p % 2 == 1
        )
    if family == "so":
        return all(counts.get(p, 0) % 2 == 0 for p in counts if p % 2 == 0)
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# sl2-triples on adapted bases
# ---------------------------------------------------------------------------


def chain_block(m: int) -> Tuple[PolyMatrix, PolyMatrix, PolyMatrix]:
    """The sl2-triple on one Jordan block: x has superdiagonal 1..m-1,
    y the mirrored subdiagonal, h the odd integers m-1, m-3, ..."""
    x = PolyMatrix.zeros(m, m)
    y = PolyMatrix.zeros(m, m)
    h = PolyMatrix.zeros(m, m)
    for k in range(1, m):
        x.rows[k - 1][k] = Scalar(k)
        y.rows[k][k - 1] = Scalar(m - k)
    for k in range(m):
        h.rows[k][k] = Scalar(m - 1 - 2 * k)
    return x, y, h


def block_form(m: int) -> PolyMatrix:
    """Antidiagonal binomial form J with J[k, m+1-k] = (-1)^k / C(m-1, k-1)
    (1-indexed); symmetric for odd m, skew for even m, and the chain triple
    lies in the algebra it defines."""
    j = PolyMatrix.zeros(m, m)
    for k in range(1, m + 1):
        j.rows[k - 1][m - k] = Scalar(
            Fraction((-1) ** k, math.comb(m - 1, k - 1))
        )
    return j


@dataclass
class Triple:
    x: PolyMatrix
    y: PolyMatrix
    h: PolyMatrix


@dataclass
class NilpotentModel:
    algebra: AlgebraDescriptor
    triple: Triple
    partition: Tuple[int, ...]


def jm_triple(family: str, partition: Sequence[int]) -> NilpotentModel:
    """Nilpotent of the given Jordan type with a completed sl2-triple,
    inside sl/so/sp on an adapted form.  Parts come in descending order;
    parts of the parity the form cannot host singly are consumed in equal
    pairs with the hyperbolic two-block form."""
    parts = sorted(partition, reverse=True)
    size = sum(parts)
    if not valid_partition(family, size, parts):
        raise ValueError(f"{tuple(parts)} is not a {family} partition of {size}")
    xs: List[PolyMatrix] = []
    ys: List[PolyMatrix] = []
    hs: List[PolyMatrix] = []
    forms: List[PolyMatrix] = []
    paired_parity = 1 if family == "sp" else 0  # sp pairs odd, so pairs even
    queue = list(parts)
    while queue:
        m = queue.pop(0)
        xb, yb, hb = chain_block(m)
        if family == "sl" or m % 2 != paired_parity:
            xs.append(xb)
            ys.append(yb)
            hs.append(hb)
            if family != "sl":
                forms.append(block_form(m))
        else:
            if not queue or queue[0] != m:
                raise AssertionError("pairing invariant violated")
            queue.pop(0)
            xs.append(PolyMatrix.block_diag([xb, xb]))
            ys.append(PolyMatrix.block_diag([yb, yb]))
            hs.append(PolyMatrix.block_diag([hb, hb]))
            j = block_form(m)
            sign = Scalar(-1) if family == "sp" else Scalar(1)
            top = [[Scalar(0)] * m + list(j.rows[i]) for i in range(m)]
            bottom = [
                [j.rows[jj][i] * sign for jj in range(m)] + [Scalar(0)] * m
                for i in range(m)
            ]
            forms.append(PolyMatrix(top + bottom))
    x = PolyMatrix.block_diag(xs)
    y = PolyMatrix.block_diag(ys)
    h = PolyMatrix.block_diag(hs)
    if family == "sl":
        alg = make_algebra("sl", size)
    else:
        alg = make_algebra(family, size, PolyMatrix.block_diag(forms))
    for m_ in (x, y, h):
        if not alg.contains(m_):
            raise AssertionError("triple member escapes the algebra")
    if bracket(x, y) != h or bracket(h, x) != x.scale(2) or bracket(h, y) != y.scale(-2):
        raise AssertionError("sl2 relations fail")
    if jordan_type(x) != tuple(parts):
        raise AssertionError("constructed nilpotent has the wrong Jordan type")
    return NilpotentModel(algebra=alg, triple=Triple(x, y, h), partition=tuple(parts))


def b_family_model(n: int) -> Tuple[PolyMatrix, PolyMatrix]:
    """Odd orthogonal model with Jordan blocks (2n-3, 3, 1): plain 1-chains
    against alternating antidiagonal blocks.  Returns (form, x)."""
    if n < 3:
        raise ValueError("needs n >= 3")
    sizes = [2 * n - 3, 3, 1]
    form_blocks = []
    x_blocks = []
    for s in sizes:
        fb = PolyMatrix.zeros(s, s)
        for i in range(1, s + 1):
            fb.rows[i - 1][s - i] = Scalar((-1) ** (i - 1))
        form_blocks.append(fb)
        xb = PolyMatrix.zeros(s, s)
        for i in range(s - 1):
            xb.rows[i][i + 1] = Scalar(1)
        x_blocks.append(xb)
    return PolyMatrix.block_diag(form_blocks), PolyMatrix.block_diag(x_blocks)


# ---------------------------------------------------------------------------
# slices
# ---------------------------------------------------------------------------


@dataclass
class SliceChart:
    model: NilpotentModel
    names: Tuple[str, ...]
    vectors: Tuple[PolyMatrix, ...]
    coord_weights: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.names)


def _integer_diag(h: PolyMatrix) -> List[int]:
    out = []
    for i in range(h.nrows):
        v = h.entry(i, i)
        if not v.is_rational() or v.r0.denominator != 1:
            raise ValueError("h is not an integer diagonal matrix")
        out.append(int(v.r0))
    return out


def slodowy_slice(model: NilpotentModel, prefix: str = "c") -> SliceChart:
    """Transverse slice chart at x: a graded basis of ker(ad y).  Basis
    vectors are computed weight by weight (ad h eigenvalue w), so each
    coordinate has the definite weight 2 - w."""
    alg = model.algebra
    x, y, h = model.triple.x, model.triple.y, model.triple.h
    ady = ad_matrix(alg, y)
    adh = ad_matrix(alg, h)
    hdiag = _integer_diag(h)
    weights = sorted({a - b for a in hdiag for b in hdiag}, reverse=True)
    total = len(nullspace(ady))
    vectors: List[PolyMatrix] = []
    vec_weights: List[int] = []
    for w in weights:
        shifted = adh - PolyMatrix.identity(alg.dim).scale(Scalar(w))
        stacked = PolyMatrix([list(r) for r in ady.rows] + [list(r) for r in shifted.rows])
        for coeffs in nullspace(stacked):
            vectors.append(alg.combination(coeffs))
            vec_weights.append(w)
    if len(vectors) != total:
        raise AssertionError("graded kernel misses part of ker(ad y)")
    names = tuple(f"{prefix}{i + 1}" for i in range(len(vectors)))
    coord_weights = tuple(2 - w for w in vec_weights)
    return SliceChart(model, names, tuple(vectors), coord_weights)


def hook_slice(n: int) -> SliceChart:
    """The explicit chart for the sp_2n slice at Jordan type (2n-2, 1, 1).

    Coordinates: t_1..t_(n-1) pair with y^(2j-1)/(2j-1)! in the long block,
    a and b with the two hook-mixing matrices, and x, y, z fill the small
    symplectic block as [[y, -z], [x, -y]].  Every vector is verified to be
    an h-eigenvector spanning ker(ad y) inside the algebra.
    """
    if n < 2:
        raise ValueError("needs n >= 2")
    model = jm_triple("sp", [2 * n - 2, 1, 1])
    alg = model.algebra
    m = 2 * n - 2
    size = 2 * n
    _, yb, _ = chain_block(m)

    def embed_big(mat: PolyMatrix) -> PolyMatrix:
        out = PolyMatrix.zeros(size, size)
        for i in range(m):
            for j in range(m):
                out.rows[i][j] = mat.entry(i, j)
        return out

    def unit(i: int, j: int, c=1) -> PolyMatrix:
        out = PolyMatrix.zeros(size, size)
        out.rows[i][j] = Scalar(c)
        return out

    vectors: List[PolyMatrix] = []
    names: List[str] = []
    weights: List[int] = []
    for j in range(1, n):
        k = 2 * j - 1
        pw = PolyMatrix.identity(m)
        for _ in range(k):
            pw = pw * yb
        vectors.append(embed_big(pw).scale(Scalar(Fraction(1, math.factorial(k)))))
        names.append(f"t{j}")
        weights.append(4 * j)
    vectors.append(unit(m - 1, m + 1) - unit(m, 0))
    names.append("a")
    weights.append(2 * n - 1)
    vectors.append(unit(m - 1, m) + unit(m + 1, 0))
    names.append("b")
    weights.append(2 * n - 1)
    vectors.append(unit(m + 1, m))
    names.append("x")
    weights.append(2)
    vectors.append(unit(m, m) - unit(m + 1, m + 1))
    names.append("y")
    weights.append(2)
    vectors.append(unit(m, m + 1, -1))
    names.append("z")
    weights.append(2)

    y_full = model.triple.y
    h_full = model.triple.h
    coord_rows = []
    for v, w in zip(vectors, weights):
        if not alg.contains(v):
            raise AssertionError("chart vector escapes sp")
        if not bracket(y_full, v).is_zero():
            raise AssertionError("chart vector is not in ker(ad y)")
        if bracket(h_full, v) != v.scale(Scalar(2 - w)):
            raise AssertionError("chart vector has the wrong weight")
        coord_rows.append(alg.coords(v))
    if rank(PolyMatrix(coord_rows)) != len(vectors):
        raise AssertionError("chart vectors are dependent")
    ady = ad_matrix(alg, y_full)
    if len(nullspace(ady)) != len(vectors):
        raise AssertionError("chart does not span ker(ad y)")
    return SliceChart(model, tuple(names), tuple(vectors), tuple(weights))


def transversality_check(model: NilpotentModel) -> Dict[str, int]:
    """Dimension bookkeeping at x: slice dim + orbit dim = algebra dim."""
    alg = model.algebra
    adx = ad_matrix(alg, model.triple.x)
    ady = ad_matrix(alg, model.triple.y)
    slice_dim = len(nullspace(ady))
    orbit_dim = rank(adx)
    return {
        "algebra_dim": alg.dim,
        "slice_dim": slice_dim,
        "orbit_dim": orbit_dim,
        "transversal": int(slice_dim + orbit_dim == alg.dim),
    }
