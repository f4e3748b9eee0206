"""Commuting moment maps on linear maps between an orthogonal and a
symplectic vector space.

V carries a symmetric form, U a skew one, and every X: V -> U gets an
adjoint X* with (Xv, u)_U = (v, X*u)_V.  The two compositions XX* and
X*X land in the symplectic respectively orthogonal algebra, and their
entries Poisson-commute for the constant symplectic structure
omega(A, B) = 2 tr(A B*) on the space of maps.  Witness elements with
prescribed Jordan-type pairs are built from two strings of basis
vectors and then transported to the standard forms; the transport is
exact, so the certificates are too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Dict, List, Optional, Sequence, Tuple

from .liealg import jordan_type, standard_form
from .mpoly import MPoly
from .polymat import PolyMatrix, exp_nilpotent, invert, nullspace, pfaffian, rank, solve_linear
from .scalar import Scalar

# Normalization constant in the moment identity
#   tr((Y X* + X Y*) xi) = c * omega(xi X, Y);
# discovered by solving on one basis pair and verifying on all of them,
# then frozen here.
MOMENT_CONSTANT: Optional[Fraction] = Fraction(1)


@dataclass(frozen=True)
class KPConfig:
    n: int
    G_V: PolyMatrix
    G_U: PolyMatrix

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")
        if self.G_V.nrows != 2 * self.n or not self.G_V.is_symmetric():
            raise ValueError("G_V must be symmetric of size 2n")
        if self.G_U.nrows != 2 * self.n - 2 or not self.G_U.is_skew():
            raise ValueError("G_U must be skew of size 2n-2")
        invert(self.G_V)
        invert(self.G_U)


def default_config(n: int) -> KPConfig:
    return KPConfig(n, standard_form("so", 2 * n), standard_form("sp", 2 * n - 2))


@dataclass(frozen=True)
class KPElement:
    n: int
    i: int
    X: PolyMatrix
    rho_type: Tuple[int, ...]
    pi_type: Tuple[int, ...]


def adjoint(cfg: KPConfig, X: PolyMatrix) -> PolyMatrix:
    """Form adjoint, dispatched on direction by shape."""
    dv, du = 2 * cfg.n, 2 * cfg.n - 2
    if (X.nrows, X.ncols) == (du, dv):
        return invert(cfg.G_V) * X.transpose() * cfg.G_U
    if (X.nrows, X.ncols) == (dv, du):
        return invert(cfg.G_U) * X.transpose() * cfg.G_V
    raise ValueError(f"shape {X.nrows}x{X.ncols} fits neither direction")


def kp_maps(cfg: KPConfig, X: PolyMatrix) -> Tuple[PolyMatrix, PolyMatrix]:
    """(XX*, X*X); membership in the two algebras is asserted exactly."""
    Xs = adjoint(cfg, X)
    pi = X * Xs
    rho = Xs * X
    if not (pi.transpose() * cfg.G_U + cfg.G_U * pi).is_zero():
        raise AssertionError("XX* does not preserve the skew form")
    if not (rho.transpose() * cfg.G_V + cfg.G_V * rho).is_zero():
        raise AssertionError("X*X does not preserve the symmetric form")
    return pi, rho


def pfaffian_locus_check(cfg: KPConfig, X: PolyMatrix) -> bool:
    """rank(X*X) <= 2n-2 < 2n, so the skew matrix G_V (X*X) = Xt G_U X
    must have vanishing pfaffian."""
    _, rho = kp_maps(cfg, X)
    return pfaffian(cfg.G_V * rho).is_zero()


# ---------------------------------------------------------------------------
# witness elements: two strings, then an exact change of basis
# ---------------------------------------------------------------------------


def _string_model(n: int, i: int) -> Tuple[PolyMatrix, PolyMatrix, PolyMatrix]:
    """(M_V, X, X*) in string coordinates.

    String one carries 2n-i vectors of V over 2n-i-1 of U, string two
    i over i-1; X shifts each string onto its U-part and X* shifts
    back one step.  For odd i the V-form is antidiagonal with
    alternating signs on each string separately (the second string
    scaled so the two middle squares have opposite signs, which keeps
    the total form split); for even i = n the two strings pair with
    each other instead.
    """
    m1, m2 = 2 * n - i, i
    dv, du = 2 * n, 2 * n - 2
    X = [[0] * dv for _ in range(du)]
    for j in range(m1 - 1):
        X[j][j] = 1
    for j in range(m2 - 1):
        X[m1 - 1 + j][m1 + j] = 1
    Xs = [[0] * du for _ in range(dv)]
    for j in range(m1 - 1):
        Xs[j + 1][j] = 1
    for j in range(m2 - 1):
        Xs[m1 + j + 1][m1 - 1 + j] = 1

    M = [[0] * dv for _ in range(dv)]
    if i % 2 == 1:
        sigma = -1 if ((m1 - 1) // 2 + (m2 - 1) // 2) % 2 == 0 else 1
        for j in range(m1):
            M[j][m1 - 1 - j] = (-1) ** j
        for j in range(m2):
            M[m1 + j][m1 + m2 - 1 - j] = sigma * (-1) ** j
    elif i == n:
        for j in range(n):
            M[j][m1 + n - 1 - j] = (-1) ** j
            M[m1 + n - 1 - j][j] = (-1) ** j
    else:
        raise ValueError("need i odd or i = n")
    return PolyMatrix(M), PolyMatrix(X), PolyMatrix(Xs)


def _form_value(M: PolyMatrix, v: List[Scalar], w: List[Scalar]) -> Scalar:
    out = Scalar(0)
    for a, row in zip(v, M.rows):
        if a.is_zero():
            continue
        for b, m in zip(w, row):
            out = out + a * m * b
    return out


def _independent_subset(vectors: List[List[Scalar]]) -> List[List[Scalar]]:
    kept: List[List[Scalar]] = []
    for v in vectors:
        if any(not x.is_zero() for x in v):
            trial = kept + [v]
            if rank(PolyMatrix(trial)) == len(trial):
                kept.append(v)
    return kept


def _split_transport(M: PolyMatrix, skew: bool) -> PolyMatrix:
    """T with Tt M T equal to the standard form (antidiagonal ones for
    symmetric M, signed antidiagonal for skew M).  Works by peeling off
    hyperbolic pairs; the isotropic-vector search only ever needs basis
    vectors and small two-term combinations for the string forms."""
    dim = M.nrows
    active = [[Scalar(1 if k == j else 0) for k in range(dim)] for j in range(dim)]
    vs: List[List[Scalar]] = []
    us: List[List[Scalar]] = []
    while active:
        v = None
        if skew:
            v = active[0]
        else:
            for w in active:
                if _form_value(M, w, w).is_zero():
                    v = w
                    break
            if v is None:
                for a in range(len(active)):
                    for b in range(a + 1, len(active)):
                        for t in (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2)):
                            cand = [
                                x + Scalar(t) * y for x, y in zip(active[a], active[b])
                            ]
                            if _form_value(M, cand, cand).is_zero():
                                v = cand
                                break
                        if v is not None:
                            break
                    if v is not None:
                        break
        if v is None:
            raise AssertionError("no isotropic vector found; form is not split")
        u = None
        for w in active:
            if not _form_value(M, v, w).is_zero():
                u = w
                break
        if u is None:
            raise AssertionError("degenerate form")
        c = _form_value(M, v, u).inverse()
        u = [c * x for x in u]
        if not skew:
            half = Scalar(Fraction(1, 2)) * _form_value(M, u, u)
            u = [x - half * y for x, y in zip(u, v)]
        vs.append(v)
        us.append(u)
        vu = _form_value(M, v, u)
        uv = _form_value(M, u, v)
        projected = []
        for w in active:
            cu = _form_value(M, w, u) * vu.inverse()
            cv = _form_value(M, w, v) * uv.inverse()
            projected.append(
                [x - cu * a - cv * b for x, a, b in zip(w, v, u)]
            )
        active = _independent_subset(projected)
    cols = vs + list(reversed(us))
    T = PolyMatrix([[cols[j][k] for j in range(dim)] for k in range(dim)])
    target = standard_form("sp" if skew else "so", dim)
    if (T.transpose() * M * T) != target:
        raise AssertionError("transport failed to reach the standard form")
    return T


def kp_find_element(n: int, i: int) -> KPElement:
    """X with jordan_type(X*X) = [2n-i, i] and jordan_type(XX*) =
    [2n-i-1, i-1] (the zero part dropped when i = 1), for i odd or
    i = n."""
    if not (1 <= i <= n) or (i % 2 == 0 and i != n):
        raise ValueError("need 1 <= i <= n with i odd or i = n")
    M_V, Xm, Xsm = _string_model(n, i)
    # the skew form on U is forced by the adjoint equation Xt M_U = M_V X*
    rhs = M_V * Xsm
    du = 2 * n - 2
    Xt = Xm.transpose()
    cols = []
    for j in range(du):
        sol = solve_linear(Xt, [rhs.entry(r, j) for r in range(2 * n)])
        if sol is None:
            raise AssertionError("string model has no compatible skew form")
        cols.append(sol.particular)
    M_U = PolyMatrix([[cols[j][r] for j in range(du)] for r in range(du)])
    if not M_U.is_skew():
        raise AssertionError("derived form on U is not skew")
    if (invert(M_V) * Xm.transpose() * M_U) != Xsm:
        raise AssertionError("string adjoint mismatch")
    T = _split_transport(M_V, skew=False)
    R = _split_transport(M_U, skew=True)
    X0 = invert(R) * Xm * T
    cfg = default_config(n)
    pi, rho = kp_maps(cfg, X0)
    if rank(X0) != du:
        raise AssertionError("witness is not surjective")
    rho_type = jordan_type(rho)
    pi_type = jordan_type(pi)
    want_rho = (2 * n - i, i)
    want_pi = (2 * n - i - 1,) if i == 1 else (2 * n - i - 1, i - 1)
    if rho_type != want_rho or pi_type != want_pi:
        raise AssertionError(
            f"no element found: got {rho_type}/{pi_type}, wanted {want_rho}/{want_pi}"
        )
    return KPElement(n, i, X0, rho_type, pi_type)


# ---------------------------------------------------------------------------
# the symplectic structure on Hom(V, U)
# ---------------------------------------------------------------------------


def coordinate_names(n: int) -> Tuple[str, ...]:
    return tuple(f"x{r}_{c}" for r in range(2 * n - 2) for c in range(2 * n))


def symbolic_element(cfg: KPConfig) -> PolyMatrix:
    names = coordinate_names(cfg.n)
    du, dv = 2 * cfg.n - 2, 2 * cfg.n
    return PolyMatrix(
        [
            [MPoly.variable(names[r * dv + c], names) for c in range(dv)]
            for r in range(du)
        ]
    )


def omega_matrix(cfg: KPConfig) -> PolyMatrix:
    """Coefficient matrix of omega(A, B) = 2 tr(A B*) on matrix units:
    omega(E_ab, E_cd) = 2 (G_V^-1)_bd (G_U)_ca."""
    du, dv = 2 * cfg.n - 2, 2 * cfg.n
    Minv = invert(cfg.G_V)
    rows = []
    for a in range(du):
        for b in range(dv):
            row = []
            for c in range(du):
                for d in range(dv):
                    row.append(2 * Minv.entry(b, d) * cfg.G_U.entry(c, a))
            rows.append(row)
    omega = PolyMatrix(rows)
    if not omega.is_skew():
        raise AssertionError("omega is not skew")
    return omega


def poisson_tensor(cfg: KPConfig) -> PolyMatrix:
    return invert(omega_matrix(cfg))


def _bracket_table(
    cfg: KPConfig, polys_a: List[MPoly], polys_b: List[MPoly]
) -> List[MPoly]:
    """All brackets {f, g} for f in polys_a, g in polys_b, against the
    constant tensor inverse to omega."""
    names = coordinate_names(cfg.n)
    pi_tensor = poisson_tensor(cfg)
    pairs = [
        (alpha, beta, pi_tensor.entry(alpha, beta))
        for alpha in range(len(names))
        for beta in range(len(names))
        if not pi_tensor.entry(alpha, beta).is_zero()
    ]
    alphas = sorted({alpha for alpha, _, _ in pairs})
    betas = sorted({beta for _, beta, _ in pairs})
    dfs = [{a: f.derivative(names[a]) for a in alphas} for f in polys_a]
    dgs = [{b: g.derivative(names[b]) for b in betas} for g in polys_b]
    out = []
    for df in dfs:
        for dg in dgs:
            acc = MPoly.zero(names)
            for alpha, beta, coef in pairs:
                fa = df[alpha]
                gb = dg[beta]
                if fa.is_zero() or gb.is_zero():
                    continue
                acc = acc + coef * (fa * gb)
            out.append(acc)
    return out


def commutant_check(cfg: KPConfig) -> Dict[str, int]:
    """Every entry of XX* Poisson-commutes with every entry of X*X,
    as an exact polynomial identity in the entries of X."""
    X = symbolic_element(cfg)
    Xs = adjoint(cfg, X)
    pi = X * Xs
    rho = Xs * X
    pi_entries = [pi.entry(r, c) for r in range(pi.nrows) for c in range(pi.ncols)]
    rho_entries = [rho.entry(r, c) for r in range(rho.nrows) for c in range(rho.ncols)]
    brackets = _bracket_table(cfg, pi_entries, rho_entries)
    violations = sum(0 if b.is_zero() else 1 for b in brackets)
    if violations:
        raise AssertionError(f"{violations} bracket pairs fail to commute")
    return {"n": cfg.n, "pairs": len(brackets), "violations": 0}


def sp_basis(cfg: KPConfig) -> List[PolyMatrix]:
    """Basis of the symplectic algebra of G_U, from the kernel of the
    linearized invariance condition xi^T G_U + G_U xi = 0."""
    du = 2 * cfg.n - 2
    rows = []
    for r in range(du):
        for c in range(du):
            row = []
            for a in range(du):
                for b in range(du):
                    # coefficient of xi_ab in (xi^T G_U + G_U xi)_rc:
                    # the first summand contributes when b = r, the
                    # second when b = c
                    val = Scalar(0)
                    if b == r:
                        val = val + cfg.G_U.entry(a, c)
                    if b == c:
                        val = val + cfg.G_U.entry(r, a)
                    row.append(val)
            rows.append(row)
    basis = []
    for vec in nullspace(PolyMatrix(rows)):
        xi = PolyMatrix([[vec[a * du + b] for b in range(du)] for a in range(du)])
        if not (xi.transpose() * cfg.G_U + cfg.G_U * xi).is_zero():
            raise AssertionError("kernel vector is not in the algebra")
        basis.append(xi)
    if len(basis) != du * (du + 1) // 2:
        raise AssertionError(f"sp basis has size {len(basis)}")
    return basis


def moment_identity_check(cfg: KPConfig) -> Fraction:
    """tr((Y X* + X Y*) xi) = c * omega(xi X, Y) for every matrix unit Y
    and every xi in the symplectic algebra, in symbolic X; discovers the
    constant c on the first nondegenerate pair, verifies it on all of
    them, and returns it."""
    du, dv = 2 * cfg.n - 2, 2 * cfg.n
    X = symbolic_element(cfg)
    Xs = adjoint(cfg, X)
    constant: Optional[Scalar] = None
    pairs = []
    basis = sp_basis(cfg)
    for c_ in range(du):
        for d_ in range(dv):
            Y = PolyMatrix(
                [[1 if (r, k) == (c_, d_) else 0 for k in range(dv)] for r in range(du)]
            )
            Ys = adjoint(cfg, Y)
            for xi in basis:
                lhs = ((Y * Xs + X * Ys) * xi).trace()
                rhs = 2 * ((xi * X) * Ys).trace()
                pairs.append((lhs, rhs))
                if constant is None and not rhs.is_zero():
                    exps = next(iter(rhs.terms))
                    constant = lhs.coefficient(exps) * rhs.coefficient(exps).inverse()
    if constant is None:
        raise AssertionError("the right-hand side vanished identically")
    for lhs, rhs in pairs:
        if not (lhs - constant * rhs).is_zero():
            raise AssertionError("moment identity fails for the found constant")
    if not constant.is_rational():
        raise AssertionError("normalization constant is irrational")
    value = constant.r0
    if MOMENT_CONSTANT is not None and value != MOMENT_CONSTANT:
        raise AssertionError(
            f"normalization constant {value} differs from the frozen {MOMENT_CONSTANT}"
        )
    return value


def equivariance_check(cfg: KPConfig, samples: int = 5, seed: int = 0) -> int:
    """pi(B X A^-1) = B pi(X) B^-1 and rho(B X A^-1) = A rho(X) A^-1 for
    exactly-constructed isometries A, B (exponentials of nilpotent
    algebra elements); returns the number of identities verified."""
    rng = Random(seed)
    du, dv = 2 * cfg.n - 2, 2 * cfg.n
    eta = _nilpotent_in_algebra(cfg.G_V, 0, 1, skew=False)
    xi = _nilpotent_in_algebra(cfg.G_U, 0, 1, skew=True)
    A = exp_nilpotent(eta)
    A_inv = exp_nilpotent(eta.scale(Scalar(-1)))
    B = exp_nilpotent(xi)
    B_inv = exp_nilpotent(xi.scale(Scalar(-1)))
    checked = 0
    for _ in range(samples):
        X = PolyMatrix(
            [[rng.randint(-4, 4) for _ in range(dv)] for _ in range(du)]
        )
        pi, rho = kp_maps(cfg, X)
        pi2, rho2 = kp_maps(cfg, B * X * A_inv)
        if pi2 != B * pi * B_inv:
            raise AssertionError("XX* fails equivariance")
        if rho2 != A * rho * A_inv:
            raise AssertionError("X*X fails equivariance")
        checked += 2
    return checked


def _nilpotent_in_algebra(G: PolyMatrix, a: int, b: int, skew: bool) -> PolyMatrix:
    """Strictly upper-triangular element of the isometry algebra of G,
    supported on positions (a, b) and the mirrored pair."""
    m = G.nrows
    for s in (1, -1):
        rows = [[0] * m for _ in range(m)]
        rows[a][b] = 1
        rows[m - 1 - b][m - 1 - a] = s
        cand = PolyMatrix(rows)
        if (cand.transpose() * G + G * cand).is_zero():
            return cand
    raise AssertionError("no mirrored generator preserves the form")


def rank_chain_check(cfg: KPConfig, samples: int = 20, seed: int = 0) -> int:
    """r_k(XX*) <= r_k(X*X) <= r_{k-1}(XX*) on random surjective X."""
    rng = Random(seed)
    du, dv = 2 * cfg.n - 2, 2 * cfg.n
    done = 0
    while done < samples:
        X = PolyMatrix(
            [[rng.randint(-3, 3) for _ in range(dv)] for _ in range(du)]
        )
        if rank(X) != du:
            continue
        pi, rho = kp_maps(cfg, X)
        rp = _rank_sequence(pi, dv)
        rr = _rank_sequence(rho, dv)
        for k in range(1, dv):
            if not (rp[k] <= rr[k] <= rp[k - 1]):
                raise AssertionError(f"rank chain broken at power {k}")
        done += 1
    return done


def _rank_sequence(m: PolyMatrix, upto: int) -> List[int]:
    out = [m.nrows]
    power = PolyMatrix.identity(m.nrows)
    for _ in range(upto):
        power = power * m
        out.append(rank(power))
    return out
