"""Structure bundles and one checker per axiom system.

Bundles do NOT enforce their laws at construction time: the search module
must be able to hold candidates that fail them.  Validation is explicit via
the ``check_*`` functions, each of which returns a :class:`CheckVerdict`
whose witness is the lexicographically smallest failing tuple.

Aggregate checkers run their constituent laws in a fixed order
(commutation of the structure maps, multiplicativity, main axiom, unit
laws) and report the first failure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exactlin import (
    BilinearOp,
    CheckVerdict,
    Comultiplication,
    LinearMap,
    ShapeError,
    Tensor2,
    Tensor3,
    Vector,
    compose,
    first_failure,
    is_algebra_map,
    map_tensor2,
    maps_commute,
    power,
    vec_add,
    vec_sub,
)


class InvalidParameterError(ValueError):
    """A parameter map fails its own requirements (e.g. is not an algebra
    map).  This is an input error, distinct from a failing law."""


# ---------------------------------------------------------------------------
# Bundles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BiHomAlgebra:
    mu: BilinearOp
    alpha: LinearMap
    beta: LinearMap
    unit: Vector | None = None

    @property
    def dim(self) -> int:
        return self.mu.dim

    def is_hom(self) -> bool:
        return self.alpha == self.beta


@dataclass(frozen=True)
class HomAlgebra:
    mu: BilinearOp
    alpha: LinearMap

    @property
    def dim(self) -> int:
        return self.mu.dim

    def as_bihom(self, unit: Vector | None = None) -> BiHomAlgebra:
        return BiHomAlgebra(self.mu, self.alpha, self.alpha, unit)


@dataclass(frozen=True)
class HomCoalgebra:
    delta: Comultiplication
    alpha: LinearMap

    @property
    def dim(self) -> int:
        return self.delta.dim


@dataclass(frozen=True)
class InfHomBialgebra:
    mu: BilinearOp
    delta: Comultiplication
    alpha: LinearMap

    @property
    def dim(self) -> int:
        return self.mu.dim

    def algebra(self) -> HomAlgebra:
        return HomAlgebra(self.mu, self.alpha)

    def coalgebra(self) -> HomCoalgebra:
        return HomCoalgebra(self.delta, self.alpha)


@dataclass(frozen=True)
class BiHomDendriform:
    prec: BilinearOp
    succ: BilinearOp
    alpha: LinearMap
    beta: LinearMap

    @property
    def dim(self) -> int:
        return self.prec.dim


@dataclass(frozen=True)
class HomPreLie:
    mu: BilinearOp
    alpha: LinearMap

    @property
    def dim(self) -> int:
        return self.mu.dim


@dataclass(frozen=True)
class HomLie:
    bracket: BilinearOp
    alpha: LinearMap

    @property
    def dim(self) -> int:
        return self.bracket.dim


# ---------------------------------------------------------------------------
# Derivation / Rota-Baxter kinds
# ---------------------------------------------------------------------------
#
# A "kind" carries the twisting data of the identity being checked.  The
# paren kind puts the twists inside the operator's argument, the brace kind
# twists the operator's own arguments; the named power kinds are brace kinds
# with extra commutation requirements on the candidate map.

@dataclass(frozen=True)
class TauSigmaDerivation:
    """D(ab) = D(a) tau(b) + sigma(a) D(b)."""
    tau: LinearMap
    sigma: LinearMap


@dataclass(frozen=True)
class AlphaPowerDerivation:
    """D(ab) = D(a) alpha^k(b) + alpha^k(a) D(b), with D alpha = alpha D."""
    alpha: LinearMap
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise InvalidParameterError("exponent must be nonnegative")


DerivationKind = TauSigmaDerivation | AlphaPowerDerivation


@dataclass(frozen=True)
class ParenRB:
    """R(a) R(b) = R( sigma(R(a)) b + a tau(R(b)) )."""
    sigma: LinearMap
    tau: LinearMap


@dataclass(frozen=True)
class BraceRB:
    """R(sigma(a)) R(tau(b)) = R( sigma(a) R(b) + R(a) tau(b) )."""
    sigma: LinearMap
    tau: LinearMap


@dataclass(frozen=True)
class AlphaPowerRB:
    """Brace kind with sigma = tau = alpha^n; R must commute with alpha."""
    alpha: LinearMap
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameterError("exponent must be nonnegative")


@dataclass(frozen=True)
class AlphaBetaRB:
    """Brace kind with sigma = tau = alpha beta; R must commute with both."""
    alpha: LinearMap
    beta: LinearMap


@dataclass(frozen=True)
class LieAlphaPowerRB:
    """[R(a^n x), R(a^n y)] = R([a^n x, R y] + [R x, a^n y]) on a bracket."""
    alpha: LinearMap
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameterError("exponent must be nonnegative")


RBKind = ParenRB | BraceRB | AlphaPowerRB | AlphaBetaRB | LieAlphaPowerRB


# ---------------------------------------------------------------------------
# Law primitives
# ---------------------------------------------------------------------------

def _require_square(f: LinearMap, dim: int, what: str) -> None:
    if f.dim_in != f.dim_out or f.dim_in != dim:
        raise ShapeError(f"{what} must be a {dim}x{dim} map")


def _require_algebra_map(f: LinearMap, m: BilinearOp, name: str) -> None:
    _require_square(f, m.dim, name)
    v = is_algebra_map(f, m)
    if not v:
        raise InvalidParameterError(
            f"{name} is not an algebra map (fails at {v.witness.indices})")


def _commutation_verdict(f: LinearMap, g: LinearMap, law: str) -> CheckVerdict:
    """Pass iff f g = g f, witnessing the first differing basis image."""
    fg, gf = compose(f, g), compose(g, f)
    for j in range(fg.dim_in):
        a, b = fg.column(j), gf.column(j)
        if a != b:
            return CheckVerdict.fail(law, (j,), a, b)
    return CheckVerdict.ok()


def _multiplicative_verdict(f: LinearMap, m: BilinearOp, law: str) -> CheckVerdict:
    v = is_algebra_map(f, m)
    if v.passed:
        return v
    return CheckVerdict.fail(law, v.witness.indices, v.witness.lhs, v.witness.rhs)


def _triple_identity(dim: int, lhs, rhs, law: str) -> CheckVerdict:
    for i, j, k in itertools.product(range(dim), repeat=3):
        a, b = lhs(i, j, k), rhs(i, j, k)
        if a != b:
            return CheckVerdict.fail(law, (i, j, k), a, b)
    return CheckVerdict.ok()


def _pair_identity(dim: int, lhs, rhs, law: str) -> CheckVerdict:
    for i, j in itertools.product(range(dim), repeat=2):
        a, b = lhs(i, j), rhs(i, j)
        if a != b:
            return CheckVerdict.fail(law, (i, j), a, b)
    return CheckVerdict.ok()


# ---------------------------------------------------------------------------
# Checkers
# ---------------------------------------------------------------------------

def check_bihom_associative(a: BiHomAlgebra) -> CheckVerdict:
    """Full validation of a BiHom-associative algebra.

    Order: structure maps commute, alpha/beta multiplicative, the twisted
    associativity alpha(x)(yz) = (xy)beta(z), then unit laws if a unit is
    present.  The Hom case is alpha = beta; the classical case is both
    equal to the identity.
    """
    mu, al, be = a.mu, a.alpha, a.beta
    _require_square(al, mu.dim, "alpha")
    _require_square(be, mu.dim, "beta")
    d = mu.dim

    def assoc_lhs(i, j, k):
        return mu.apply(al.column(i), mu.basis_product(j, k))

    def assoc_rhs(i, j, k):
        return mu.apply(mu.basis_product(i, j), be.column(k))

    verdicts = [
        _commutation_verdict(al, be, "structure-maps-commute"),
        _multiplicative_verdict(al, mu, "alpha-multiplicative"),
        _multiplicative_verdict(be, mu, "beta-multiplicative"),
        _triple_identity(d, assoc_lhs, assoc_rhs, "bihom-associativity"),
    ]
    v = first_failure(verdicts)
    if not v.passed or a.unit is None:
        return v
    one = a.unit
    if al.apply(one) != one:
        return CheckVerdict.fail("unit-alpha-fixed", (), al.apply(one), one)
    if be.apply(one) != one:
        return CheckVerdict.fail("unit-beta-fixed", (), be.apply(one), one)
    for i in range(d):
        e = tuple(Fraction(1 if t == i else 0) for t in range(d))
        lhs = mu.apply(e, one)
        rhs = al.column(i)
        if lhs != rhs:
            return CheckVerdict.fail("right-unit", (i,), lhs, rhs)
        lhs = mu.apply(one, e)
        rhs = be.column(i)
        if lhs != rhs:
            return CheckVerdict.fail("left-unit", (i,), lhs, rhs)
    return CheckVerdict.ok()


def check_hom_associative(h: HomAlgebra) -> CheckVerdict:
    return check_bihom_associative(h.as_bihom())


def check_classical_associative(mu: BilinearOp, unit: Vector | None = None) -> CheckVerdict:
    ident = LinearMap.identity(mu.dim)
    return check_bihom_associative(BiHomAlgebra(mu, ident, ident, unit))


def is_commutative(mu: BilinearOp) -> bool:
    return mu == mu.opposite()


def check_hom_coassociative(c: HomCoalgebra) -> CheckVerdict:
    """(alpha (x) alpha) o Delta = Delta o alpha, then Hom-coassociativity
    (Delta (x) alpha) o Delta = (alpha (x) Delta) o Delta."""
    delta, al = c.delta, c.alpha
    _require_square(al, delta.dim, "alpha")
    d = delta.dim
    for m in range(d):
        lhs = map_tensor2(al, al, delta.image(m))
        rhs_grid = [[Fraction(0)] * d for _ in range(d)]
        for p in range(d):
            cmp_ = al.entries[p][m]
            if not cmp_:
                continue
            for j in range(d):
                for k in range(d):
                    if delta.cube[p][j][k]:
                        rhs_grid[j][k] += cmp_ * delta.cube[p][j][k]
        rhs = Tensor2(rhs_grid)
        if lhs != rhs:
            return CheckVerdict.fail("comultiplicative", (m,),
                                     [x for r in lhs.coeffs for x in r],
                                     [x for r in rhs.coeffs for x in r])
    for m in range(d):
        left = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
        right = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
        for p in range(d):
            for q in range(d):
                cpq = delta.cube[m][p][q]
                if not cpq:
                    continue
                for j in range(d):
                    for k in range(d):
                        if delta.cube[p][j][k]:
                            for t in range(d):
                                if al.entries[t][q]:
                                    left[j][k][t] += cpq * delta.cube[p][j][k] * al.entries[t][q]
                for j in range(d):
                    if al.entries[j][p]:
                        for k in range(d):
                            for t in range(d):
                                if delta.cube[q][k][t]:
                                    right[j][k][t] += cpq * al.entries[j][p] * delta.cube[q][k][t]
        lt, rt = Tensor3(left), Tensor3(right)
        if lt != rt:
            return CheckVerdict.fail("hom-coassociativity", (m,),
                                     lt.flatten(), rt.flatten())
    return CheckVerdict.ok()


def check_infinitesimal_compat(b: InfHomBialgebra) -> CheckVerdict:
    """Delta(ab) = alpha(a) b_1 (x) alpha(b_2) + alpha(a_1) (x) a_2 alpha(b)
    on all basis pairs; the classical case alpha = id says Delta is a
    derivation into the bimodule A (x) A."""
    mu, delta, al = b.mu, b.delta, b.alpha
    _require_square(al, mu.dim, "alpha")
    if delta.dim != mu.dim:
        raise ShapeError("product and coproduct dims differ")
    d = mu.dim
    for i, j in itertools.product(range(d), repeat=2):
        prod = mu.basis_product(i, j)
        lhs_grid = [[Fraction(0)] * d for _ in range(d)]
        for m in range(d):
            if prod[m]:
                for p in range(d):
                    for q in range(d):
                        if delta.cube[m][p][q]:
                            lhs_grid[p][q] += prod[m] * delta.cube[m][p][q]
        rhs_grid = [[Fraction(0)] * d for _ in range(d)]
        ai = al.column(i)
        aj = al.column(j)
        for p in range(d):
            for q in range(d):
                cjq = delta.cube[j][p][q]
                if cjq:
                    left_vec = mu.apply(ai, [Fraction(1 if t == p else 0) for t in range(d)])
                    right_vec = al.column(q)
                    for s in range(d):
                        if left_vec[s]:
                            for t in range(d):
                                if right_vec[t]:
                                    rhs_grid[s][t] += cjq * left_vec[s] * right_vec[t]
                ciq = delta.cube[i][p][q]
                if ciq:
                    right_vec = mu.apply([Fraction(1 if t == q else 0) for t in range(d)], aj)
                    left_vec = al.column(p)
                    for s in range(d):
                        if left_vec[s]:
                            for t in range(d):
                                if right_vec[t]:
                                    rhs_grid[s][t] += ciq * left_vec[s] * right_vec[t]
        lhs, rhs = Tensor2(lhs_grid), Tensor2(rhs_grid)
        if lhs != rhs:
            return CheckVerdict.fail("coproduct-derivation", (i, j),
                                     [x for r in lhs.coeffs for x in r],
                                     [x for r in rhs.coeffs for x in r])
    return CheckVerdict.ok()


def check_inf_hom_bialgebra(b: InfHomBialgebra) -> CheckVerdict:
    """Hom-algebra laws, then Hom-coalgebra laws, then compatibility."""
    return first_failure([
        check_hom_associative(b.algebra()),
        check_hom_coassociative(b.coalgebra()),
        check_infinitesimal_compat(b),
    ])


def check_bihom_dendriform(d: BiHomDendriform) -> CheckVerdict:
    """Multiplicativity of both structure maps w.r.t. both operations, then
    the three splitting axioms in the fixed order left / middle / right."""
    prec, succ, al, be = d.prec, d.succ, d.alpha, d.beta
    if prec.dim != succ.dim:
        raise ShapeError("prec and succ dims differ")
    _require_square(al, prec.dim, "alpha")
    _require_square(be, prec.dim, "beta")
    n = prec.dim

    def dend_left_lhs(i, j, k):
        return prec.apply(prec.basis_product(i, j), be.column(k))

    def dend_left_rhs(i, j, k):
        inner = vec_add(prec.basis_product(j, k), succ.basis_product(j, k))
        return prec.apply(al.column(i), inner)

    def dend_middle_lhs(i, j, k):
        return prec.apply(succ.basis_product(i, j), be.column(k))

    def dend_middle_rhs(i, j, k):
        return succ.apply(al.column(i), prec.basis_product(j, k))

    def dend_right_lhs(i, j, k):
        return succ.apply(al.column(i), succ.basis_product(j, k))

    def dend_right_rhs(i, j, k):
        outer = vec_add(prec.basis_product(i, j), succ.basis_product(i, j))
        return succ.apply(outer, be.column(k))

    return first_failure([
        _commutation_verdict(al, be, "structure-maps-commute"),
        _multiplicative_verdict(al, prec, "alpha-prec-multiplicative"),
        _multiplicative_verdict(al, succ, "alpha-succ-multiplicative"),
        _multiplicative_verdict(be, prec, "beta-prec-multiplicative"),
        _multiplicative_verdict(be, succ, "beta-succ-multiplicative"),
        _triple_identity(n, dend_left_lhs, dend_left_rhs, "dend-left"),
        _triple_identity(n, dend_middle_lhs, dend_middle_rhs, "dend-middle"),
        _triple_identity(n, dend_right_lhs, dend_right_rhs, "dend-right"),
    ])


def check_hom_prelie(p: HomPreLie) -> CheckVerdict:
    """alpha multiplicative and the associator
    alpha(x)(yz) - (xy)alpha(z) symmetric in x, y."""
    mu, al = p.mu, p.alpha
    _require_square(al, mu.dim, "alpha")
    d = mu.dim

    def associator(i, j, k):
        return vec_sub(mu.apply(al.column(i), mu.basis_product(j, k)),
                       mu.apply(mu.basis_product(i, j), al.column(k)))

    return first_failure([
        _multiplicative_verdict(al, mu, "alpha-multiplicative"),
        _triple_identity(d, associator,
                         lambda i, j, k: associator(j, i, k),
                         "prelie-associator-symmetry"),
    ])


def check_hom_novikov(p: HomPreLie) -> CheckVerdict:
    """Hom-pre-Lie laws plus right commutativity (xy)alpha(z) = (xz)alpha(y)."""
    v = check_hom_prelie(p)
    if not v.passed:
        return v
    mu, al = p.mu, p.alpha
    return _triple_identity(
        mu.dim,
        lambda i, j, k: mu.apply(mu.basis_product(i, j), al.column(k)),
        lambda i, j, k: mu.apply(mu.basis_product(i, k), al.column(j)),
        "right-commutativity")


def check_hom_lie(l: HomLie) -> CheckVerdict:
    """Skew-symmetry, bracket-multiplicativity of alpha, Hom-Jacobi."""
    br, al = l.bracket, l.alpha
    _require_square(al, br.dim, "alpha")
    d = br.dim

    def skew(i, j):
        return br.basis_product(i, j)

    def neg_swapped(i, j):
        return tuple(-x for x in br.basis_product(j, i))

    def jacobi_lhs(i, j, k):
        t1 = br.apply(al.column(i), br.basis_product(j, k))
        t2 = br.apply(al.column(j), br.basis_product(k, i))
        t3 = br.apply(al.column(k), br.basis_product(i, j))
        return vec_add(vec_add(t1, t2), t3)

    zero = (Fraction(0),) * d
    return first_failure([
        _pair_identity(d, skew, neg_swapped, "skew-symmetry"),
        _multiplicative_verdict(al, br, "alpha-bracket-multiplicative"),
        _triple_identity(d, jacobi_lhs, lambda i, j, k: zero, "hom-jacobi"),
    ])


def check_derivation(D: LinearMap, m: BilinearOp, kind: DerivationKind) -> CheckVerdict:
    """Twisted Leibniz rule of the given kind on all basis pairs.

    Parameter maps are required to be algebra maps; a bad parameter raises
    InvalidParameterError rather than failing the law.
    """
    _require_square(D, m.dim, "D")
    if isinstance(kind, TauSigmaDerivation):
        _require_algebra_map(kind.tau, m, "tau")
        _require_algebra_map(kind.sigma, m, "sigma")
        tau, sigma = kind.tau, kind.sigma
        pre = CheckVerdict.ok()
    elif isinstance(kind, AlphaPowerDerivation):
        _require_algebra_map(kind.alpha, m, "alpha")
        tau = sigma = power(kind.alpha, kind.k)
        pre = _commutation_verdict(D, kind.alpha, "commutes-with-alpha")
    else:
        raise TypeError(f"unknown derivation kind: {kind!r}")
    if not pre.passed:
        return pre

    def lhs(i, j):
        return D.apply(m.basis_product(i, j))

    def rhs(i, j):
        t1 = m.apply(D.column(i), tau.column(j))
        t2 = m.apply(sigma.column(i), D.column(j))
        return vec_add(t1, t2)

    return _pair_identity(m.dim, lhs, rhs, "leibniz")


def check_rota_baxter(R: LinearMap, m: BilinearOp, kind: RBKind) -> CheckVerdict:
    """Weight-zero Rota-Baxter identity of the given kind on all basis pairs.

    Commutation requirements carried by the kind (the candidate R against
    the ambient structure maps) are themselves checked laws; non-algebra-map
    parameters raise InvalidParameterError.
    """
    _require_square(R, m.dim, "R")
    pre: list[CheckVerdict] = []
    if isinstance(kind, ParenRB):
        _require_algebra_map(kind.sigma, m, "sigma")
        _require_algebra_map(kind.tau, m, "tau")

        def lhs(i, j):
            return m.apply(R.column(i), R.column(j))

        def rhs(i, j):
            inner = vec_add(m.apply(kind.sigma.apply(R.column(i)),
                                    tuple(Fraction(1 if t == j else 0) for t in range(m.dim))),
                            m.apply(tuple(Fraction(1 if t == i else 0) for t in range(m.dim)),
                                    kind.tau.apply(R.column(j))))
            return R.apply(inner)

        return _pair_identity(m.dim, lhs, rhs, "rb-identity")

    if isinstance(kind, BraceRB):
        _require_algebra_map(kind.sigma, m, "sigma")
        _require_algebra_map(kind.tau, m, "tau")
        sigma, tau = kind.sigma, kind.tau
    elif isinstance(kind, AlphaPowerRB):
        _require_algebra_map(kind.alpha, m, "alpha")
        sigma = tau = power(kind.alpha, kind.n)
        pre.append(_commutation_verdict(R, kind.alpha, "commutes-with-alpha"))
    elif isinstance(kind, AlphaBetaRB):
        _require_algebra_map(kind.alpha, m, "alpha")
        _require_algebra_map(kind.beta, m, "beta")
        if not maps_commute(kind.alpha, kind.beta):
            raise InvalidParameterError("alpha and beta do not commute")
        sigma = tau = compose(kind.alpha, kind.beta)
        pre.append(_commutation_verdict(R, kind.alpha, "commutes-with-alpha"))
        pre.append(_commutation_verdict(R, kind.beta, "commutes-with-beta"))
    elif isinstance(kind, LieAlphaPowerRB):
        _require_algebra_map(kind.alpha, m, "alpha")
        sigma = tau = power(kind.alpha, kind.n)
        pre.append(_commutation_verdict(R, kind.alpha, "commutes-with-alpha"))
    else:
        raise TypeError(f"unknown Rota-Baxter kind: {kind!r}")

    v = first_failure(pre)
    if not v.passed:
        return v

    def lhs(i, j):
        return m.apply(R.apply(sigma.column(i)), R.apply(tau.column(j)))

    def rhs(i, j):
        inner = vec_add(m.apply(sigma.column(i), R.column(j)),
                        m.apply(R.column(i), tau.column(j)))
        return R.apply(inner)

    return _pair_identity(m.dim, lhs, rhs, "rb-identity")


def check_aybe(a: BiHomAlgebra, r: Tensor2) -> CheckVerdict:
    """Yang-Baxter check: invariance of r under both structure maps and
    vanishing of the residue tensor."""
    from .constructions import aybe_residue  # local import avoids a cycle

    if r.dim != a.dim:
        raise ShapeError("r does not live on the algebra")
    inv_a = map_tensor2(a.alpha, a.alpha, r)
    if inv_a != r:
        diff = _first_tensor2_diff(inv_a, r)
        return CheckVerdict.fail("alpha-invariance", diff,
                                 (inv_a.coeffs[diff[0]][diff[1]],),
                                 (r.coeffs[diff[0]][diff[1]],))
    inv_b = map_tensor2(a.beta, a.beta, r)
    if inv_b != r:
        diff = _first_tensor2_diff(inv_b, r)
        return CheckVerdict.fail("beta-invariance", diff,
                                 (inv_b.coeffs[diff[0]][diff[1]],),
                                 (r.coeffs[diff[0]][diff[1]],))
    res = aybe_residue(a, r)
    if not res.is_zero():
        d = res.dim
        for i, j, k in itertools.product(range(d), repeat=3):
            if res.coeffs[i][j][k]:
                return CheckVerdict.fail("yang-baxter-residue", (i, j, k),
                                         (res.coeffs[i][j][k],), (Fraction(0),))
    return CheckVerdict.ok()


def _first_tensor2_diff(s: Tensor2, t: Tensor2) -> tuple[int, int]:
    for i, j in itertools.product(range(s.dim), repeat=2):
        if s.coeffs[i][j] != t.coeffs[i][j]:
            return (i, j)
    raise AssertionError("tensors are equal")
