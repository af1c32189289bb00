"""Finite-dimensional Hopf algebras with integral data, and the Frobenius
structure they induce: Delta(x) = (m @ S)(x @ Delta_h(Lambda)), eps = lambda.
"""

from dataclasses import dataclass
from typing import Tuple

from .catalog import GroupTable
from .errors import HypothesisMismatch, PreconditionError, ShapeError
from .extended import ExtFrobAlgebra, make_ext
from .frobenius import (
    AlgebraData,
    CoalgebraData,
    FrobAlgebra,
    Report,
    algebra_morphism_report,
    check_algebra,
    check_coalgebra,
    compare,
    left_mult,
)
from .linalg import Mat, Vec, kron, kron_all, mat_mul, swap_map
from .scalars import CycField


@dataclass(frozen=True)
class HopfAlgebra:
    field: CycField
    dim: int
    m: Mat
    u: Vec
    delta_h: Mat
    eps_h: Mat
    S: Mat
    S_inv: Mat
    Lambda: Vec
    lam: Mat
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        d = self.dim
        shapes = {
            "m": (self.m.shape, (d, d * d)),
            "delta_h": (self.delta_h.shape, (d * d, d)),
            "eps_h": (self.eps_h.shape, (1, d)),
            "S": (self.S.shape, (d, d)),
            "S_inv": (self.S_inv.shape, (d, d)),
            "lambda": (self.lam.shape, (1, d)),
        }
        for name, (got, want) in shapes.items():
            if got != want:
                raise ShapeError(f"{name} must be {want}, got {got}")
        if len(self.u) != d or len(self.Lambda) != d:
            raise ShapeError("u and Lambda must have length dim")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"e{i}" for i in range(d)))

    @property
    def algebra(self) -> AlgebraData:
        return AlgebraData(self.field, self.dim, self.m, self.u, self.labels)

    @property
    def coalgebra(self) -> CoalgebraData:
        return CoalgebraData(self.field, self.dim, self.delta_h, self.eps_h)


def group_hopf_algebra(G: GroupTable, F: CycField) -> HopfAlgebra:
    """kG: g group-like, S(g) = g^-1, Lambda = sum of elements, lambda = delta_e."""
    n = G.order
    m = Mat.from_dict(F, n, n * n, {(G.mul(a, b), a * n + b): 1 for a in range(n) for b in range(n)})
    u = Vec.basis(F, n, G.identity)
    dh = Mat.from_dict(F, n * n, n, {(a * n + a, a): 1 for a in range(n)})
    eh = Mat.from_rows(F, [[1] * n])
    S = Mat.from_dict(F, n, n, {(G.inv[a], a): 1 for a in range(n)})
    Lam = Vec(F, [1] * n)
    lam = Vec.basis(F, n, G.identity).as_row()
    return HopfAlgebra(F, n, m, u, dh, eh, S, S, Lam, lam, G.labels)


def check_hopf(h: HopfAlgebra) -> Report:
    F, d = h.field, h.dim
    I = Mat.identity(F, d)
    c = swap_map(d, d, F)
    rep = Report()
    rep.extend(check_algebra(h.algebra))
    rep.extend(check_coalgebra(h.coalgebra))
    mid = kron_all(I, c, I)
    one = Mat.identity(F, 1)
    rep.add(compare("delta_multiplicative", mat_mul(h.delta_h, h.m),
                    mat_mul(kron(h.m, h.m), mat_mul(mid, kron(h.delta_h, h.delta_h))), (d, d), (d, d)))
    rep.add(compare("delta_unital", h.delta_h.apply(h.u).as_column(),
                    kron(h.u.as_column(), h.u.as_column()), (1,), (d, d)))
    rep.add(compare("eps_multiplicative", mat_mul(h.eps_h, h.m), kron(h.eps_h, h.eps_h), (d, d), (1,)))
    rep.add(compare("eps_unital", mat_mul(h.eps_h, h.u.as_column()), one, (1,), (1,)))
    ue = mat_mul(h.u.as_column(), h.eps_h)
    rep.add(compare("antipode_left", mat_mul(h.m, mat_mul(kron(h.S, I), h.delta_h)), ue, (d,), (d,)))
    rep.add(compare("antipode_right", mat_mul(h.m, mat_mul(kron(I, h.S), h.delta_h)), ue, (d,), (d,)))
    rep.add(compare("antipode_inverse", mat_mul(h.S, h.S_inv), I, (d,), (d,)))
    rep.add(compare("antipode_inverse_left", mat_mul(h.S_inv, h.S), I, (d,), (d,)))
    # antipode identities
    rep.add(compare("A1.anti_multiplicative", mat_mul(h.S, h.m), mat_mul(h.m, mat_mul(kron(h.S, h.S), c)), (d, d), (d,)))
    rep.add(compare("A2.unit_fixed", h.S.apply(h.u).as_column(), h.u.as_column(), (1,), (d,)))
    rep.add(compare("A3.anti_comultiplicative", mat_mul(h.delta_h, h.S),
                    mat_mul(kron(h.S, h.S), mat_mul(c, h.delta_h)), (d,), (d, d)))
    rep.add(compare("A4.counit_fixed", mat_mul(h.eps_h, h.S), h.eps_h, (d,), (1,)))
    # integrals
    Lc = h.Lambda.as_column()
    rep.add(compare("I1.left_integral", mat_mul(h.m, kron(I, Lc)), mat_mul(Lc, h.eps_h), (d,), (d,)))
    rep.add(compare("I2.right_cointegral", mat_mul(kron(h.lam, I), h.delta_h),
                    mat_mul(h.u.as_column(), h.lam), (d,), (d,)))
    rep.add(compare("I3.normalized", mat_mul(h.lam, Lc), one, (1,), (1,)))
    return rep


def _delta_lambda(h: HopfAlgebra) -> Mat:
    return h.delta_h.apply(h.Lambda).as_column()


def _require_hopf(h: HopfAlgebra):
    rep = check_hopf(h)
    if not rep.ok:
        bad = ", ".join(r.name for r in rep.failed())
        raise PreconditionError(f"Hopf axioms fail: {bad}")


def trivial_hopf_algebra(F: CycField) -> HopfAlgebra:
    return group_hopf_algebra(GroupTable("trivial", ["e"], [[0]]), F)


def psi(h: HopfAlgebra, check: bool = True) -> FrobAlgebra:
    """Frobenius algebra on the underlying algebra of h from its integrals."""
    if check:
        _require_hopf(h)
    I = Mat.identity(h.field, h.dim)
    delta = mat_mul(kron(h.m, h.S), kron(I, _delta_lambda(h)))
    return FrobAlgebra(h.algebra, CoalgebraData(h.field, h.dim, delta, h.lam))


def check_lemma_A1(h: HopfAlgebra) -> Report:
    """(a) (m @ S)(I @ Delta_h Lambda) equals the five-fold composite; (b) lambda S Lambda = 1."""
    _require_hopf(h)
    F, d = h.field, h.dim
    I = Mat.identity(F, d)
    lhs = mat_mul(kron(h.m, h.S), kron(I, _delta_lambda(h)))
    ins = kron_all(I, h.Lambda.as_column(), I)
    rhs = mat_mul(
        kron(I, h.m),
        mat_mul(kron_all(I, h.S, I), mat_mul(kron(mat_mul(h.delta_h, h.m), I), mat_mul(ins, h.delta_h))),
    )
    rep = Report()
    rep.add(compare("A1a.coproduct_formula", lhs, rhs, (d,), (d, d)))
    rep.add(compare("A1b.lambda_S_Lambda", mat_mul(h.lam, h.S.apply(h.Lambda).as_column()), Mat.identity(F, 1), (1,), (1,)))
    return rep


def integral_hopf_morphism_report(h: HopfAlgebra, k: HopfAlgebra, f: Mat) -> Report:
    rep = Report()
    rep.extend(algebra_morphism_report(f, h.algebra, k.algebra))
    rep.add(compare("comultiplicative", mat_mul(k.delta_h, f), mat_mul(kron(f, f), h.delta_h), (h.dim,), (k.dim, k.dim)))
    rep.add(compare("counital", mat_mul(k.eps_h, f), h.eps_h, (h.dim,), (1,)))
    rep.add(compare("preserves_integral", f.apply(h.Lambda).as_column(), k.Lambda.as_column(), (1,), (k.dim,)))
    rep.add(compare("preserves_cointegral", mat_mul(k.lam, f), h.lam, (h.dim,), (1,)))
    return rep


def check_psi_morphism(h: HopfAlgebra, k: HopfAlgebra, f: Mat) -> Report:
    """Preconditions on f, then that f is a Frobenius morphism psi(h) -> psi(k)."""
    pre = integral_hopf_morphism_report(h, k, f)
    if not pre.ok:
        bad = ", ".join(r.name for r in pre.failed())
        raise PreconditionError(f"not an integral Hopf morphism: {bad}")
    rep = Report()
    rep.extend(pre, "pre.")
    A, B = psi(h), psi(k)
    rep.extend(algebra_morphism_report(f, A, B), "psi.")
    rep.add(compare("psi.comultiplicative", mat_mul(B.delta, f), mat_mul(kron(f, f), A.delta), (h.dim,), (k.dim, k.dim)))
    rep.add(compare("psi.counital", mat_mul(B.eps, f), A.eps, (h.dim,), (1,)))
    return rep


def integral_theta_extension(h: HopfAlgebra, theta: Vec) -> ExtFrobAlgebra:
    """(I, theta) on psi(h); needs theta^2 = eps_h(Lambda) 1."""
    fa = psi(h)
    lhs = fa.mult(theta, theta)
    rhs = h.u.scale(mat_mul(h.eps_h, h.Lambda.as_column())[0, 0])
    if lhs != rhs:
        raise HypothesisMismatch("theta^2 != eps_h(Lambda) 1", lhs.to_strings(), rhs.to_strings())
    return make_ext(fa, Mat.identity(h.field, h.dim), theta)


def check_extended_hopf(h: HopfAlgebra, phi: Mat, theta: Vec) -> Report:
    """Conditions stated with the Hopf coproduct and antipode."""
    d = h.dim
    I = Mat.identity(h.field, d)
    rep = Report()
    rep.extend(integral_hopf_morphism_report(h, h, phi), "i.")
    rep.add(compare("i.involution", mat_mul(phi, phi), I, (d,), (d,)))
    Lt = left_mult(h.m, theta)
    rep.add(compare("ii.theta_fixed", mat_mul(phi, Lt), Lt, (d,), (d,)))
    lhs = mat_mul(h.m, mat_mul(kron(phi, h.S), _delta_lambda(h)))
    rhs = kron(theta.as_column(), theta.as_column())
    rep.add(compare("iii.theta_square", lhs, mat_mul(h.m, rhs), (1,), (d,)))
    return rep


def ext_hopf_to_ext_frob(h: HopfAlgebra, phi: Mat, theta: Vec) -> ExtFrobAlgebra:
    rep = check_extended_hopf(h, phi, theta)
    if not rep.ok:
        bad = ", ".join(r.name for r in rep.failed())
        raise PreconditionError(f"not an extended Hopf structure: {bad}")
    return make_ext(psi(h), phi, theta)


__all__ = [
    "HopfAlgebra", "group_hopf_algebra", "trivial_hopf_algebra", "check_hopf", "psi", "check_lemma_A1",
    "check_psi_morphism", "integral_theta_extension", "check_extended_hopf",
    "ext_hopf_to_ext_frob", "integral_hopf_morphism_report",
]
