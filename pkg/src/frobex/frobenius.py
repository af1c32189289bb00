"""Frobenius algebras given by structure matrices, and their axiom checks.

Conventions: m is d x d^2 with column i*d + j holding e_i e_j, u is the
unit vector, delta is d^2 x d and eps is 1 x d.
"""

from dataclasses import dataclass, field as dc_field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .errors import CounitError, ShapeError
from .linalg import Mat, Vec, compose, is_invertible, kron, mat_mul, solve_linear, vec_kron
from .scalars import CycField


@dataclass
class AxiomResult:
    name: str
    ok: bool
    witness: Optional[Dict[str, Any]] = None
    detail: str = ""

    def to_dict(self):
        d = {"axiom": self.name, "ok": self.ok}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.detail:
            d["detail"] = self.detail
        return d

    def __str__(self):
        s = f"{'PASS' if self.ok else 'FAIL'} {self.name}"
        if self.witness:
            s += f" witness={self.witness}"
        if self.detail:
            s += f" ({self.detail})"
        return s


@dataclass
class Report:
    results: List[AxiomResult] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def __bool__(self):
        return self.ok

    def add(self, r: AxiomResult):
        self.results.append(r)
        return r

    def extend(self, other: "Report", prefix: str = ""):
        for r in other.results:
            self.results.append(AxiomResult(prefix + r.name, r.ok, r.witness, r.detail))
        return self

    def failed(self) -> List[AxiomResult]:
        return [r for r in self.results if not r.ok]

    def get(self, name) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self):
        return {"ok": self.ok, "checks": [r.to_dict() for r in self.results]}

    def __str__(self):
        return "\n".join(str(r) for r in self.results)


def _unflatten(index: int, dims: Sequence[int]) -> Tuple[int, ...]:
    out = []
    for d in reversed(dims):
        out.append(index % d)
        index //= d
    return tuple(reversed(out))


def compare(name: str, lhs: Mat, rhs: Mat, in_dims: Sequence[int] = (), out_dims: Sequence[int] = ()) -> AxiomResult:
    """Exact equality of two maps; on failure the witness names basis indices."""
    if lhs.shape != rhs.shape:
        return AxiomResult(name, False, None, f"shape {lhs.shape} vs {rhs.shape}")
    diff = lhs.first_difference(rhs)
    if diff is None:
        return AxiomResult(name, True)
    r, c = diff
    w = {
        "input": list(_unflatten(c, in_dims)) if in_dims else c,
        "output": list(_unflatten(r, out_dims)) if out_dims else r,
        "lhs": str(lhs[r, c]),
        "rhs": str(rhs[r, c]),
    }
    return AxiomResult(name, False, w)


@dataclass(frozen=True)
class AlgebraData:
    field: CycField
    dim: int
    m: Mat
    u: Vec
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        d = self.dim
        if self.m.shape != (d, d * d):
            raise ShapeError(f"m must be {d}x{d * d}, got {self.m.shape}")
        if len(self.u) != d:
            raise ShapeError("u has wrong length")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"e{i}" for i in range(d)))


@dataclass(frozen=True)
class CoalgebraData:
    field: CycField
    dim: int
    delta: Mat
    eps: Mat

    def __post_init__(self):
        d = self.dim
        if self.delta.shape != (d * d, d):
            raise ShapeError(f"delta must be {d * d}x{d}, got {self.delta.shape}")
        if self.eps.shape != (1, d):
            raise ShapeError(f"eps must be 1x{d}, got {self.eps.shape}")


@dataclass(frozen=True)
class FrobAlgebra:
    algebra: AlgebraData
    coalgebra: CoalgebraData

    @classmethod
    def build(cls, field, m: Mat, u: Vec, delta: Mat, eps: Mat, labels=()) -> "FrobAlgebra":
        d = len(u)
        return cls(AlgebraData(field, d, m, u, tuple(labels)), CoalgebraData(field, d, delta, eps))

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def labels(self):
        return self.algebra.labels

    @property
    def m(self):
        return self.algebra.m

    @property
    def u(self):
        return self.algebra.u

    @property
    def delta(self):
        return self.coalgebra.delta

    @property
    def eps(self):
        return self.coalgebra.eps

    def mult(self, x: Vec, y: Vec) -> Vec:
        return self.m.apply(vec_kron(x, y))

    def basis(self, i) -> Vec:
        return Vec.basis(self.field, self.dim, i)

    def replace(self, **kw) -> "FrobAlgebra":
        vals = dict(m=self.m, u=self.u, delta=self.delta, eps=self.eps, labels=self.labels)
        vals.update(kw)
        return FrobAlgebra.build(self.field, **vals)


def left_mult(m: Mat, x: Vec) -> Mat:
    """Matrix of y -> x y."""
    d = len(x)
    return mat_mul(m, kron(x.as_column(), Mat.identity(x.field, d)))


def right_mult(m: Mat, x: Vec) -> Mat:
    d = len(x)
    return mat_mul(m, kron(Mat.identity(x.field, d), x.as_column()))


def check_algebra(a) -> Report:
    """Associativity and two-sided unitality."""
    if isinstance(a, FrobAlgebra):
        a = a.algebra
    F, d, m = a.field, a.dim, a.m
    I = Mat.identity(F, d)
    rep = Report()
    rep.add(compare("associativity", mat_mul(m, kron(m, I)), mat_mul(m, kron(I, m)), (d, d, d), (d,)))
    uc = a.u.as_column()
    rep.add(compare("left_unit", mat_mul(m, kron(uc, I)), I, (d,), (d,)))
    rep.add(compare("right_unit", mat_mul(m, kron(I, uc)), I, (d,), (d,)))
    return rep


def check_coalgebra(c) -> Report:
    """Coassociativity and two-sided counitality."""
    if isinstance(c, FrobAlgebra):
        c = c.coalgebra
    F, d, D = c.field, c.dim, c.delta
    I = Mat.identity(F, d)
    rep = Report()
    rep.add(compare("coassociativity", mat_mul(kron(D, I), D), mat_mul(kron(I, D), D), (d,), (d, d, d)))
    rep.add(compare("left_counit", mat_mul(kron(c.eps, I), D), I, (d,), (d,)))
    rep.add(compare("right_counit", mat_mul(kron(I, c.eps), D), I, (d,), (d,)))
    return rep


def check_frobenius(fa: FrobAlgebra) -> Report:
    """Algebra and coalgebra axioms plus (m@I)(I@D) = D m = (I@m)(D@I)."""
    F, d, m, D = fa.field, fa.dim, fa.m, fa.delta
    I = Mat.identity(F, d)
    rep = check_algebra(fa.algebra)
    rep.extend(check_coalgebra(fa.coalgebra))
    left = mat_mul(kron(m, I), kron(I, D))
    mid = mat_mul(D, m)
    right = mat_mul(kron(I, m), kron(D, I))
    rep.add(compare("frobenius_left", left, mid, (d, d), (d, d)))
    rep.add(compare("frobenius_right", right, mid, (d, d), (d, d)))
    rep.add(compare("frobenius_outer", left, right, (d, d), (d, d)))
    return rep


def pairing_matrix(fa: FrobAlgebra) -> Mat:
    """Gram matrix of the form (x, y) -> eps(x y)."""
    d = fa.dim
    row = mat_mul(fa.eps, fa.m)
    return Mat.from_rows(fa.field, [[row[0, i * d + j] for j in range(d)] for i in range(d)], d)


def is_nondegenerate(fa: FrobAlgebra) -> bool:
    return is_invertible(pairing_matrix(fa))


def check_separable(fa: FrobAlgebra) -> bool:
    """True iff m . Delta = I."""
    return mat_mul(fa.m, fa.delta).is_identity()


def solve_counit(delta: Mat, field: CycField) -> Mat:
    """The unique eps with (eps @ I) Delta = I; raises CounitError otherwise."""
    d = delta.cols
    # unknowns eps_i; equation for (k, a): sum_i eps_i Delta[(i,k), a] = [k == a]
    rows = []
    rhs = []
    for a in range(d):
        for k in range(d):
            rows.append([delta[i * d + k, a] for i in range(d)])
            rhs.append(field.one() if k == a else field.zero())
    sol = solve_linear(Mat.from_rows(field, rows, d), Vec(field, rhs))
    if sol is None:
        raise CounitError("no counit satisfies (eps @ I) Delta = I")
    if not sol.unique:
        raise CounitError(f"counit not unique: {len(sol.nullspace)} free directions")
    return sol.particular.as_row()


def delta_from_delta_one(a: AlgebraData, delta_one: Vec, eps: Optional[Mat] = None) -> FrobAlgebra:
    """Comultiplication Delta(x) = (m @ I)(x @ Delta(1)); counit given or solved."""
    F, d = a.field, a.dim
    if len(delta_one) != d * d:
        raise ShapeError("Delta(1) must have length d^2")
    I = Mat.identity(F, d)
    D = mat_mul(kron(a.m, I), kron(I, delta_one.as_column()))
    if eps is None:
        eps = solve_counit(D, F)
    return FrobAlgebra(a, CoalgebraData(F, d, D, eps))


def rescale(fa: FrobAlgebra, c) -> FrobAlgebra:
    """Same algebra with Delta scaled by c and eps by 1/c."""
    c = fa.field.coerce(c)
    return fa.replace(delta=fa.delta.scale(c), eps=fa.eps.scale(c.inverse()))


# -- morphisms ---------------------------------------------------------------


def algebra_morphism_report(f: Mat, A, B, prefix="") -> Report:
    rep = Report()
    rep.add(compare(prefix + "multiplicative", mat_mul(f, A.m), mat_mul(B.m, kron(f, f)), (A.dim, A.dim), (B.dim,)))
    rep.add(compare(prefix + "unital", f.apply(A.u).as_column(), B.u.as_column(), (1,), (B.dim,)))
    return rep


def coalgebra_morphism_report(f: Mat, A, B, prefix="") -> Report:
    rep = Report()
    rep.add(compare(prefix + "comultiplicative", mat_mul(B.delta, f), mat_mul(kron(f, f), A.delta), (A.dim,), (B.dim, B.dim)))
    rep.add(compare(prefix + "counital", mat_mul(B.eps, f), A.eps, (A.dim,), (1,)))
    return rep


def is_algebra_morphism(f: Mat, A, B) -> bool:
    return algebra_morphism_report(f, A, B).ok


def is_coalgebra_morphism(f: Mat, A, B) -> bool:
    return coalgebra_morphism_report(f, A, B).ok


def is_frobenius_morphism(f: Mat, A: FrobAlgebra, B: FrobAlgebra) -> bool:
    return is_algebra_morphism(f, A, B) and is_coalgebra_morphism(f, A, B)


__all__ = [
    "AlgebraData", "CoalgebraData", "FrobAlgebra", "Report", "AxiomResult", "compare",
    "check_algebra", "check_coalgebra", "check_frobenius", "check_separable",
    "delta_from_delta_one", "solve_counit", "pairing_matrix", "is_nondegenerate",
    "rescale", "left_mult", "right_mult", "is_algebra_morphism", "is_coalgebra_morphism",
    "is_frobenius_morphism", "algebra_morphism_report", "coalgebra_morphism_report", "compose",
]
