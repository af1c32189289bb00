"""Monoidal products of extended Frobenius algebras and finite realizations
of extended Frobenius monoidal functors Vec -> Vec.

Objects of Vec are identified with their dimensions; X (x) Y has dimension
x*y with the row-major pairing, and the category is treated as strict, so
unitors and associators are identities. A morphism f: x -> y is a y-by-x
matrix.
"""

import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

from .errors import FieldMismatchError, PreconditionError, ShapeError
from .extended import ExtFrobAlgebra, check_extended, make_ext
from .frobenius import FrobAlgebra, Report, compare
from .linalg import Mat, Vec, direct_sum, kron, kron_all, mat_mul, swap_map, vec_kron
from .scalars import CycField


# -- products of algebras ---------------------------------------------------


def _same_field(A, B):
    if A.field is not B.field:
        raise FieldMismatchError(f"{A.field} vs {B.field}")


def tensor_product_ext(A: ExtFrobAlgebra, B: ExtFrobAlgebra) -> ExtFrobAlgebra:
    """A (x) B with m = (m_A @ m_B)(I @ c @ I), phi_A @ phi_B, theta_A @ theta_B."""
    _same_field(A, B)
    F, a, b = A.field, A.dim, B.dim
    Ia, Ib = Mat.identity(F, a), Mat.identity(F, b)
    mid = kron_all(Ia, swap_map(b, a, F), Ib)
    mid_co = kron_all(Ia, swap_map(a, b, F), Ib)
    m = mat_mul(kron(A.m, B.m), mid)
    u = vec_kron(A.u, B.u)
    delta = mat_mul(mid_co, kron(A.delta, B.delta))
    eps = kron(A.eps, B.eps)
    labels = tuple(f"{x}*{y}" for x in A.labels for y in B.labels)
    fa = FrobAlgebra.build(F, m, u, delta, eps, labels)
    return make_ext(fa, kron(A.phi, B.phi), vec_kron(A.theta, B.theta), _join(A.name, B.name, "(x)"))


def _join(x, y, op):
    if x and y:
        return f"({x}) {op} ({y})"
    return ""


def _inject(F, rows, cols, blocks: Sequence[Tuple[int, int, Mat]]) -> Mat:
    data = [{} for _ in range(rows)]
    for r0, c0, M in blocks:
        for i, j, e in M.nonzeros():
            data[r0 + i][c0 + j] = e
    return Mat(F, rows, cols, data)


def _pair_map(F, a, b):
    """Index maps of (A+B) (x) (A+B) for the A(x)A and B(x)B corners."""
    n = a + b
    aa = [i * n + j for i in range(a) for j in range(a)]
    bb = [(a + p) * n + (a + q) for p in range(b) for q in range(b)]
    return n, aa, bb


def biproduct_ext(A: ExtFrobAlgebra, B: ExtFrobAlgebra) -> ExtFrobAlgebra:
    """Direct product algebra A + B with block structure maps."""
    _same_field(A, B)
    F, a, b = A.field, A.dim, B.dim
    n, aa, bb = _pair_map(F, a, b)
    mdata = [{} for _ in range(n)]
    for i, col, e in A.m.nonzeros():
        mdata[i][aa[col]] = e
    for i, col, e in B.m.nonzeros():
        mdata[a + i][bb[col]] = e
    m = Mat(F, n, n * n, mdata)
    ddata = [{} for _ in range(n * n)]
    for row, j, e in A.delta.nonzeros():
        ddata[aa[row]][j] = e
    for row, j, e in B.delta.nonzeros():
        ddata[bb[row]][a + j] = e
    delta = Mat(F, n * n, n, ddata)
    u = Vec(F, list(A.u) + list(B.u))
    eps = _inject(F, 1, n, [(0, 0, A.eps), (0, a, B.eps)])
    labels = tuple(A.labels) + tuple(B.labels)
    fa = FrobAlgebra.build(F, m, u, delta, eps, labels)
    theta = Vec(F, list(A.theta) + list(B.theta))
    return make_ext(fa, direct_sum(A.phi, B.phi), theta, _join(A.name, B.name, "+"))


def zero_ext(F: CycField) -> ExtFrobAlgebra:
    """The zero-dimensional extended Frobenius algebra, unit for the direct product."""
    z = Mat.zeros(F, 0, 0)
    fa = FrobAlgebra.build(F, z, Vec(F, []), z, Mat.zeros(F, 1, 0))
    return make_ext(fa, z, Vec(F, []), "0")


def compare_structures(A: ExtFrobAlgebra, B: ExtFrobAlgebra) -> Report:
    """Entrywise comparison of every structure map; labels and names are ignored."""
    rep = Report()
    for key in ("m", "delta", "eps", "phi"):
        rep.add(compare(key, getattr(A, key), getattr(B, key)))
    for key in ("u", "theta"):
        rep.add(compare(key, getattr(A, key).as_column(), getattr(B, key).as_column()))
    return rep


# -- realized functors ------------------------------------------------------


class RealizedFunctor:
    """Evaluators for the structure maps of a functor Vec -> Vec at given dims."""

    field: CycField
    name = "functor"

    def obj(self, x: int) -> int:
        raise NotImplementedError

    def fmap(self, f: Mat) -> Mat:
        raise NotImplementedError

    def F2(self, x: int, y: int) -> Mat:
        """F(x) (x) F(y) -> F(x y)."""
        raise NotImplementedError

    def F0(self) -> Mat:
        raise NotImplementedError

    def F_2(self, x: int, y: int) -> Mat:
        """F(x y) -> F(x) (x) F(y)."""
        raise NotImplementedError

    def F_0(self) -> Mat:
        raise NotImplementedError

    def Fhat(self, x: int) -> Mat:
        raise NotImplementedError

    def Fcheck(self) -> Mat:
        raise NotImplementedError

    def __repr__(self):
        return self.name


class IdentityFunctor(RealizedFunctor):
    def __init__(self, F: CycField):
        self.field = F
        self.name = "Id"

    def obj(self, x):
        return x

    def fmap(self, f):
        return f

    def F2(self, x, y):
        return Mat.identity(self.field, x * y)

    def F0(self):
        return Mat.identity(self.field, 1)

    def F_2(self, x, y):
        return Mat.identity(self.field, x * y)

    def F_0(self):
        return Mat.identity(self.field, 1)

    def Fhat(self, x):
        return Mat.identity(self.field, x)

    def Fcheck(self):
        return Mat.identity(self.field, 1)


def _ext_parts(B):
    if isinstance(B, ExtFrobAlgebra):
        return B.frob, B
    return B, None


class TensorWith(RealizedFunctor):
    """X -> X (x) B."""

    def __init__(self, B):
        self.frob, self.ext = _ext_parts(B)
        self.field = self.frob.field
        self.b = self.frob.dim
        self.name = f"-(x){getattr(B, 'name', '') or 'B'}"

    def _need_ext(self):
        if self.ext is None:
            raise PreconditionError("B carries no extended structure")
        return self.ext

    def obj(self, x):
        return x * self.b

    def fmap(self, f):
        return kron(f, Mat.identity(self.field, self.b))

    def F2(self, x, y):
        F, b = self.field, self.b
        swap = kron_all(Mat.identity(F, x), swap_map(b, y, F), Mat.identity(F, b))
        return mat_mul(kron(Mat.identity(F, x * y), self.frob.m), swap)

    def F0(self):
        return self.frob.u.as_column()

    def F_2(self, x, y):
        F, b = self.field, self.b
        swap = kron_all(Mat.identity(F, x), swap_map(y, b, F), Mat.identity(F, b))
        return mat_mul(swap, kron(Mat.identity(F, x * y), self.frob.delta))

    def F_0(self):
        return self.frob.eps

    def Fhat(self, x):
        return kron(Mat.identity(self.field, x), self._need_ext().phi)

    def Fcheck(self):
        return self._need_ext().theta.as_column()


class BiproductWith(RealizedFunctor):
    """X -> X + B, with block formulas built from projections and inclusions."""

    def __init__(self, B):
        self.frob, self.ext = _ext_parts(B)
        self.field = self.frob.field
        self.b = self.frob.dim
        self.name = f"-+{getattr(B, 'name', '') or 'B'}"

    def _need_ext(self):
        if self.ext is None:
            raise PreconditionError("B carries no extended structure")
        return self.ext

    def obj(self, x):
        return x + self.b

    def fmap(self, f):
        return direct_sum(f, Mat.identity(self.field, self.b))

    def F2(self, x, y):
        # (X+B)(x)(Y+B) -> XY + B: keep the X(x)Y corner, multiply the B(x)B corner
        F, b = self.field, self.b
        ny = y + b
        data = [{} for _ in range(x * y + b)]
        for i in range(x):
            for j in range(y):
                data[i * y + j][i * ny + j] = F.one()
        for r, col, e in self.frob.m.nonzeros():
            p, q = divmod(col, b)
            data[x * y + r][(x + p) * ny + (y + q)] = e
        return Mat(F, x * y + b, (x + b) * ny, data)

    def F0(self):
        F = self.field
        return Mat.from_columns(F, [Vec(F, [1] + list(self.frob.u))])

    def F_2(self, x, y):
        F, b = self.field, self.b
        ny = y + b
        data = [{} for _ in range((x + b) * ny)]
        for i in range(x):
            for j in range(y):
                data[i * ny + j][i * y + j] = F.one()
        for row, j, e in self.frob.delta.nonzeros():
            p, q = divmod(row, b)
            data[(x + p) * ny + (y + q)][x * y + j] = e
        return Mat(F, (x + b) * ny, x * y + b, data)

    def F_0(self):
        F = self.field
        return Mat.from_rows(F, [[1] + list(self.frob.eps.row(0))], 1 + self.b)

    def Fhat(self, x):
        return direct_sum(Mat.identity(self.field, x), self._need_ext().phi)

    def Fcheck(self):
        F = self.field
        return Mat.from_columns(F, [Vec(F, [1] + list(self._need_ext().theta))])


class Compose(RealizedFunctor):
    """outer after inner, with the composite (co)monoidal and extended data."""

    def __init__(self, outer: RealizedFunctor, inner: RealizedFunctor):
        if outer.field is not inner.field:
            raise FieldMismatchError("functors over different fields")
        self.outer = outer
        self.inner = inner
        self.field = outer.field
        self.name = f"{outer.name} o {inner.name}"

    def obj(self, x):
        return self.outer.obj(self.inner.obj(x))

    def fmap(self, f):
        return self.outer.fmap(self.inner.fmap(f))

    def F2(self, x, y):
        G, Fn = self.outer, self.inner
        return mat_mul(G.fmap(Fn.F2(x, y)), G.F2(Fn.obj(x), Fn.obj(y)))

    def F0(self):
        return mat_mul(self.outer.fmap(self.inner.F0()), self.outer.F0())

    def F_2(self, x, y):
        G, Fn = self.outer, self.inner
        return mat_mul(G.F_2(Fn.obj(x), Fn.obj(y)), G.fmap(Fn.F_2(x, y)))

    def F_0(self):
        return mat_mul(self.outer.F_0(), self.outer.fmap(self.inner.F_0()))

    def Fhat(self, x):
        G, Fn = self.outer, self.inner
        return mat_mul(G.fmap(Fn.Fhat(x)), G.Fhat(Fn.obj(x)))

    def Fcheck(self):
        return mat_mul(self.outer.fmap(self.inner.Fcheck()), self.outer.Fcheck())


class Override(RealizedFunctor):
    """Same functor with some evaluators replaced."""

    def __init__(self, base: RealizedFunctor, name: str = "", **evaluators: Callable):
        unknown = set(evaluators) - {"F2", "F0", "F_2", "F_0", "Fhat", "Fcheck"}
        if unknown:
            raise ValueError(f"unknown evaluators: {sorted(unknown)}")
        self.base = base
        self.field = base.field
        self.name = name or f"{base.name}'"
        self._ev = evaluators

    def _call(self, key, *args):
        if key in self._ev:
            return self._ev[key](*args)
        return getattr(self.base, key)(*args)

    def obj(self, x):
        return self.base.obj(x)

    def fmap(self, f):
        return self.base.fmap(f)

    def F2(self, x, y):
        return self._call("F2", x, y)

    def F0(self):
        return self._call("F0")

    def F_2(self, x, y):
        return self._call("F_2", x, y)

    def F_0(self):
        return self._call("F_0")

    def Fhat(self, x):
        return self._call("Fhat", x)

    def Fcheck(self):
        return self._call("Fcheck")


def realize_functor(kind: str, B) -> RealizedFunctor:
    kinds = {"tensor": TensorWith, "biproduct": BiproductWith}
    if kind == "identity":
        return IdentityFunctor(B.field)
    if kind not in kinds:
        raise ValueError(f"unknown functor kind {kind!r}; expected one of tensor, biproduct, identity")
    return kinds[kind](B)


def compose_functors(G: RealizedFunctor, F: RealizedFunctor, sample: Optional["ObjectSample"] = None) -> RealizedFunctor:
    """G after F; with a sample, both inputs are checked first."""
    if sample is not None:
        for H in (G, F):
            rep = check_extended_functor(H, sample)
            if not rep.ok:
                raise PreconditionError(f"{H.name} fails the extended functor checks: {rep.failed()[0].name}")
    return Compose(G, F)


def separable_extension_functor(F: RealizedFunctor) -> RealizedFunctor:
    """Fhat = identity and Fcheck = F0."""
    return Override(F, name=f"{F.name} [Id, F0]", Fhat=lambda x: Mat.identity(F.field, F.obj(x)), Fcheck=F.F0)


# -- samples ----------------------------------------------------------------


@dataclass(frozen=True)
class ObjectSample:
    dims: Tuple[int, ...]
    morphisms: Tuple[Tuple[int, int, Mat], ...] = ()
    seed: Optional[int] = None

    def __post_init__(self):
        if any(d < 1 for d in self.dims):
            raise ShapeError("sample dims must be positive")
        for src, dst, f in self.morphisms:
            if f.shape != (dst, src):
                raise ShapeError(f"morphism {src}->{dst} has shape {f.shape}")


def make_sample(F: CycField, dims: Sequence[int], seed: int = 0, per_pair: int = 5, spread: int = 3) -> ObjectSample:
    """Random integer morphisms between every ordered pair of sample dims."""
    rng = random.Random(seed)
    dims = tuple(sorted(set(dims)))
    morphs = []
    for s in dims:
        for t in dims:
            for _ in range(per_pair):
                rows = [[rng.randint(-spread, spread) for _ in range(s)] for _ in range(t)]
                morphs.append((s, t, Mat.from_rows(F, rows, s)))
    return ObjectSample(dims, tuple(morphs), seed)


# -- checks -----------------------------------------------------------------


def _I(F, n):
    return Mat.identity(F, n)


def check_frobenius_functor(Fn: RealizedFunctor, sample: ObjectSample) -> Report:
    """(Co)associativity, (co)unitality, both Frobenius conditions and naturality."""
    K = Fn.field
    ob = Fn.obj
    rep = Report()
    dims = sample.dims
    for x in dims:
        fx = ob(x)
        rep.add(compare(f"left_unit[x={x}]", mat_mul(Fn.F2(1, x), kron(Fn.F0(), _I(K, fx))), _I(K, fx)))
        rep.add(compare(f"right_unit[x={x}]", mat_mul(Fn.F2(x, 1), kron(_I(K, fx), Fn.F0())), _I(K, fx)))
        rep.add(compare(f"left_counit[x={x}]", mat_mul(kron(Fn.F_0(), _I(K, fx)), Fn.F_2(1, x)), _I(K, fx)))
        rep.add(compare(f"right_counit[x={x}]", mat_mul(kron(_I(K, fx), Fn.F_0()), Fn.F_2(x, 1)), _I(K, fx)))
    for x in dims:
        for y in dims:
            for z in dims:
                tag = f"[x={x},y={y},z={z}]"
                fx, fy, fz = ob(x), ob(y), ob(z)
                rep.add(compare(
                    "associativity" + tag,
                    mat_mul(Fn.F2(x * y, z), kron(Fn.F2(x, y), _I(K, fz))),
                    mat_mul(Fn.F2(x, y * z), kron(_I(K, fx), Fn.F2(y, z))),
                ))
                rep.add(compare(
                    "coassociativity" + tag,
                    mat_mul(kron(Fn.F_2(x, y), _I(K, fz)), Fn.F_2(x * y, z)),
                    mat_mul(kron(_I(K, fx), Fn.F_2(y, z)), Fn.F_2(x, y * z)),
                ))
                rep.add(compare(
                    "frobenius_1" + tag,
                    mat_mul(kron(Fn.F2(x, y), _I(K, fz)), kron(_I(K, fx), Fn.F_2(y, z))),
                    mat_mul(Fn.F_2(x * y, z), Fn.F2(x, y * z)),
                ))
                rep.add(compare(
                    "frobenius_2" + tag,
                    mat_mul(kron(_I(K, fx), Fn.F2(y, z)), kron(Fn.F_2(x, y), _I(K, fz))),
                    mat_mul(Fn.F_2(x, y * z), Fn.F2(x * y, z)),
                ))
    for k, (s, t, f) in enumerate(sample.morphisms):
        Ff = Fn.fmap(f)
        for y in dims:
            Iy, FIy = _I(K, y), _I(K, ob(y))
            tag = f"[f{k}:{s}->{t},y={y}]"
            for side, fy, Ffy in (("left", kron(f, Iy), kron(Ff, FIy)), ("right", kron(Iy, f), kron(FIy, Ff))):
                src = (s, y) if side == "left" else (y, s)
                dst = (t, y) if side == "left" else (y, t)
                rep.add(compare(
                    f"natural_F2_{side}" + tag,
                    mat_mul(Fn.fmap(fy), Fn.F2(*src)),
                    mat_mul(Fn.F2(*dst), Ffy),
                ))
                rep.add(compare(
                    f"natural_F_2_{side}" + tag,
                    mat_mul(Ffy, Fn.F_2(*src)),
                    mat_mul(Fn.F_2(*dst), Fn.fmap(fy)),
                ))
    return rep


def check_separable_functor(Fn: RealizedFunctor, sample: ObjectSample) -> bool:
    """F2(x, y) . F_2(x, y) = I on every sampled pair."""
    for x in sample.dims:
        for y in sample.dims:
            if not mat_mul(Fn.F2(x, y), Fn.F_2(x, y)).is_identity():
                return False
    return True


def check_extended_functor(Fn: RealizedFunctor, sample: ObjectSample) -> Report:
    """(a) Fhat Frobenius monoidal natural, (b) the Fcheck square, (c)(i)-(iii)."""
    K = Fn.field
    ob = Fn.obj
    rep = Report()
    dims = sample.dims
    f1 = ob(1)
    # (a)
    for k, (s, t, f) in enumerate(sample.morphisms):
        Ff = Fn.fmap(f)
        rep.add(compare(f"a.natural[f{k}:{s}->{t}]", mat_mul(Fn.Fhat(t), Ff), mat_mul(Ff, Fn.Fhat(s))))
    rep.add(compare("a.monoidal_unit", mat_mul(Fn.Fhat(1), Fn.F0()), Fn.F0()))
    rep.add(compare("a.comonoidal_counit", mat_mul(Fn.F_0(), Fn.Fhat(1)), Fn.F_0()))
    for x in dims:
        for y in dims:
            tag = f"[x={x},y={y}]"
            hx, hy = Fn.Fhat(x), Fn.Fhat(y)
            rep.add(compare("a.monoidal" + tag, mat_mul(Fn.Fhat(x * y), Fn.F2(x, y)), mat_mul(Fn.F2(x, y), kron(hx, hy))))
            rep.add(compare("a.comonoidal" + tag, mat_mul(kron(hx, hy), Fn.F_2(x, y)), mat_mul(Fn.F_2(x, y), Fn.Fhat(x * y))))
    # (b)
    F211 = Fn.F2(1, 1)
    lhs = mat_mul(F211, mat_mul(kron(Fn.Fhat(1), _I(K, f1)), mat_mul(Fn.F_2(1, 1), Fn.F0())))
    chk = Fn.Fcheck()
    rep.add(compare("b.theta_square", lhs, mat_mul(F211, kron(chk, chk))))
    # (c)
    for x in dims:
        fx = ob(x)
        hx = Fn.Fhat(x)
        rep.add(compare(f"c.i.involution[x={x}]", mat_mul(hx, hx), _I(K, fx)))
        path = mat_mul(Fn.F2(1, x), kron(chk, _I(K, fx)))
        rep.add(compare(f"c.ii.theta_fixed[x={x}]", mat_mul(Fn.Fhat(x), path), path))
    for x in dims:
        for y in dims:
            lhs = mat_mul(Fn.F2(x, y), mat_mul(kron(Fn.Fhat(x), _I(K, ob(y))), Fn.F_2(x, y)))
            xy = x * y
            rhs = mat_mul(Fn.F2(xy, 1), mat_mul(kron(Fn.Fhat(xy), _I(K, f1)), Fn.F_2(xy, 1)))
            rep.add(compare(f"c.iii[x={x},y={y}]", lhs, rhs))
    return rep


def apply_functor(Fn: RealizedFunctor, A: ExtFrobAlgebra, sample: Optional[ObjectSample] = None) -> ExtFrobAlgebra:
    """F(A) with m = F(m_A) F2, u = F(u_A) F0, Delta = F_2 F(Delta_A),
    eps = F_0 F(eps_A), phi = F(phi_A) Fhat_A and theta = F(theta_A) Fcheck."""
    if A.field is not Fn.field:
        raise FieldMismatchError("algebra and functor over different fields")
    rep = check_extended(A)
    if not rep.ok:
        raise PreconditionError(f"input fails check_extended: {rep.failed()[0].name}")
    if sample is not None:
        frep = check_extended_functor(Fn, sample)
        if not frep.ok:
            raise PreconditionError(f"functor fails the extended checks: {frep.failed()[0].name}")
    a = A.dim
    m = mat_mul(Fn.fmap(A.m), Fn.F2(a, a))
    u = mat_mul(Fn.fmap(A.u.as_column()), Fn.F0()).column(0)
    delta = mat_mul(Fn.F_2(a, a), Fn.fmap(A.delta))
    eps = mat_mul(Fn.F_0(), Fn.fmap(A.eps))
    phi = mat_mul(Fn.fmap(A.phi), Fn.Fhat(a))
    theta = mat_mul(Fn.fmap(A.theta.as_column()), Fn.Fcheck()).column(0)
    fa = FrobAlgebra.build(Fn.field, m, u, delta, eps)
    return make_ext(fa, phi, theta, f"{Fn.name}({A.name})" if A.name else "")


__all__ = [
    "tensor_product_ext", "biproduct_ext", "zero_ext", "compare_structures", "RealizedFunctor", "IdentityFunctor",
    "TensorWith", "BiproductWith", "Compose", "Override", "realize_functor", "compose_functors",
    "separable_extension_functor", "ObjectSample", "make_sample", "check_frobenius_functor",
    "check_separable_functor", "check_extended_functor", "apply_functor",
]
