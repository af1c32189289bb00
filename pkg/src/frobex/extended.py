"""Extended Frobenius structures: an involution phi and an element theta.

A structure (phi, theta) on a Frobenius algebra A must satisfy
  (i)   phi is an algebra and coalgebra automorphism with phi^2 = I,
  (ii)  phi(theta a) = theta a for all a,
  (iii) m (phi @ I) Delta(1) = theta^2.

The searches below enumerate candidates whose free coordinates come from
a finite lattice of scalars; coordinates forced by linear constraints or
by multiplicativity are computed, not enumerated.
"""

import json
import os
from dataclasses import dataclass, field as dc_field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import CapacityError, NotSeparableError, PreconditionError
from .frobenius import (
    AxiomResult,
    FrobAlgebra,
    Report,
    algebra_morphism_report,
    coalgebra_morphism_report,
    compare,
    left_mult,
)
from .linalg import Mat, Vec, charpoly, inverse, is_invertible, kron, mat_mul, rank, rref, solve_linear, trace
from .scalars import CycField, CycScalar, parse_poly

DEFAULT_BUDGET = 2_000_000
DEFAULT_MAX_DIM = 6


def search_budget() -> int:
    raw = os.environ.get("FROBEX_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise CapacityError(f"FROBEX_BUDGET must be an integer, got {raw!r}") from None
    return DEFAULT_BUDGET


@dataclass(frozen=True)
class ExtStructure:
    phi: Mat
    theta: Vec

    def sort_key(self):
        return (self.phi.sort_key(), self.theta.sort_key())


@dataclass(frozen=True)
class ExtFrobAlgebra:
    frob: FrobAlgebra
    ext: ExtStructure
    name: str = ""

    @property
    def field(self):
        return self.frob.field

    @property
    def dim(self):
        return self.frob.dim

    @property
    def m(self):
        return self.frob.m

    @property
    def u(self):
        return self.frob.u

    @property
    def delta(self):
        return self.frob.delta

    @property
    def eps(self):
        return self.frob.eps

    @property
    def phi(self):
        return self.ext.phi

    @property
    def theta(self):
        return self.ext.theta

    @property
    def labels(self):
        return self.frob.labels


def make_ext(fa: FrobAlgebra, phi: Mat, theta: Vec, name: str = "") -> ExtFrobAlgebra:
    return ExtFrobAlgebra(fa, ExtStructure(phi, theta), name)


# -- checks ----------------------------------------------------------------


def twisted_unit(fa: FrobAlgebra, phi: Mat) -> Vec:
    """m (phi @ I) Delta(1)."""
    d = fa.dim
    I = Mat.identity(fa.field, d)
    return mat_mul(fa.m, mat_mul(kron(phi, I), fa.delta)).apply(fa.u)


def check_extended(e: ExtFrobAlgebra) -> Report:
    fa, phi, theta = e.frob, e.phi, e.theta
    d = fa.dim
    I = Mat.identity(fa.field, d)
    rep = Report()
    rep.extend(algebra_morphism_report(phi, fa, fa), "i.")
    rep.extend(coalgebra_morphism_report(phi, fa, fa), "i.")
    rep.add(compare("i.involution", mat_mul(phi, phi), I, (d,), (d,)))
    Lt = left_mult(fa.m, theta)
    rep.add(compare("ii.theta_fixed", mat_mul(phi, Lt), Lt, (d,), (d,)))
    rep.add(
        compare(
            "iii.theta_square",
            twisted_unit(fa, phi).as_column(),
            fa.mult(theta, theta).as_column(),
            (1,),
            (d,),
        )
    )
    return rep


def check_key_identity(e: ExtFrobAlgebra) -> bool:
    """m (phi @ I) Delta = left multiplication by theta^2."""
    fa = e.frob
    d = fa.dim
    I = Mat.identity(fa.field, d)
    lhs = mat_mul(fa.m, mat_mul(kron(e.phi, I), fa.delta))
    rhs = left_mult(fa.m, fa.mult(e.theta, e.theta))
    return lhs == rhs


def separable_extension(fa: FrobAlgebra) -> ExtStructure:
    """(I, u) for a separable Frobenius algebra."""
    if not mat_mul(fa.m, fa.delta).is_identity():
        raise NotSeparableError("m . Delta is not the identity")
    return ExtStructure(Mat.identity(fa.field, fa.dim), fa.u)


def is_phi_trivial(e) -> bool:
    phi = e.phi if hasattr(e, "phi") else e
    return phi.is_identity()


def is_theta_trivial(e) -> bool:
    theta = e.theta if hasattr(e, "theta") else e
    return theta.is_zero()


def check_ext_morphism(src: ExtFrobAlgebra, dst: ExtFrobAlgebra, f: Mat) -> Report:
    """Morphism conditions; a passing singular map is reported as a contradiction."""
    rep = Report()
    rep.extend(algebra_morphism_report(f, src.frob, dst.frob))
    rep.extend(coalgebra_morphism_report(f, src.frob, dst.frob))
    rep.add(compare("intertwines_phi", mat_mul(f, src.phi), mat_mul(dst.phi, f), (src.dim,), (dst.dim,)))
    rep.add(compare("maps_theta", f.apply(src.theta).as_column(), dst.theta.as_column(), (1,), (dst.dim,)))
    if rep.ok:
        inv = is_invertible(f)
        rep.add(AxiomResult("invertible", inv, None, "" if inv else "contradiction: morphism is singular"))
    return rep


def in_unit_line(fa: FrobAlgebra, v: Vec) -> bool:
    cols = Mat.from_columns(fa.field, [fa.u, v])
    return rank(cols) <= 1


def lemma_no_morph(src: ExtFrobAlgebra, dst: ExtFrobAlgebra) -> str:
    """'obstructed' when src.theta is a multiple of 1 and differs from dst.theta."""
    if src.frob != dst.frob:
        raise PreconditionError("obstruction lemma needs the same underlying Frobenius algebra")
    if in_unit_line(src.frob, src.theta) and src.theta != dst.theta:
        return "obstructed"
    return "unknown"


# -- lattices --------------------------------------------------------------


@dataclass(frozen=True)
class CandidateLattice:
    field: CycField
    values: Tuple[CycScalar, ...]
    name: str = "custom"

    @classmethod
    def make(cls, field: CycField, values: Iterable, name: str = "custom") -> "CandidateLattice":
        seen = {}
        for v in values:
            s = field.coerce(v)
            seen[s] = None
        vals = tuple(sorted(seen, key=lambda s: s.sort_key()))
        return cls(field, vals, name)

    def with_negatives(self) -> "CandidateLattice":
        return CandidateLattice.make(self.field, list(self.values) + [-v for v in self.values], self.name)

    def __len__(self):
        return len(self.values)

    def to_dict(self):
        return {"name": self.name, "conductor": self.field.conductor, "values": [str(v) for v in self.values]}

    @classmethod
    def from_dict(cls, d, field: Optional[CycField] = None) -> "CandidateLattice":
        from .scalars import field_make

        F = field or field_make(int(d["conductor"]))
        if field is not None and int(d.get("conductor", F.conductor)) != F.conductor:
            from .errors import FieldMismatchError

            raise FieldMismatchError(f"lattice conductor {d['conductor']} vs {F}")
        return cls.make(F, [parse_poly(s, F) for s in d["values"]], d.get("name", "file"))

    @classmethod
    def load(cls, path, field=None):
        with open(path) as fh:
            return cls.from_dict(json.load(fh), field)


# -- endomorphism search ---------------------------------------------------


class _Structure:
    """Sparse structure constants for fast vector arithmetic."""

    def __init__(self, fa: FrobAlgebra):
        d = fa.dim
        self.d = d
        self.F = fa.field
        self.zero = fa.field.zero()
        self.prod = [[dict() for _ in range(d)] for _ in range(d)]
        for k, col, c in fa.m.nonzeros():
            i, j = divmod(col, d)
            self.prod[i][j][k] = c
        self.cop = [dict() for _ in range(d)]
        for row, a, c in fa.delta.nonzeros():
            self.cop[a][divmod(row, d)] = c
        self.eps = [fa.eps[0, i] for i in range(d)]
        self.u = list(fa.u.entries)

    def mul(self, x, y):
        d = self.d
        out = [self.zero] * d
        for i in range(d):
            xi = x[i]
            if not xi:
                continue
            pi = self.prod[i]
            for j in range(d):
                yj = y[j]
                if not yj:
                    continue
                c = xi * yj
                for k, s in pi[j].items():
                    out[k] = out[k] + c * s
        return out

    def comul(self, x):
        out = {}
        for a in range(self.d):
            if x[a]:
                for key, c in self.cop[a].items():
                    v = out.get(key, self.zero) + x[a] * c
                    out[key] = v
        return {k: v for k, v in out.items() if v}

    def counit(self, x):
        acc = self.zero
        for e, xi in zip(self.eps, x):
            if e and xi:
                acc = acc + e * xi
        return acc


def _combine(cols, coeffs: Dict[int, CycScalar], zero, d):
    out = [zero] * d
    for l, c in coeffs.items():
        col = cols[l]
        for t in range(d):
            if col[t]:
                out[t] = out[t] + c * col[t]
    return out


class _EndoSearch:
    """Depth-first search over columns phi(e_k).

    State is (cols, pairs_done, cols_done): checks already passed on an
    ancestor are not repeated.
    """

    def __init__(self, fa: FrobAlgebra, lattice: CandidateLattice, involutive: bool, budget: int):
        if lattice.field is not fa.field:
            from .errors import FieldMismatchError

            raise FieldMismatchError(f"lattice over {lattice.field}, algebra over {fa.field}")
        self.S = _Structure(fa)
        self.lattice = lattice.values
        self.involutive = involutive
        self.budget = budget
        self.nodes = 0
        self.found: List[List[List[CycScalar]]] = []
        d = self.S.d
        self.pairs = [(i, j) for i in range(d) for j in range(d)]
        self.eps_pivot = next((i for i, e in enumerate(self.S.eps) if e), None)
        self.unit_supp = [l for l in range(d) if self.S.u[l]]

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise CapacityError(f"search budget {self.budget} exceeded")

    def _set(self, cols, k, col):
        cols[k] = col
        return self.S.counit(col) == self.S.eps[k]

    def _propagate(self, cols, pairs_done):
        """Derive forced columns; verify multiplicativity where all inputs are known."""
        S, d, zero = self.S, self.S.d, self.S.zero
        changed = True
        while changed:
            changed = False
            for ij in self.pairs:
                if ij in pairs_done:
                    continue
                i, j = ij
                if cols[i] is None or cols[j] is None:
                    continue
                v = S.prod[i][j]
                unknown = [k for k in v if cols[k] is None]
                if len(unknown) > 1:
                    continue
                lhs = S.mul(cols[i], cols[j])
                known = {k: c for k, c in v.items() if cols[k] is not None}
                rhs = _combine(cols, known, zero, d)
                pairs_done.add(ij)
                if not unknown:
                    if lhs != rhs:
                        return False
                    continue
                k = unknown[0]
                inv = v[k].inverse()
                if not self._set(cols, k, [(a - b) * inv for a, b in zip(lhs, rhs)]):
                    return False
                changed = True
            unknown = [l for l in self.unit_supp if cols[l] is None]
            if len(unknown) == 1:
                k = unknown[0]
                known = {l: S.u[l] for l in self.unit_supp if l != k}
                rest = _combine(cols, known, zero, d)
                inv = S.u[k].inverse()
                if not self._set(cols, k, [(a - b) * inv for a, b in zip(S.u, rest)]):
                    return False
                changed = True
        return True

    def _checks(self, cols, cols_done):
        S, d, zero = self.S, self.S.d, self.S.zero
        one = S.F.one()
        for i in range(d):
            ci = cols[i]
            if ci is None or i in cols_done:
                continue
            cop = S.cop[i]
            if not all(cols[p] is not None and cols[q] is not None for (p, q) in cop):
                continue
            supp = {l: c for l, c in enumerate(ci) if c}
            if self.involutive and not all(cols[l] is not None for l in supp):
                continue
            cols_done.add(i)
            if self.involutive:
                img = _combine(cols, supp, zero, d)
                if any(img[t] != (one if t == i else zero) for t in range(d)):
                    return False
            lhs = S.comul(ci)
            rhs: Dict[Tuple[int, int], CycScalar] = {}
            for (p, q), c in cop.items():
                cp, cq = cols[p], cols[q]
                for a in range(d):
                    if not cp[a]:
                        continue
                    ca = c * cp[a]
                    for b in range(d):
                        if cq[b]:
                            rhs[(a, b)] = rhs.get((a, b), zero) + ca * cq[b]
            rhs = {k: v for k, v in rhs.items() if v}
            if lhs != rhs:
                return False
        if all(c is not None for c in cols):
            if _combine(cols, {l: S.u[l] for l in self.unit_supp}, zero, d) != S.u:
                return False
        return True

    def _column_candidates(self, k):
        S, d = self.S, self.S.d
        L = self.lattice
        p = self.eps_pivot
        others = [t for t in range(d) if t != p]
        n = len(L)
        for code in range(n ** len(others)):
            self._tick()
            col = [S.zero] * d
            rest = code
            for t in others:
                col[t] = L[rest % n]
                rest //= n
            if p is not None:
                acc = S.eps[k]
                for t in others:
                    if S.eps[t] and col[t]:
                        acc = acc - S.eps[t] * col[t]
                col[p] = acc / S.eps[p]
            yield col

    def run(self):
        d = self.S.d
        self._dfs([None] * d, set(), set())
        return self.found

    def _dfs(self, cols, pairs_done, cols_done):
        if not self._propagate(cols, pairs_done) or not self._checks(cols, cols_done):
            return
        try:
            k = cols.index(None)
        except ValueError:
            self.found.append([list(c) for c in cols])
            return
        for cand in self._column_candidates(k):
            trial = list(cols)
            if not self._set(trial, k, cand):
                continue
            self._dfs(trial, set(pairs_done), set(cols_done))


def _cols_to_mat(F, cols) -> Mat:
    d = len(cols)
    return Mat.from_rows(F, [[cols[j][i] for j in range(d)] for i in range(d)], d)


def _check_dim(fa: FrobAlgebra, max_dim: int):
    if fa.dim == 0:
        raise PreconditionError("dimension 0 is not supported here")
    if fa.dim > max_dim:
        raise CapacityError(f"dimension {fa.dim} exceeds bound {max_dim}")


def search_frobenius_endomorphisms(
    fa: FrobAlgebra,
    lattice: CandidateLattice,
    involutive: bool = False,
    budget: Optional[int] = None,
    max_dim: int = DEFAULT_MAX_DIM,
) -> List[Mat]:
    """Algebra-and-coalgebra endomorphisms whose free entries lie in the lattice."""
    _check_dim(fa, max_dim)
    search = _EndoSearch(fa, lattice, involutive, search_budget() if budget is None else budget)
    found = search.run()
    mats = {}
    for cols in found:
        M = _cols_to_mat(fa.field, cols)
        mats[M] = None
    return sorted(mats, key=lambda M: M.sort_key())


def find_frobenius_involutions(
    fa: FrobAlgebra,
    lattice: CandidateLattice,
    budget: Optional[int] = None,
    max_dim: int = DEFAULT_MAX_DIM,
) -> List[Mat]:
    """All phi satisfying condition (i) whose free entries come from the lattice."""
    return search_frobenius_endomorphisms(fa, lattice, True, budget, max_dim)


# -- theta ----------------------------------------------------------------


def theta_constraint_space(fa: FrobAlgebra, phi: Mat) -> List[Vec]:
    """Basis of {theta : phi(theta a) = theta a for all a}; each vector has a 1 at its free coordinate."""
    S = _Structure(fa)
    d, F = S.d, fa.field
    D = phi - Mat.identity(F, d)
    rows = []
    for a in range(d):
        # column t: (phi - I) applied to e_t e_a
        block = [[F.zero()] * d for _ in range(d)]
        for t in range(d):
            v = [F.zero()] * d
            for k, c in S.prod[t][a].items():
                v[k] = c
            img = D.apply(Vec(F, v))
            for r in range(d):
                block[r][t] = img[r]
        rows.extend(block)
    A = Mat.from_rows(F, rows, d)
    sol = solve_linear(A, Vec.zeros(F, A.rows))
    return sol.nullspace


def solve_theta(
    fa: FrobAlgebra,
    phi: Mat,
    lattice: CandidateLattice,
    budget: Optional[int] = None,
) -> List[Vec]:
    """All theta with (ii) and (iii) for the given phi, free coordinates from the lattice.

    theta = sum_s t_s w_s over a basis w_s of the (ii)-subspace. The quadratic
    equations theta^2 = m (phi @ I) Delta(1) are checked as soon as their
    parameters are assigned; a parameter that an equation pins down linearly
    is solved for instead of enumerated.
    """
    S = _Structure(fa)
    d, F, zero = S.d, fa.field, S.zero
    budget = search_budget() if budget is None else budget
    target = list(twisted_unit(fa, phi).entries)
    basis = [list(v.entries) for v in theta_constraint_space(fa, phi)]
    r = len(basis)
    # Q[k][(s, t)] for s <= t: coefficient of t_s t_t in coordinate k of theta^2
    Q: List[Dict[Tuple[int, int], CycScalar]] = [dict() for _ in range(d)]
    for s_ in range(r):
        for t_ in range(s_, r):
            v = S.mul(basis[s_], basis[t_])
            if s_ != t_:
                v = [x + y for x, y in zip(v, S.mul(basis[t_], basis[s_]))]
            for k in range(d):
                if v[k]:
                    Q[k][(s_, t_)] = v[k]
    by_level: Dict[int, List[int]] = {}
    for k in range(d):
        if not Q[k]:
            if target[k]:
                return []
            continue
        by_level.setdefault(max(t for _, t in Q[k]), []).append(k)
    L = lattice.values
    found = {}
    nodes = [0]

    def quad(k, level, ts):
        a = b = zero
        c = -target[k]
        for (s_, t_), q in Q[k].items():
            if t_ == level:
                if s_ == level:
                    a = a + q
                elif ts[s_]:
                    b = b + q * ts[s_]
            elif ts[s_] and ts[t_]:
                c = c + q * ts[s_] * ts[t_]
        return a, b, c

    def dfs(level, ts):
        if level == r:
            th = [zero] * d
            for t, w in zip(ts, basis):
                if t:
                    th = [x + t * y for x, y in zip(th, w)]
            if S.mul(th, th) == target:
                found[Vec(F, th)] = None
            return
        eqs = [quad(k, level, ts) for k in by_level.get(level, ())]
        forced = None
        for a, b, c in eqs:
            if not a and not b:
                if c:
                    return
            elif not a:
                forced = -c / b
                break
        cands = (forced,) if forced is not None else L
        for t in cands:
            nodes[0] += 1
            if nodes[0] > budget:
                raise CapacityError(f"theta search budget {budget} exceeded")
            if all(not ((a * t + b) * t + c) for a, b, c in eqs):
                ts.append(t)
                dfs(level + 1, ts)
                ts.pop()

    dfs(0, [])
    return sorted(found, key=lambda v: v.sort_key())


@dataclass(frozen=True)
class ThetaFamily:
    """theta = base + any combination of directions."""

    base: Vec
    directions: Tuple[Vec, ...] = ()

    def sort_key(self):
        return (self.base.sort_key(), tuple(v.sort_key() for v in self.directions))


def _span_rref(vecs: Sequence[Vec]):
    if not vecs:
        return [], []
    F = vecs[0].field
    rows, piv = rref(Mat.from_rows(F, [list(v.entries) for v in vecs], len(vecs[0])))
    return [Vec(F, rows[i]) for i in range(len(piv))], piv


def _in_span(v: Vec, basis: Sequence[Vec]) -> bool:
    if v.is_zero():
        return True
    if not basis:
        return False
    return rank(Mat.from_rows(v.field, [list(b.entries) for b in basis] + [list(v.entries)], len(v))) == len(_span_rref(basis)[0])


def family_certificate(fa: FrobAlgebra, phi: Mat, base: Vec, directions: Sequence[Vec]) -> bool:
    """Exact proof that base + span(directions) consists of solutions."""
    if not directions:
        return True
    for v in directions:
        Lv = left_mult(fa.m, v)
        if mat_mul(phi, Lv) != Lv:
            return False
        if not (fa.mult(base, v) + fa.mult(v, base)).is_zero():
            return False
    for i, v in enumerate(directions):
        for w in directions[i:]:
            if not (fa.mult(v, w) + fa.mult(w, v)).is_zero():
                return False
    return True


def theta_families(fa: FrobAlgebra, phi: Mat, thetas: Sequence[Vec]) -> List[ThetaFamily]:
    """Group lattice solutions into affine families with certified free directions."""
    remaining = sorted(thetas, key=lambda v: v.sort_key())
    out = []
    while remaining:
        s0 = remaining[0]
        dirs: List[Vec] = []
        for s in remaining[1:]:
            v = s - s0
            if _in_span(v, dirs):
                continue
            if family_certificate(fa, phi, s0, dirs + [v]):
                dirs.append(v)
        basis, piv = _span_rref(dirs)
        members = [s for s in remaining if _in_span(s - s0, basis)]
        base = s0
        for b, p in zip(basis, piv):
            if base[p]:
                base = base - b.scale(base[p])
        out.append(ThetaFamily(base, tuple(basis)))
        remaining = [s for s in remaining if s not in members]
    return sorted(out, key=lambda f: f.sort_key())


# -- classification ----------------------------------------------------------


@dataclass
class ClassifiedStructure:
    phi: Mat
    theta: Vec
    directions: Tuple[Vec, ...] = ()

    def to_dict(self):
        return {
            "phi": self.phi.to_strings(),
            "theta": self.theta.to_strings(),
            "directions": [v.to_strings() for v in self.directions],
            "phi_trivial": self.phi.is_identity(),
            "theta_trivial": self.theta.is_zero(),
        }


@dataclass
class Classification:
    structures: List[ClassifiedStructure]
    classes: List[List[int]]
    unresolved: List[Tuple[int, int]]
    links: List[Dict] = dc_field(default_factory=list)
    separations: List[Dict] = dc_field(default_factory=list)

    def to_dict(self):
        return {
            "structures": [s.to_dict() for s in self.structures],
            "classes": self.classes,
            "unresolved": [list(p) for p in self.unresolved],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def structure_invariants(fa: FrobAlgebra, phi: Mat, theta: Vec):
    """Quantities preserved by every isomorphism of extended Frobenius algebras."""
    d = fa.dim
    Lt = left_mult(fa.m, theta)
    powers = []
    p = fa.u
    for _ in range(d):
        p = fa.mult(p, theta)
        powers.append(mat_mul(fa.eps, p.as_column())[0, 0])
    traces = []
    M = phi
    for _ in range(d):
        traces.append(trace(M))
        M = mat_mul(M, Lt)
    return (charpoly(phi), charpoly(Lt), tuple(powers), tuple(traces))


class _UnionFind:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        if b < a:
            a, b = b, a
        self.p[b] = a
        return True


def _is_frobenius_automorphism(fa: FrobAlgebra, f: Mat) -> bool:
    return (
        algebra_morphism_report(f, fa, fa).ok
        and coalgebra_morphism_report(f, fa, fa).ok
        and is_invertible(f)
    )


def group_structures(
    fa: FrobAlgebra,
    structures: Sequence[ClassifiedStructure],
    witnesses: Sequence[Mat] = (),
    automorphisms: Sequence[Mat] = (),
) -> Classification:
    """Partition structures into isomorphism classes.

    Links come from witness maps (checked to be automorphisms first); pairs of
    classes are separated by the unit-line lemma or by invariants. Anything
    left over is reported as unresolved.
    """
    n = len(structures)
    uf = _UnionFind(n)
    links = []
    by_phi: Dict[Mat, List[int]] = {}
    for i, s in enumerate(structures):
        by_phi.setdefault(s.phi, []).append(i)
    maps = [("witness", f) for f in witnesses if _is_frobenius_automorphism(fa, f)]
    maps += [("search", f) for f in automorphisms]
    for kind, f in maps:
        finv = inverse(f)
        for i, s in enumerate(structures):
            phi2 = mat_mul(f, mat_mul(s.phi, finv))
            th2 = f.apply(s.theta)
            for j in by_phi.get(phi2, ()):
                t = structures[j]
                if uf.find(i) == uf.find(j):
                    continue
                if th2 == t.theta or (t.directions and _in_span(th2 - t.theta, t.directions)):
                    uf.union(i, j)
                    links.append({"from": i, "to": j, "kind": kind, "map": f.to_strings()})
    groups: Dict[int, List[int]] = {}
    for i in range(n):
        groups.setdefault(uf.find(i), []).append(i)
    classes = sorted(groups.values())
    inv = [structure_invariants(fa, s.phi, s.theta) for s in structures]
    unresolved = []
    separations = []
    for a in range(len(classes)):
        for b in range(a + 1, len(classes)):
            i, j = classes[a][0], classes[b][0]
            si = make_ext(fa, structures[i].phi, structures[i].theta)
            sj = make_ext(fa, structures[j].phi, structures[j].theta)
            if lemma_no_morph(si, sj) == "obstructed" or lemma_no_morph(sj, si) == "obstructed":
                separations.append({"pair": [i, j], "by": "unit_line_lemma"})
            elif inv[i] != inv[j]:
                separations.append({"pair": [i, j], "by": "invariants"})
            else:
                unresolved.append((i, j))
    return Classification(list(structures), classes, unresolved, links, separations)


def classify_extended(
    fa: FrobAlgebra,
    lattice: CandidateLattice,
    witnesses: Sequence[Mat] = (),
    witness_lattice: Optional[CandidateLattice] = None,
    search_witnesses: bool = True,
    budget: Optional[int] = None,
    max_dim: int = DEFAULT_MAX_DIM,
) -> Classification:
    """Every extended structure within the lattice, grouped into isomorphism classes."""
    _check_dim(fa, max_dim)
    structures = []
    for phi in find_frobenius_involutions(fa, lattice, budget, max_dim):
        thetas = solve_theta(fa, phi, lattice, budget)
        for fam in theta_families(fa, phi, thetas):
            structures.append(ClassifiedStructure(phi, fam.base, fam.directions))
    structures.sort(key=lambda s: (s.phi.sort_key(), s.theta.sort_key()))
    autos: List[Mat] = []
    if search_witnesses and structures:
        autos = search_frobenius_endomorphisms(fa, witness_lattice or lattice, False, budget, max_dim)
    return group_structures(fa, structures, witnesses, autos)
