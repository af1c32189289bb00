"""The acceptance suite: each criterion is a function that computes its
quantities exactly and returns named checks; the runner times it and
renders one PASS/FAIL line. Shared by tests/test_acceptance.py and the
``frobex acceptance`` command.

Criteria 9 and 10 range over every structure and morphism the run produces;
that corpus is assembled in an untimed preparation step so their runtime
bound applies to the checks themselves.
"""

import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from .catalog import (
    c2_listed_structures,
    c3_listed_structures,
    c4_listed_structures,
    complex_over_real_structures,
    cyclic_group,
    get_family,
    group_algebra,
    klein_four,
    klein_four_extensions,
    matrix_algebra,
    matrix_extended,
    symmetric_group,
    unit_algebra,
    unit_extensions,
)
from .errors import HypothesisMismatch
from .extended import (
    CandidateLattice,
    ClassifiedStructure,
    ExtFrobAlgebra,
    check_ext_morphism,
    check_extended,
    check_key_identity,
    classify_extended,
    find_frobenius_involutions,
    group_structures,
    make_ext,
    separable_extension,
    solve_theta,
    theta_families,
    _span_rref,
)
from .frobenius import FrobAlgebra, check_frobenius, rescale
from .functors import (
    BiproductWith,
    TensorWith,
    apply_functor,
    biproduct_ext,
    check_extended_functor,
    check_frobenius_functor,
    check_separable_functor,
    compare_structures,
    compose_functors,
    make_sample,
    tensor_product_ext,
)
from .hopf import (
    check_extended_hopf,
    check_lemma_A1,
    group_hopf_algebra,
    integral_theta_extension,
    psi,
)
from .linalg import Mat, Vec, inverse, mat_mul
from .scalars import field_make, sqrt_conductor, sqrt_rational


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    info: bool = False  # printed as a note, never affects the verdict


@dataclass
class CriterionResult:
    number: int
    title: str
    checks: List[Check]
    elapsed: float
    limit: Optional[float]
    blocking: bool = True
    error: str = ""

    @property
    def in_time(self) -> bool:
        return self.limit is None or self.elapsed < self.limit

    @property
    def passed(self) -> bool:
        return not self.error and self.in_time and all(c.ok for c in self.checks if not c.info)

    @property
    def label(self) -> str:
        if not self.blocking:
            return "EVIDENCE" if self.passed else "EVIDENCE-AGAINST"
        return "PASS" if self.passed else "FAIL"

    def line(self) -> str:
        bound = f" < {self.limit:g}s" if self.limit is not None else ""
        head = f"{self.label} [{self.number:2d}] {self.title} ({self.elapsed:.2f}s{bound})"
        if self.error:
            return f"{head}: error: {self.error}"
        bad = [c for c in self.checks if not c.ok and not c.info]
        if not self.in_time:
            bad = bad + [Check("runtime", False, f"{self.elapsed:.2f}s exceeds {self.limit:g}s")]
        shown = bad if bad else [c for c in self.checks if c.info]
        if shown:
            parts = [("note: " if c.info else "") + (f"{c.name}: {c.detail}" if c.detail else c.name) for c in shown]
            return head + ": " + "; ".join(parts)
        return head

    def to_dict(self):
        return {
            "criterion": self.number,
            "title": self.title,
            "label": self.label,
            "passed": self.passed,
            "elapsed_s": round(self.elapsed, 3),
            "limit_s": self.limit,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail, "info": c.info} for c in self.checks],
            "error": self.error,
        }


class Context:
    """Caches shared between criteria: classifications and the morphism log."""

    def __init__(self):
        self.classifications: Dict[str, Tuple[FrobAlgebra, object]] = {}
        self.extra_structures: List[ExtFrobAlgebra] = []

    def classify(self, family: str, fresh: bool = False):
        if fresh or family not in self.classifications:
            fam = get_family(family)
            F = fam.field()
            fa = fam.build(F)
            wl = fam.witness_lattice(F) if fam.witness_lattice else None
            cl = classify_extended(fa, fam.lattice(F), fam.witnesses(F), wl)
            self.classifications[family] = (fa, cl)
        return self.classifications[family]

    def corpus(self) -> List[ExtFrobAlgebra]:
        """Every structure the suite produces: catalog lists, classifier output,
        Hopf-derived and product structures."""
        out: List[ExtFrobAlgebra] = []
        for fam in ("k", "CoverR", "kC2", "kC3", "kC4", "klein", "x3", "x5", "T2", "Mat2"):
            fa, cl = self.classify(fam)
            for k, s in enumerate(cl.structures):
                out.append(make_ext(fa, s.phi, s.theta, f"{fam}#{k}"))
                if s.directions:
                    moved = s.theta
                    for v in s.directions:
                        moved = moved + v
                    out.append(make_ext(fa, s.phi, moved, f"{fam}#{k}+dirs"))
        out += c2_listed_structures() + c3_listed_structures()
        out += [e for e in c4_listed_structures() if check_extended(e).ok]
        out += [e for _, e in klein_four_extensions()]
        out += [matrix_extended(n, s) for n in (1, 2, 3) for s in (1, -1)]
        out += self.extra_structures
        return out


def _product_pairs() -> List[Tuple[ExtFrobAlgebra, ExtFrobAlgebra]]:
    F = field_make(24)
    base = (
        unit_extensions(F)
        + c2_listed_structures(F)
        + complex_over_real_structures(F)
        + [matrix_extended(2, 1, F)]
    )
    return [(a, b) for a in base for b in base if a.dim * b.dim <= 16 and a.dim + b.dim <= 16]


# -- criteria ----------------------------------------------------------------


def _key(phi, theta):
    return (phi, theta)


def c01(ctx) -> List[Check]:
    F = field_make(1)
    fa = unit_algebra(F)
    lat = CandidateLattice.make(F, [0, 1, -1], "pm1")
    cl = classify_extended(fa, lat)
    got = {_key(s.phi, s.theta) for s in cl.structures}
    want = {_key(e.phi, e.theta) for e in unit_extensions(F)}
    return [
        Check("structures", got == want and len(cl.structures) == 2, f"{len(cl.structures)} found"),
        Check("no_free_directions", all(not s.directions for s in cl.structures)),
        Check("classes", len(cl.classes) == 2, f"{len(cl.classes)} classes"),
        Check("unresolved", not cl.unresolved, f"{len(cl.unresolved)} unresolved"),
    ]


def c02(ctx) -> List[Check]:
    fa, cl = ctx.classify("CoverR", fresh=True)
    got = {_key(s.phi, s.theta) for s in cl.structures}
    want = {_key(e.phi, e.theta) for e in complex_over_real_structures(fa.field)}
    return [
        Check("structures", got == want and len(cl.structures) == 3, f"{len(cl.structures)} found"),
        Check("classes", len(cl.classes) == 3, f"{len(cl.classes)} classes"),
        Check("unresolved", not cl.unresolved),
    ]


def _same_span(F, a, b) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    return _span_rref(list(a)) == _span_rref(list(b)) and _span_rref(list(a) + list(b)) == _span_rref(list(a))


def c03(ctx) -> List[Check]:
    checks = []
    for n in (2, 3, 4, 5, 6):
        fa, cl = ctx.classify(f"x{n}", fresh=True)
        F = fa.field
        if n % 2 == 0:
            checks.append(Check(f"x^{n} not extendable", not cl.structures, f"{len(cl.structures)} structures"))
            continue
        r = sqrt_rational(F, n)
        mid = (n - 1) // 2
        bases = {s.theta for s in cl.structures}
        want = {Vec.basis(F, n, mid).scale(r), Vec.basis(F, n, mid).scale(-r)}
        tail = [Vec.basis(F, n, j) for j in range((n + 1) // 2, n)]
        checks.append(Check(f"x^{n} phi-trivial", all(s.phi.is_identity() for s in cl.structures)))
        checks.append(Check(f"x^{n} basepoints", bases == want and len(cl.structures) == 2,
                            f"{[v.to_strings() for v in bases]}"))
        checks.append(Check(f"x^{n} tail directions",
                            all(_same_span(F, s.directions, tail) for s in cl.structures)))
    return checks


def c04(ctx) -> List[Check]:
    fa, cl = ctx.classify("kC2", fresh=True)
    F = fa.field
    r2 = sqrt_rational(F, 2)
    idx = {_key(s.phi, s.theta): i for i, s in enumerate(cl.structures)}
    I = Mat.identity(F, 2)
    a, b = idx.get(_key(I, Vec(F, [0, r2]))), idx.get(_key(I, Vec(F, [0, -r2])))
    cls_of = {i: k for k, c in enumerate(cl.classes) for i in c}
    paired = a is not None and b is not None and cls_of[a] == cls_of[b]
    witnessed = any(
        {l["from"], l["to"]} == {a, b} and l["kind"] == "witness" for l in cl.links
    )
    return [
        Check("structures", len(cl.structures) == 6, f"{len(cl.structures)} structures found, 6 expected"),
        Check("classes", len(cl.classes) == 4, f"{len(cl.classes)} classes"),
        Check("witness pairs (id,+-sqrt2 g)", paired and witnessed),
        Check("unresolved", not cl.unresolved, f"{len(cl.unresolved)} unresolved"),
    ]


def _group_listed(fa, listed, witnesses):
    structs = [ClassifiedStructure(e.phi, e.theta) for e in listed]
    return group_structures(fa, structs, witnesses)


def c05(ctx) -> List[Check]:
    fam = get_family("kC3")
    F = fam.field()
    listed = c3_listed_structures(F)
    fails = [e.name for e in listed if not check_extended(e).ok]
    cl = _group_listed(listed[0].frob, listed, fam.witnesses(F))
    return [
        Check("listed structures pass", not fails, ", ".join(fails)),
        Check("all non-isomorphic", len(cl.classes) == len(listed),
              f"{len(cl.classes)} classes for {len(listed)} listed structures"),
        Check("unresolved", not cl.unresolved, f"{len(cl.unresolved)} unresolved"),
    ]


def c06(ctx) -> List[Check]:
    fam = get_family("kC4")
    F = fam.field()
    listed = c4_listed_structures(F)
    reports = [(e, check_extended(e)) for e in listed]
    fails = [e.name for e, r in reports if not r.ok]
    passing = [e for e, r in reports if r.ok]
    cl = _group_listed(listed[0].frob, passing, fam.witnesses(F))
    return [
        Check("listed structures pass", not fails, f"{len(fails)} fail: " + ", ".join(fails)),
        Check("eight classes", len(cl.classes) == 8,
              f"{len(cl.classes)} classes among {len(passing)} passing listed structures, "
              f"{len(cl.unresolved)} unresolved pairs"),
    ]


def c07(ctx) -> List[Check]:
    ext = klein_four_extensions()
    fails = [e.name for _, e in ext if not check_extended(e).ok]
    cases = sorted({c for c, _ in ext})
    return [
        Check("all cases pass", not fails, ", ".join(fails)),
        Check("cases a-d present", cases == ["a", "b", "c", "d"], str(cases)),
    ]


def c08(ctx) -> List[Check]:
    fam = get_family("T2")
    F = fam.field()
    fa = fam.build(F)
    lat = fam.lattice(F)
    invs = find_frobenius_involutions(fa, lat)
    I = Mat.identity(F, 4)
    thetas = {}
    for phi in invs:
        thetas[phi] = theta_families(fa, phi, solve_theta(fa, phi, lat))
    x, gx = Vec.basis(F, 4, 1), Vec.basis(F, 4, 3)
    fams = [f for fs in thetas.values() for f in fs]
    span_ok = (
        len(fams) == 1
        and fams[0].base.is_zero()
        and _same_span(F, fams[0].directions, [x, gx])
        and all(not fs for phi, fs in thetas.items() if phi != I)
    )
    sq_ok = all(fa.mult(v, w) + fa.mult(w, v) == Vec.zeros(F, 4) for v in (x, gx) for w in (x, gx))
    names = ["id" if p == I else str(p.to_strings()) for p in invs]
    return [
        Check("involutions == {id}", invs == [I], f"found {len(invs)}: {names}"),
        Check("theta span {x, gx}", span_ok),
        Check("theta^2 = 0 on span", sq_ok),
    ]


def c09(ctx, corpus) -> List[Check]:
    bad = [e.name for e in corpus if not check_key_identity(e)]
    return [
        Check("at least 40 structures", len(corpus) >= 40, f"{len(corpus)} structures"),
        Check("key identity", not bad, ", ".join(bad[:5])),
    ]


def c10(ctx, corpus) -> List[Check]:
    by_frob: Dict[FrobAlgebra, Dict] = {}
    for e in corpus:
        by_frob.setdefault(e.frob, {})[(e.phi, e.theta)] = e
    tried = passed = violations = 0
    for fam in ("kC2", "kC3", "kC4", "klein", "CoverR", "T2"):
        fa, cl = ctx.classify(fam)
        maps = [Mat.from_rows(fa.field, m["map"]) for m in cl.links]
        maps += [Mat.identity(fa.field, fa.dim), Mat.zeros(fa.field, fa.dim, fa.dim)]
        table = by_frob.get(fa, {})
        for f in maps:
            finv = inverse(f)
            for (phi, theta), src in table.items():
                if finv is not None:
                    dst = table.get((mat_mul(f, mat_mul(phi, finv)), f.apply(theta)))
                else:
                    dst = src
                if dst is None:
                    continue
                tried += 1
                rep = check_ext_morphism(src, dst, f)
                if rep.ok:
                    passed += 1
                elif any(r.name == "invertible" and not r.ok for r in rep.results):
                    violations += 1
    return [
        Check("morphisms exercised", passed > 0, f"{passed} of {tried} candidate maps pass"),
        Check("singular passing morphisms", violations == 0, f"{violations} violations"),
    ]


def c11(ctx) -> List[Check]:
    pairs = _product_pairs()
    bad = []
    for a, b in pairs:
        for op, name in ((tensor_product_ext, "(x)"), (biproduct_ext, "+")):
            if not check_extended(op(a, b)).ok:
                bad.append(f"{a.name} {name} {b.name}")
    return [
        Check("at least 25 pairs", len(pairs) >= 25, f"{len(pairs)} pairs"),
        Check("products pass", not bad, ", ".join(bad[:5])),
    ]


def c12(ctx) -> List[Check]:
    checks = []
    F1 = field_make(1)
    ext = separable_extension(unit_algebra(F1))
    checks.append(Check("unit algebra", check_extended(make_ext(unit_algebra(F1), ext.phi, ext.theta)).ok))
    for n in (2, 3):
        F = field_make(sqrt_conductor(n))
        fa = rescale(matrix_algebra(n, F), F.coerce(1) / n)
        ext = separable_extension(fa)
        checks.append(Check(f"rescaled Mat{n}", check_extended(make_ext(fa, ext.phi, ext.theta)).ok))
    for n in (1, 2, 3):
        for s in (1, -1):
            e = matrix_extended(n, s)
            checks.append(Check(f"Mat{n} (id,{'+' if s > 0 else '-'}sqrt{n} I)", check_extended(e).ok))
    return checks


def _hopf_groups():
    return [
        cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_four(),
        cyclic_group(5), cyclic_group(6), symmetric_group(3),
    ]


def c13(ctx) -> List[Check]:
    checks = []
    F = field_make(1)
    for G in _hopf_groups():
        h = group_hopf_algebra(G, F)
        fa = psi(h)
        ga = group_algebra(G, F)
        same = fa.m == ga.m and fa.u == ga.u and fa.delta == ga.delta and fa.eps == ga.eps
        checks.append(Check(f"{G.name} psi Frobenius", check_frobenius(fa).ok))
        checks.append(Check(f"{G.name} psi = group algebra", same))
        checks.append(Check(f"{G.name} A.1(a),(b)", check_lemma_A1(h).ok))
    return checks


def c14(ctx) -> List[Check]:
    checks = []
    for G in _hopf_groups():
        F = field_make(sqrt_conductor(G.order))
        h = group_hopf_algebra(G, F)
        theta = h.u.scale(sqrt_rational(F, G.order))
        e = integral_theta_extension(h, theta)
        checks.append(Check(f"{G.name} sqrt|G| u", check_extended(e).ok))
        ctx.extra_structures.append(e)
        try:
            integral_theta_extension(h, h.u)
            checks.append(Check(f"{G.name} wrong theta rejected", False, "accepted"))
        except HypothesisMismatch as exc:
            checks.append(Check(f"{G.name} wrong theta rejected", exc.lhs != exc.rhs and bool(exc.lhs)))
    return checks


def c15(ctx) -> List[Check]:
    F = field_make(8)
    h = group_hopf_algebra(cyclic_group(2), F)
    r2 = sqrt_rational(F, 2)
    I = Mat.identity(F, 2)
    neg = Mat.from_rows(F, [[1, 0], [0, -1]])
    zero = Vec.zeros(F, 2)
    good = check_extended_hopf(h, I, h.u.scale(r2))
    bad = check_extended_hopf(h, neg, zero)
    frob_side = check_extended(make_ext(psi(h), neg, zero))
    return [
        Check("(id, sqrt2 e) extends the Hopf structure", good.ok),
        Check("(g->-g, 0) fails on the Hopf side", not bad.ok,
              ", ".join(r.name for r in bad.failed())),
        Check("(g->-g, 0) passes on the Frobenius side", frob_side.ok),
    ]


def _functor_bases():
    listed = c2_listed_structures()
    F = listed[0].field
    I = Mat.identity(F, 2)
    B1 = next(e for e in listed if e.phi == I and e.theta == Vec(F, [sqrt_rational(F, 2), 0]))
    B2 = next(e for e in listed if e.phi != I)
    return F, B1, B2


def c16(ctx) -> List[Check]:
    F, B1, B2 = _functor_bases()
    sample = make_sample(F, (1, 2, 3), seed=0)
    checks = []
    for B in (B1, B2):
        for Fn in (TensorWith(B), BiproductWith(B)):
            fr = check_frobenius_functor(Fn, sample)
            ex = check_extended_functor(Fn, sample)
            failed = [r.name for r in fr.failed() + ex.failed()]
            checks.append(Check(f"{Fn.name}", fr.ok and ex.ok, ", ".join(failed[:3])))
    plain = TensorWith(group_algebra(cyclic_group(2), F))
    checks.append(Check("-(x)kC2 not separable", not check_separable_functor(plain, sample)))
    return checks


def c17(ctx) -> List[Check]:
    listed = c2_listed_structures()
    F = listed[0].field
    extra = [unit_extensions(F)[0]]
    checks = []
    bad = []
    n = 0
    for A in listed + extra:
        for B in listed:
            for Fn, direct in ((TensorWith(B), tensor_product_ext), (BiproductWith(B), biproduct_ext)):
                out = apply_functor(Fn, A)
                n += 1
                ok = check_extended(out).ok and compare_structures(out, direct(A, B)).ok
                if not ok:
                    bad.append(f"{Fn.name}({A.name})")
                ctx.extra_structures.append(out)
    checks.append(Check("apply_functor passes and matches", not bad, f"{len(bad)} of {n} differ: " + ", ".join(bad[:3])))
    return checks


def c18(ctx) -> List[Check]:
    F, B1, B2 = _functor_bases()
    sample = make_sample(F, (1, 2), seed=0)
    pairs = [
        (TensorWith(B1), TensorWith(B2)),
        (BiproductWith(B1), TensorWith(B2)),
        (TensorWith(B2), BiproductWith(B1)),
        (BiproductWith(B2), BiproductWith(B1)),
    ]
    checks = []
    for G, Fn in pairs:
        C = compose_functors(G, Fn, sample)
        fr = check_frobenius_functor(C, sample)
        ex = check_extended_functor(C, sample)
        checks.append(Check(C.name, fr.ok and ex.ok, ", ".join(r.name for r in (fr.failed() + ex.failed())[:3])))
    return checks


def conjecture_shape(phi: Mat, n: int) -> Optional[str]:
    """Name of the allowed shape phi(g) = +-g or w g^-1, or None."""
    F = phi.field
    col = phi.column(1 % n)
    nz = [(k, c) for k, c in enumerate(col) if c]
    if len(nz) != 1:
        return None
    k, c = nz[0]
    for j in range(n):
        for cand in (Vec.basis(F, n, (k * j) % n).scale(c ** j),):
            if phi.column(j) != cand:
                return None
    if k == 1 and c == 1:
        return "g"
    if k == 1 and c == -1 and n % 2 == 0:
        return "-g"
    if k == n - 1 and c ** n == 1:
        return "w g^-1"
    return None


def c19(ctx) -> List[Check]:
    """Every Frobenius involution found has an allowed shape, so in particular
    every one that carries a theta does."""
    checks = []
    for n, fam_name in ((5, "kC5"), (6, "kC6")):
        fam = get_family(fam_name)
        F = fam.field()
        fa = fam.build(F)
        invs = find_frobenius_involutions(fa, fam.lattice(F))
        odd = [p for p in invs if conjecture_shape(p, n) is None]
        counts: Dict[str, int] = {}
        for p in invs:
            k = conjecture_shape(p, n) or "other"
            counts[k] = counts.get(k, 0) + 1
        checks.append(Check(f"C{n} involution shapes", not odd, f"{len(invs)} involutions: {counts}"))
    # beyond the documented lattices the shapes are not exhaustive
    fam = get_family("kC4")
    F = fam.field()
    fa = fam.build(F)
    wide = CandidateLattice.make(F, list(fam.lattice(F).values) + list(fam.witness_lattice(F).values))
    others = [p for p in find_frobenius_involutions(fa, wide) if conjecture_shape(p, 4) is None]
    carrying = [p for p in others if solve_theta(fa, p, fam.lattice(F))]
    checks.append(Check(
        "C4 with half-Gaussian entries", False,
        f"{len(others)} involutions outside the shapes, {len(carrying)} of them carry a theta", info=True,
    ))
    return checks


@dataclass
class Criterion:
    number: int
    title: str
    limit: Optional[float]
    fn: Callable
    blocking: bool = True
    needs_corpus: bool = False


CRITERIA: List[Criterion] = [
    Criterion(1, "ground field: (id,+-1), 2 classes", 1, c01),
    Criterion(2, "complex numbers over the reals: 3 classes", 1, c02),
    Criterion(3, "truncated polynomials x^2..x^6", 5, c03),
    Criterion(4, "kC2: 6 structures, 4 classes", 5, c04),
    Criterion(5, "kC3: listed structures pass and are non-isomorphic", 10, c05),
    Criterion(6, "kC4: listed structures pass, 8 classes", 30, c06),
    Criterion(7, "Klein four: all cases pass", 5, c07),
    Criterion(8, "Taft T2(-1): involutions {id}, theta span {x, gx}", 5, c08),
    Criterion(9, "key identity on every produced structure", 5, c09, needs_corpus=True),
    Criterion(10, "passing morphisms are invertible", None, c10, needs_corpus=True),
    Criterion(11, "tensor and direct products of catalog pairs", 60, c11),
    Criterion(12, "separable extensions and Mat_n (id, +-sqrt(n) I)", 10, c12),
    Criterion(13, "Hopf to Frobenius on group algebras", 30, c13),
    Criterion(14, "integral theta extensions", 10, c14),
    Criterion(15, "extended Hopf vs extended Frobenius on kC2", 5, c15),
    Criterion(16, "tensor and direct-sum functors are extended", 60, c16),
    Criterion(17, "apply_functor matches direct products", 30, c17),
    Criterion(18, "composites of extended functors", 60, c18),
    Criterion(19, "involution shapes on kC5, kC6 (informational)", None, c19, blocking=False),
]


def run_criterion(c: Criterion, ctx: Optional[Context] = None) -> CriterionResult:
    ctx = ctx or Context()
    args = ()
    if c.needs_corpus:
        args = (ctx.corpus(),)
    t0 = time.perf_counter()
    try:
        checks = c.fn(ctx, *args)
        err = ""
    except Exception as exc:  # reported as a failing line, not raised
        checks, err = [], f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - t0
    return CriterionResult(c.number, c.title, checks, elapsed, c.limit, c.blocking, err)


def run_all(numbers=None, echo: Optional[Callable[[str], None]] = None) -> List[CriterionResult]:
    ctx = Context()
    out = []
    for c in CRITERIA:
        if numbers and c.number not in numbers:
            continue
        r = run_criterion(c, ctx)
        out.append(r)
        if echo:
            echo(r.line())
    return out


def get_criterion(number: int) -> Criterion:
    for c in CRITERIA:
        if c.number == number:
            return c
    raise KeyError(number)


__all__ = ["CRITERIA", "Criterion", "CriterionResult", "Check", "Context", "run_all", "run_criterion", "get_criterion"]
