"""Built-in Frobenius algebras, their listed extended structures, and lattices."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import gcd
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .errors import PreconditionError
from .extended import CandidateLattice, ExtFrobAlgebra, make_ext
from .frobenius import AlgebraData, FrobAlgebra, delta_from_delta_one
from .linalg import Mat, Vec
from .scalars import CycField, field_make, root_of_unity, sqrt_conductor, sqrt_rational


def _lcm(*ns):
    out = 1
    for n in ns:
        out = out * n // gcd(out, n)
    return out


# -- groups ------------------------------------------------------------------


class GroupTable:
    """Finite group by multiplication table; validated on construction."""

    def __init__(self, name: str, labels: Sequence[str], table: Sequence[Sequence[int]]):
        n = len(labels)
        if n == 0 or len(table) != n or any(len(r) != n for r in table):
            raise PreconditionError("group table must be square and non-empty")
        for r in table:
            if sorted(r) != list(range(n)):
                raise PreconditionError("each row must be a permutation (Latin square)")
        for c in range(n):
            if sorted(table[r][c] for r in range(n)) != list(range(n)):
                raise PreconditionError("each column must be a permutation (Latin square)")
        ident = [e for e in range(n) if all(table[e][a] == a and table[a][e] == a for a in range(n))]
        if not ident:
            raise PreconditionError("no identity element")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise PreconditionError(f"not associative at ({labels[a]}, {labels[b]}, {labels[c]})")
        self.name = name
        self.labels = tuple(labels)
        self.table = tuple(tuple(r) for r in table)
        self.identity = ident[0]
        self.inv = tuple(next(b for b in range(n) if table[a][b] == self.identity) for a in range(n))

    @property
    def order(self):
        return len(self.labels)

    def mul(self, a, b):
        return self.table[a][b]

    def power(self, a, k):
        r = self.identity
        for _ in range(k % self.order if k >= 0 else 0):
            r = self.mul(r, a)
        if k < 0:
            return self.power(self.inv[a], -k)
        return r

    def is_abelian(self):
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(n))

    def relabel(self, perm: Sequence[int], name=None) -> "GroupTable":
        """Same group with element perm[a] playing the role of a."""
        n = self.order
        inv = [0] * n
        for a, p in enumerate(perm):
            inv[p] = a
        table = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                table[perm[a]][perm[b]] = perm[self.table[a][b]]
        labels = [""] * n
        for a in range(n):
            labels[perm[a]] = self.labels[a]
        return GroupTable(name or self.name, labels, table)


def _power_label(k):
    return "e" if k == 0 else ("g" if k == 1 else f"g^{k}")


def cyclic_group(n: int) -> GroupTable:
    return GroupTable(f"C{n}", [_power_label(k) for k in range(n)], [[(a + b) % n for b in range(n)] for a in range(n)])


def direct_product(G: GroupTable, H: GroupTable, name=None) -> GroupTable:
    n, k = G.order, H.order
    labels = [f"({a},{b})" for a in G.labels for b in H.labels]
    table = [
        [G.mul(a // k, b // k) * k + H.mul(a % k, b % k) for b in range(n * k)] for a in range(n * k)
    ]
    return GroupTable(name or f"{G.name}x{H.name}", labels, table)


def klein_four() -> GroupTable:
    # e, g1, g2, g3 with g1 g2 = g3
    xor = [[a ^ b for b in range(4)] for a in range(4)]
    # bit patterns: g1 = 01, g2 = 10, g3 = 11
    return GroupTable("C2xC2", ["e", "g1", "g2", "g3"], xor)


def permutation_group(name: str, perms: Sequence[Tuple[int, ...]]) -> GroupTable:
    perms = list(perms)
    index = {p: i for i, p in enumerate(perms)}

    def comp(p, q):  # p after q
        return tuple(p[q[i]] for i in range(len(q)))

    table = [[index[comp(p, q)] for q in perms] for p in perms]
    labels = ["".join(str(x + 1) for x in p) for p in perms]
    return GroupTable(name, labels, table)


def symmetric_group(n: int) -> GroupTable:
    return permutation_group(f"S{n}", sorted(permutations(range(n))))


def dihedral_group(n: int) -> GroupTable:
    # r^a s^b encoded as (a, b)
    elems = [(a, b) for b in range(2) for a in range(n)]
    idx = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        a, b = x
        c, d = y
        return ((a + (c if b == 0 else -c)) % n, (b + d) % 2)

    labels = [("r^%d" % a if a else "e") + ("s" if b else "") for a, b in elems]
    labels = [l if l != "es" else "s" for l in labels]
    return GroupTable(f"D{n}", labels, [[idx[mul(x, y)] for y in elems] for x in elems])


def quaternion_group() -> GroupTable:
    # +-1, +-i, +-j, +-k via unit quaternion multiplication on signed basis
    base = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
            ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
            ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
            ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1")}
    elems = [(s, u) for s in (1, -1) for u in "1ijk"]
    idx = {e: i for i, e in enumerate(elems)}
    table = []
    for s, u in elems:
        row = []
        for t, v in elems:
            sg, w = base[(u, v)]
            row.append(idx[(s * t * sg, w)])
        table.append(row)
    labels = [("" if s == 1 else "-") + u for s, u in elems]
    return GroupTable("Q8", labels, table)


def standard_groups() -> Dict[str, GroupTable]:
    return {
        "C2": cyclic_group(2),
        "C3": cyclic_group(3),
        "C4": cyclic_group(4),
        "C2xC2": klein_four(),
        "C5": cyclic_group(5),
        "C6": cyclic_group(6),
        "S3": symmetric_group(3),
    }


# -- Frobenius algebras ------------------------------------------------------


def group_algebra(G: GroupTable, F: CycField) -> FrobAlgebra:
    """kG with Delta(1) = sum_h h (x) h^-1 and eps the coefficient of e."""
    n = G.order
    m = Mat.from_dict(F, n, n * n, {(G.mul(a, b), a * n + b): 1 for a in range(n) for b in range(n)})
    u = Vec.basis(F, n, G.identity)
    alg = AlgebraData(F, n, m, u, G.labels)
    d1 = [0] * (n * n)
    for h in range(n):
        d1[h * n + G.inv[h]] = 1
    eps = Vec.basis(F, n, G.identity).as_row()
    return delta_from_delta_one(alg, Vec(F, d1), eps)


def unit_algebra(F: CycField) -> FrobAlgebra:
    one = Mat.identity(F, 1)
    return FrobAlgebra.build(F, one, Vec(F, [1]), one, one, ("1",))


def nilpotent_algebra(n: int, F: CycField) -> FrobAlgebra:
    """k[x]/(x^n) with Delta(1) = sum_i x^i (x) x^(n-1-i)."""
    if n < 1:
        raise PreconditionError("n must be positive")
    m = Mat.from_dict(F, n, n * n, {(a + b, a * n + b): 1 for a in range(n) for b in range(n) if a + b < n})
    labels = ["1" if k == 0 else ("x" if k == 1 else f"x^{k}") for k in range(n)]
    alg = AlgebraData(F, n, m, Vec.basis(F, n, 0), tuple(labels))
    d1 = [0] * (n * n)
    for i in range(n):
        d1[i * n + (n - 1 - i)] = 1
    return delta_from_delta_one(alg, Vec(F, d1), Vec.basis(F, n, n - 1).as_row())


def taft_algebra(n: int, k: int, F: CycField) -> FrobAlgebra:
    """T_n(w), w = zeta_n^k, basis g^i x^j at index i*n + j; counit solved from counitality."""
    if n < 2 or gcd(k, n) != 1:
        raise PreconditionError("Taft algebra needs n >= 2 and a primitive root (gcd(k, n) = 1)")
    w = root_of_unity(F, n, k)
    d = n * n
    entries = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for e in range(n):
                    if b + e >= n:
                        continue
                    # (g^a x^b)(g^c x^e) = w^(-bc) g^(a+c) x^(b+e)
                    entries[(((a + c) % n) * n + b + e, (a * n + b) * d + c * n + e)] = w ** (-(b * c) % n)
    m = Mat.from_dict(F, d, d * d, entries)
    labels = []
    for i in range(n):
        for j in range(n):
            g = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
            x = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            labels.append((g + x) or "1")
    alg = AlgebraData(F, d, m, Vec.basis(F, d, 0), tuple(labels))
    d1 = [F.zero()] * (d * d)
    for j in range(n):
        gi = (j + 1) % n
        gm = (-(j + 1)) % n
        d1[(gi * n + 0) * d + gm * n + 1] = d1[(gi * n) * d + gm * n + 1] - w ** j
        d1[(j * n + 1) * d + ((-j) % n) * n + 0] = d1[(j * n + 1) * d + ((-j) % n) * n] + 1
    return delta_from_delta_one(alg, Vec(F, d1))


def matrix_algebra(n: int, F: CycField) -> FrobAlgebra:
    """Mat_n with Delta(E_ij) = sum_l E_il (x) E_lj and eps(E_ij) = delta_ij."""
    d = n * n
    entries = {}
    for i in range(n):
        for j in range(n):
            for l in range(n):
                entries[(i * n + l, (i * n + j) * d + j * n + l)] = 1
    m = Mat.from_dict(F, d, d * d, entries)
    u = Vec(F, [1 if i == j else 0 for i in range(n) for j in range(n)])
    labels = tuple(f"E{i + 1}{j + 1}" for i in range(n) for j in range(n))
    alg = AlgebraData(F, d, m, u, labels)
    d1 = [0] * (d * d)
    for i in range(n):
        for l in range(n):
            d1[(i * n + l) * d + l * n + i] = 1
    eps = Vec(F, [1 if i == j else 0 for i in range(n) for j in range(n)]).as_row()
    return delta_from_delta_one(alg, Vec(F, d1), eps)


def complex_over_real(F: Optional[CycField] = None) -> FrobAlgebra:
    """2-dim algebra span{1, i} with i^2 = -1 and Delta(1) = 1 (x) 1 - i (x) i."""
    F = F or field_make(8)
    m = Mat.from_dict(F, 2, 4, {(0, 0): 1, (1, 1): 1, (1, 2): 1, (0, 3): -1})
    alg = AlgebraData(F, 2, m, Vec(F, [1, 0]), ("1", "i"))
    return delta_from_delta_one(alg, Vec(F, [1, 0, 0, -1]))


# -- extended structures -----------------------------------------------------


def _sgn(s) -> str:
    return "+" if s > 0 else "-"


def _diag_phi(F, images: Sequence[Vec]) -> Mat:
    return Mat.from_columns(F, list(images))


def cyclic_extended(n: int, k: int, sign: int = 1, F: Optional[CycField] = None) -> ExtFrobAlgebra:
    """phi(g) = w g^-1 and theta = sign * n^(-1/2) * sum_j w^j g^(-2j), w = zeta_n^k."""
    G = cyclic_group(n)
    F = F or field_make(_lcm(n, sqrt_conductor(n)))
    fa = group_algebra(G, F)
    w = root_of_unity(F, n, k)
    cols = []
    for j in range(n):
        cols.append(Vec.basis(F, n, (-j) % n).scale(w ** j))
    phi = Mat.from_columns(F, cols)
    th = [F.zero()] * n
    for j in range(n):
        th[(-2 * j) % n] = th[(-2 * j) % n] + w ** j
    scale = sqrt_rational(F, n).inverse() * sign
    return make_ext(fa, phi, Vec(F, th).scale(scale), f"C{n}:phi(g)=w^{k}g^-1,theta={_sgn(sign)}")


def group_phi_trivial_extension(G: GroupTable, sign: int = 1, F: Optional[CycField] = None) -> ExtFrobAlgebra:
    """(I, sign * sqrt|G| e)."""
    F = F or field_make(sqrt_conductor(G.order))
    fa = group_algebra(G, F)
    theta = Vec.basis(F, G.order, G.identity).scale(sqrt_rational(F, G.order) * sign)
    return make_ext(fa, Mat.identity(F, G.order), theta, f"{G.name}:(id,{_sgn(sign)}sqrt|G| e)")


def matrix_extended(n: int, sign: int = 1, F: Optional[CycField] = None) -> ExtFrobAlgebra:
    F = F or field_make(sqrt_conductor(n))
    fa = matrix_algebra(n, F)
    return make_ext(fa, Mat.identity(F, n * n), fa.u.scale(sqrt_rational(F, n) * sign), f"Mat{n}:(id,{_sgn(sign)}sqrt(n) I)")


def unit_extensions(F: CycField) -> List[ExtFrobAlgebra]:
    fa = unit_algebra(F)
    I = Mat.identity(F, 1)
    return [make_ext(fa, I, Vec(F, [1]), "k:(id,1)"), make_ext(fa, I, Vec(F, [-1]), "k:(id,-1)")]


def complex_over_real_structures(F: Optional[CycField] = None) -> List[ExtFrobAlgebra]:
    fa = complex_over_real(F)
    F = fa.field
    r2 = sqrt_rational(F, 2)
    I = Mat.identity(F, 2)
    conj = Mat.from_rows(F, [[1, 0], [0, -1]])
    return [
        make_ext(fa, I, Vec(F, [r2, 0]), "C/R:(id,sqrt2)"),
        make_ext(fa, I, Vec(F, [-r2, 0]), "C/R:(id,-sqrt2)"),
        make_ext(fa, conj, Vec(F, [0, 0]), "C/R:(conj,0)"),
    ]


def group_element_map(G: GroupTable, F: CycField, images: Dict[int, Tuple]) -> Mat:
    """Linear map sending basis element a to sum c * b for (c, b) in images[a]."""
    cols = []
    for a in range(G.order):
        v = [F.zero()] * G.order
        for c, b in images[a]:
            v[b] = v[b] + F.coerce(c)
        cols.append(Vec(F, v))
    return Mat.from_columns(F, cols)


def _cyclic_map(n, F, c, power) -> Mat:
    """g^j -> (c g^power)^j."""
    cols = []
    for j in range(n):
        cols.append(Vec.basis(F, n, (power * j) % n).scale(c ** j))
    return Mat.from_columns(F, cols)


def _gvec(F, n, coeffs: Dict[int, object]) -> Vec:
    v = [F.zero()] * n
    for k, c in coeffs.items():
        v[k % n] = v[k % n] + F.coerce(c)
    return Vec(F, v)


def c2_listed_structures(F: Optional[CycField] = None) -> List[ExtFrobAlgebra]:
    F = F or field_make(8)
    fa = group_algebra(cyclic_group(2), F)
    r2 = sqrt_rational(F, 2)
    I = Mat.identity(F, 2)
    out = []
    for s in (1, -1):
        out.append(make_ext(fa, I, _gvec(F, 2, {0: r2 * s}), f"C2:(id,{_sgn(s)}sqrt2 e)"))
    for s in (1, -1):
        out.append(make_ext(fa, I, _gvec(F, 2, {1: r2 * s}), f"C2:(id,{_sgn(s)}sqrt2 g)"))
    out.append(make_ext(fa, _cyclic_map(2, F, F(-1), 1), Vec.zeros(F, 2), "C2:(g->-g,0)"))
    return out


def c3_listed_structures(F: Optional[CycField] = None) -> List[ExtFrobAlgebra]:
    F = F or field_make(12)
    fa = group_algebra(cyclic_group(3), F)
    r3 = sqrt_rational(F, 3)
    ir3 = r3.inverse()
    I = Mat.identity(F, 3)
    out = []
    for s in (1, -1):
        out.append(make_ext(fa, I, _gvec(F, 3, {0: r3 * s}), f"C3:(id,{_sgn(s)}sqrt3 e)"))
    for k in range(3):
        w = root_of_unity(F, 3, k)
        for s in (1, -1):
            th = _gvec(F, 3, {0: 1, 1: -2 * w, 2: -2 * w * w}).scale(ir3 * s)
            out.append(make_ext(fa, I, th, f"C3:(id,{_sgn(s)}(e-2w g-2w^2 g^2)/sqrt3),w=z3^{k}"))
    for k in range(3):
        w = root_of_unity(F, 3, k)
        phi = _cyclic_map(3, F, w, 2)
        for s in (1, -1):
            th = _gvec(F, 3, {0: 1, 1: w, 2: w * w}).scale(ir3 * s)
            out.append(make_ext(fa, phi, th, f"C3:(g->w g^2,{_sgn(s)}(e+w g+w^2 g^2)/sqrt3),w=z3^{k}"))
    return out


def c4_listed_structures(F: Optional[CycField] = None) -> List[ExtFrobAlgebra]:
    """Structures on kC4 exactly as listed in the classification, every w4 in mu_4."""
    F = F or field_make(8)
    fa = group_algebra(cyclic_group(4), F)
    i = root_of_unity(F, 4, 1)
    I = Mat.identity(F, 4)
    out = []
    a_list = [
        ("2e", {0: 2}), ("2g^2", {2: 2}),
        ("(1-i)(g+ig^3)", {1: 1 - i, 3: (1 - i) * i}),
        ("(1+i)(g-ig^3)", {1: 1 + i, 3: -(1 + i) * i}),
    ]
    for name, coeffs in a_list:
        for s in (1, -1):
            out.append(make_ext(fa, I, _gvec(F, 4, coeffs).scale(s), f"C4:(id,{_sgn(s)}{name})"))
    out.append(make_ext(fa, _cyclic_map(4, F, F(-1), 1), Vec.zeros(F, 4), "C4:(g->-g,0)"))
    for k in range(4):
        w = root_of_unity(F, 4, k)
        phi = _cyclic_map(4, F, w, 3)
        c = (1 + w * w) / 2
        seen = set()
        for name, coeffs in (("(e-g^2)", {0: c, 2: -c}), ("i(g-g^3)", {1: i * c, 3: -i * c})):
            for s in (1, -1):
                th = _gvec(F, 4, coeffs).scale(s)
                if th in seen:
                    continue
                seen.add(th)
                out.append(make_ext(fa, phi, th, f"C4:(g->w g^3,{_sgn(s)}(1+w^2)/2*{name}),w=i^{k}"))
    return out


def klein_four_extensions(F: Optional[CycField] = None) -> List[Tuple[str, ExtFrobAlgebra]]:
    """Cases (a)-(d) for every assignment of {i, j, l} = {1, 2, 3}; duplicates removed."""
    F = F or field_make(1)
    G = klein_four()
    fa = group_algebra(G, F)
    I = Mat.identity(F, 4)
    out: List[Tuple[str, ExtFrobAlgebra]] = []
    seen = set()

    def add(case, phi, th, label):
        key = (phi, th)
        if key in seen:
            return
        seen.add(key)
        out.append((case, make_ext(fa, phi, th, f"V4({case}):{label}")))

    def vec(d):
        return _gvec(F, 4, d)

    for s in (1, -1):
        add("a", I, vec({0: 2 * s}), f"{_sgn(s)}*2e")
    for i, j, l in permutations((1, 2, 3)):
        for s in (1, -1):
            add("a", I, vec({i: 2 * s}), f"{_sgn(s)}*2g{i}")
            for t in (1, -1):
                add("a", I, vec({0: s, l: s, i: s * t, j: -s * t}), f"{_sgn(s)}((e+g{l}){_sgn(t)}(g{i}-g{j}))")
                add("a", I, vec({0: s, l: -s, i: s * t, j: s * t}), f"{_sgn(s)}((e-g{l}){_sgn(t)}(g{i}+g{j}))")
        # (b) g_i -> -g_i, g_j -> -g_j
        phi_b = Mat.from_columns(F, [vec({0: 1}), vec({1: -1 if 1 in (i, j) else 1}),
                                     vec({2: -1 if 2 in (i, j) else 1}), vec({3: -1 if 3 in (i, j) else 1})])
        add("b", phi_b, vec({}), f"g{i},g{j}->-")
        # (c) swap g_i, g_j
        cols = [vec({0: 1})] + [None] * 3
        cols[i] = vec({j: 1})
        cols[j] = vec({i: 1})
        cols[l] = vec({l: 1})
        phi_c = Mat.from_columns(F, cols)
        for s in (1, -1):
            add("c", phi_c, vec({0: s, l: s}), f"swap g{i},g{j}; {_sgn(s)}(e+g{l})")
            add("c", phi_c, vec({i: s, j: s}), f"swap g{i},g{j}; {_sgn(s)}(g{i}+g{j})")
        # (d) g_i -> -g_j, g_j -> -g_i
        cols = [vec({0: 1})] + [None] * 3
        cols[i] = vec({j: -1})
        cols[j] = vec({i: -1})
        cols[l] = vec({l: 1})
        phi_d = Mat.from_columns(F, cols)
        for s in (1, -1):
            add("d", phi_d, vec({0: s, l: -s}), f"g{i}->-g{j}; {_sgn(s)}(e-g{l})")
            add("d", phi_d, vec({i: s, j: -s}), f"g{i}->-g{j}; {_sgn(s)}(g{i}-g{j})")
    return out


def nilpotent_structures(n: int, F: Optional[CycField] = None) -> List[Tuple[ExtFrobAlgebra, List[Vec]]]:
    """For odd n: (id, +-sqrt(n) x^((n-1)/2)) with free directions x^j, j >= (n+1)/2."""
    F = F or field_make(sqrt_conductor(n))
    fa = nilpotent_algebra(n, F)
    if n % 2 == 0:
        return []
    r = sqrt_rational(F, n)
    I = Mat.identity(F, n)
    dirs = [Vec.basis(F, n, j) for j in range((n + 1) // 2, n)]
    return [
        (make_ext(fa, I, Vec.basis(F, n, (n - 1) // 2).scale(r * s), f"x^{n}:(id,{_sgn(s)}sqrt(n)x^{(n - 1) // 2})"), dirs)
        for s in (1, -1)
    ]


# -- witnesses and lattices ---------------------------------------------------


def c2_witnesses(F: CycField) -> List[Mat]:
    return [_cyclic_map(2, F, F(-1), 1)]


def c3_witnesses(F: CycField) -> List[Mat]:
    """g -> w g and g -> g^2; both are Frobenius automorphisms of kC3."""
    return [_cyclic_map(3, F, root_of_unity(F, 3, 1), 1), _cyclic_map(3, F, F(1), 2)]


def c4_witnesses(F: CycField) -> List[Mat]:
    return [_cyclic_map(4, F, F(-1), 1), _cyclic_map(4, F, root_of_unity(F, 4, 1), 1)]


def _signed(F, values):
    out = [F.zero()]
    for v in values:
        out.extend([F.coerce(v), -F.coerce(v)])
    return out


@dataclass
class Family:
    name: str
    conductor: int
    build: Callable[[CycField], FrobAlgebra]
    lattice: Callable[[CycField], CandidateLattice]
    witnesses: Callable[[CycField], List[Mat]] = lambda F: []
    witness_lattice: Optional[Callable[[CycField], CandidateLattice]] = None
    description: str = ""

    def field(self, conductor: Optional[int] = None) -> CycField:
        N = conductor or self.conductor
        if N % self.conductor:
            raise PreconditionError(f"family {self.name} needs conductor divisible by {self.conductor}")
        return field_make(N)


def _lat(name, f):
    return lambda F: CandidateLattice.make(F, f(F), name)


def _c3_lattice(F):
    r3 = sqrt_rational(F, 3)
    vals = [1, r3]
    for k in range(3):
        w = root_of_unity(F, 3, k)
        vals += [w, w / r3, 2 * w / r3]
    return _signed(F, vals)


def _c4_lattice(F):
    i = root_of_unity(F, 4, 1)
    return _signed(F, [1, i, 2, 2 * i, 1 + i, 1 - i])


def _c4_witness_lattice(F):
    i = root_of_unity(F, 4, 1)
    h = Fraction(1, 2)
    return _signed(F, [1, i, h, h * i, (1 + i) * h, (1 - i) * h])


def _roots_lattice(n):
    def f(F):
        return [F.zero()] + [root_of_unity(F, 2 * n if n % 2 else n, k) for k in range(2 * n if n % 2 else n)]

    return f


def _sqrt_lattice(n):
    def f(F):
        return _signed(F, [1, sqrt_rational(F, n)])

    return f


def families() -> Dict[str, Family]:
    fams = {
        "k": Family("k", 1, unit_algebra, _lat("pm1", lambda F: _signed(F, [1])), description="ground field"),
        "CoverR": Family("CoverR", 8, complex_over_real, _lat("real_sqrt2", _sqrt_lattice(2)),
                         description="complex numbers over the reals, basis {1, i}"),
        "kC2": Family("kC2", 8, lambda F: group_algebra(cyclic_group(2), F), _lat("sqrt2", _sqrt_lattice(2)),
                      c2_witnesses, description="group algebra of C2"),
        "kC3": Family("kC3", 12, lambda F: group_algebra(cyclic_group(3), F), _lat("c3", _c3_lattice),
                      c3_witnesses, description="group algebra of C3"),
        "kC4": Family("kC4", 8, lambda F: group_algebra(cyclic_group(4), F), _lat("c4", _c4_lattice),
                      c4_witnesses, _lat("c4_half_gaussian", _c4_witness_lattice), description="group algebra of C4"),
        "kC5": Family("kC5", 5, lambda F: group_algebra(cyclic_group(5), F), _lat("mu10", _roots_lattice(5)),
                      description="group algebra of C5"),
        "kC6": Family("kC6", 6, lambda F: group_algebra(cyclic_group(6), F), _lat("mu6", _roots_lattice(6)),
                      description="group algebra of C6"),
        "klein": Family("klein", 1, lambda F: group_algebra(klein_four(), F),
                        _lat("klein", lambda F: _signed(F, [1, 2])), description="group algebra of C2 x C2",
                        witness_lattice=_lat("halves", lambda F: _signed(F, [1, Fraction(1, 2)]))),
        "T2": Family("T2", 2, lambda F: taft_algebra(2, 1, F), _lat("pm1", lambda F: _signed(F, [1])),
                     description="Taft algebra T_2(-1)"),
        "Mat2": Family("Mat2", 8, lambda F: matrix_algebra(2, F), _lat("sqrt2", _sqrt_lattice(2)),
                       description="2x2 matrices"),
    }
    for n in range(2, 7):
        fams[f"x{n}"] = Family(
            f"x{n}", sqrt_conductor(n), (lambda n: lambda F: nilpotent_algebra(n, F))(n),
            _lat(f"sqrt{n}", _sqrt_lattice(n)), description=f"k[x]/(x^{n})",
        )
    return fams


def get_family(name: str) -> Family:
    fams = families()
    if name not in fams:
        raise KeyError(f"unknown family {name!r}; known: {', '.join(sorted(fams))}")
    return fams[name]


def listed_extensions(name: str, F: Optional[CycField] = None) -> List[ExtFrobAlgebra]:
    """The closed-form structures shipped for a family (free directions dropped)."""
    fam = get_family(name)
    F = F or fam.field()
    if name == "k":
        return unit_extensions(F)
    if name == "CoverR":
        return complex_over_real_structures(F)
    if name == "kC2":
        return c2_listed_structures(F)
    if name == "kC3":
        return c3_listed_structures(F)
    if name == "kC4":
        return c4_listed_structures(F)
    if name == "klein":
        return [e for _, e in klein_four_extensions(F)]
    if name == "Mat2":
        return [matrix_extended(2, s, F) for s in (1, -1)]
    if name.startswith("x"):
        return [e for e, _ in nilpotent_structures(int(name[1:]), F)]
    return []
