import itertools

import pytest
from hypothesis import given, strategies as st

from frobex.catalog import (
    c2_witnesses,
    c3_listed_structures,
    c3_witnesses,
    c4_listed_structures,
    complex_over_real_structures,
    cyclic_group,
    get_family,
    group_algebra,
    klein_four_extensions,
    matrix_algebra,
    taft_algebra,
    unit_extensions,
)
from frobex.errors import CapacityError, NotSeparableError
from frobex.extended import (
    CandidateLattice,
    check_ext_morphism,
    check_extended,
    check_key_identity,
    classify_extended,
    find_frobenius_involutions,
    family_certificate,
    group_structures,
    ClassifiedStructure,
    lemma_no_morph,
    make_ext,
    separable_extension,
    solve_theta,
    theta_families,
    twisted_unit,
)
from frobex.frobenius import rescale
from frobex.linalg import Mat, Vec, inverse, mat_mul
from frobex.scalars import field_make, root_of_unity, sqrt_rational

# -- word arithmetic in kC_n, independent of the structure-constant matrices --


def cmul(a, b, n):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            k = (i + j) % n
            out[k] = out.get(k, 0) + x * y
    return {k: v for k, v in out.items() if v}


def to_words(v):
    return {k: c for k, c in enumerate(v) if c}


def apply_words(phi_cols, a):
    out = {}
    for k, c in a.items():
        for j, y in phi_cols[k].items():
            out[j] = out.get(j, 0) + c * y
    return {k: v for k, v in out.items() if v}


def cyclic_conditions(n, phi_cols, theta, F):
    """(i)-(iii) for kC_n straight from Delta(g^k) = sum_h g^(k+h) (x) g^-h and eps = coeff of e."""
    e = {0: F(1)}
    if apply_words(phi_cols, e) != e:
        return False
    for a in range(n):
        for b in range(n):
            if apply_words(phi_cols, {(a + b) % n: F(1)}) != cmul(phi_cols[a], phi_cols[b], n):
                return False
    for k in range(n):
        if phi_cols[k].get(0, 0) != (1 if k == 0 else 0):
            return False
        # (phi (x) phi) Delta(g^k) == Delta(phi(g^k))
        lhs = {}
        for h in range(n):
            for i, x in phi_cols[(k + h) % n].items():
                for j, y in phi_cols[(-h) % n].items():
                    lhs[(i, j)] = lhs.get((i, j), 0) + x * y
        rhs = {}
        for i, x in phi_cols[k].items():
            for h in range(n):
                key = ((i + h) % n, (-h) % n)
                rhs[key] = rhs.get(key, 0) + x
        if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
            return False
    for k in range(n):
        if apply_words(phi_cols, phi_cols[k]) != {k: F(1)}:
            return False
    for k in range(n):
        ty = cmul(theta, {k: F(1)}, n)
        if apply_words(phi_cols, ty) != ty:
            return False
    twisted = {}
    for h in range(n):
        for i, x in cmul(phi_cols[h], {(-h) % n: F(1)}, n).items():
            twisted[i] = twisted.get(i, 0) + x
    return {k: v for k, v in twisted.items() if v} == cmul(theta, theta, n)


def cols_of(phi):
    return [to_words(phi.column(k)) for k in range(phi.cols)]


# -- kC2 ----------------------------------------------------------------------


def test_c2_exhaustive_oracle_finds_five_structures():
    F = field_make(8)
    r2 = sqrt_rational(F, 2)
    L = [F(0), F(1), F(-1), r2, -r2]
    oracle = set()
    for a, b, c, d in itertools.product(L, repeat=4):
        phi_cols = [{k: v for k, v in ((0, a), (1, c)) if v}, {k: v for k, v in ((0, b), (1, d)) if v}]
        for t0, t1 in itertools.product(L, repeat=2):
            theta = {k: v for k, v in ((0, t0), (1, t1)) if v}
            if cyclic_conditions(2, phi_cols, theta, F):
                oracle.add(((a, b, c, d), (t0, t1)))
    assert len(oracle) == 5
    fam = get_family("kC2")
    cl = classify_extended(fam.build(F), fam.lattice(F), fam.witnesses(F))
    got = {((s.phi[0, 0], s.phi[0, 1], s.phi[1, 0], s.phi[1, 1]), (s.theta[0], s.theta[1])) for s in cl.structures}
    assert got == oracle
    assert len(cl.classes) == 4 and not cl.unresolved


# -- kC3 ----------------------------------------------------------------------


def test_c3_witnesses_identify_listed_structures():
    F = field_make(12)
    listed = c3_listed_structures(F)
    for e in listed:
        assert cyclic_conditions(3, cols_of(e.phi), to_words(e.theta), F), e.name
    keys = {(e.phi, e.theta): k for k, e in enumerate(listed)}
    maps = c3_witnesses(F)
    w = root_of_unity(F, 3, 1)
    # g -> w g is multiplicative and preserves Delta and eps: checked on words
    assert cols_of(maps[0]) == [{0: F(1)}, {1: w}, {2: w * w}]
    parent = list(range(len(listed)))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for f in maps:
        finv = inverse(f)
        for k, e in enumerate(listed):
            image = (mat_mul(f, mat_mul(e.phi, finv)), f.apply(e.theta))
            j = keys.get(image)
            assert j is not None, "witness leaves the listed family"
            assert check_ext_morphism(e, listed[j], f).ok
            parent[find(k)] = find(j)
    orbits = {find(k) for k in range(len(listed))}
    assert len(orbits) == 6 < len(listed)
    cl = group_structures(listed[0].frob, [ClassifiedStructure(e.phi, e.theta) for e in listed], maps)
    assert sorted(map(len, cl.classes)) == sorted(
        sum(1 for k in range(len(listed)) if find(k) == r) for r in orbits
    )


# -- kC4 ----------------------------------------------------------------------


def test_c4_listed_pass_fail_agrees_with_word_oracle():
    F = field_make(8)
    listed = c4_listed_structures(F)
    failing = []
    for e in listed:
        ok = cyclic_conditions(4, cols_of(e.phi), to_words(e.theta), F)
        assert ok == check_extended(e).ok, e.name
        if not ok:
            failing.append(e.name)
    # the (g -> w g^3) family with w = 1 has theta^2 = 2e - 2g^2 but needs 2e + 2g^2
    assert len(failing) == 4 and all(n.endswith("w=i^0") for n in failing)


def _fourier(F):
    """Idempotents e_j = 1/4 sum_k i^(-jk) g^k as group-basis vectors."""
    i = root_of_unity(F, 4, 1)
    return [Vec(F, [i ** ((-j * k) % 4) / 4 for k in range(4)]) for j in range(4)]


def test_c4_involutions_and_thetas_match_idempotent_oracle():
    F = field_make(8)
    fam = get_family("kC4")
    fa = fam.build(F)
    wide = CandidateLattice.make(F, list(fam.lattice(F).values) + list(fam.witness_lattice(F).values))
    idem = _fourier(F)
    i = root_of_unity(F, 4, 1)
    allowed = set(wide.values)
    expected = {}
    for perm in itertools.permutations(range(4)):
        if any(perm[perm[j]] != j for j in range(4)):
            continue
        # g^k = sum_j i^(jk) e_j, so phi(g^k) = sum_j i^(jk) e_perm(j)
        cols = []
        for k in range(4):
            v = Vec.zeros(F, 4)
            for j in range(4):
                v = v + idem[perm[j]].scale(i ** ((j * k) % 4))
            cols.append(v)
        phi = Mat.from_columns(F, cols)
        fixed = [j for j in range(4) if perm[j] == j]
        thetas = set()
        for signs in itertools.product((1, -1), repeat=len(fixed)):
            t = Vec.zeros(F, 4)
            for s, j in zip(signs, fixed):
                t = t + idem[j].scale(2 * s)
            if all(c in allowed for c in t):
                thetas.add(t)
        expected[phi] = thetas
    assert len(expected) == 10  # identity, 6 transpositions, 3 double transpositions
    found = find_frobenius_involutions(fa, wide)
    assert set(found) == set(expected)
    total = 0
    for phi in found:
        got = set(solve_theta(fa, phi, wide))
        assert got == expected[phi]
        total += len(got)
    assert total == 43


# -- T2(-1) -------------------------------------------------------------------


def test_taft_two_has_a_second_frobenius_involution():
    F = field_make(2)
    fa = taft_algebra(2, 1, F)
    # basis 1, x, g, gx; g -> -g, x -> x
    phi = Mat.from_rows(F, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
    # hand check of Delta(1) = -g(x)gx + x(x)1 + 1(x)x + gx(x)g being phi-invariant
    d1 = fa.delta.apply(fa.u)
    idx = {"1": 0, "x": 1, "g": 2, "gx": 3}
    want = {("g", "gx"): -1, ("x", "1"): 1, ("1", "x"): 1, ("gx", "g"): 1}
    assert {(a, b): d1[idx[a] * 4 + idx[b]] for a, b in want} == {k: F(v) for k, v in want.items()}
    sign = {"1": 1, "x": 1, "g": -1, "gx": -1}
    assert all(sign[a] * sign[b] == 1 for a, b in want)
    found = find_frobenius_involutions(fa, get_family("T2").lattice(F))
    assert set(found) == {Mat.identity(F, 4), phi}
    # m(phi (x) I) Delta(1) = 4x, never a square of a phi-compatible theta
    assert solve_theta(fa, phi, get_family("T2").lattice(F)) == []
    assert twisted_unit(fa, phi) == Vec.basis(F, 4, 1).scale(4)


# -- general properties -------------------------------------------------------


def sample_structures():
    F = field_make(24)
    out = unit_extensions(F) + complex_over_real_structures(F)
    out += [e for e in c3_listed_structures(F)]
    out += [e for e in c4_listed_structures(F) if check_extended(e).ok]
    out += [e for _, e in klein_four_extensions(F)][:12]
    return out


SAMPLES = sample_structures()


@given(st.sampled_from(SAMPLES))
def test_key_identity_holds_on_valid_structures(e):
    assert check_extended(e).ok
    assert check_key_identity(e)


@given(st.sampled_from(SAMPLES), st.integers(2, 5))
def test_scaled_theta_breaks_condition_three(e, c):
    bad = make_ext(e.frob, e.phi, e.theta.scale(c))
    if not e.theta.is_zero():
        assert not check_extended(bad).ok
        assert not check_key_identity(bad)


def test_passing_morphisms_are_invertible():
    F = field_make(8)
    listed = c3_listed_structures(field_make(12))
    for f in c3_witnesses(field_make(12)):
        e = listed[2]
        tgt = make_ext(e.frob, mat_mul(f, mat_mul(e.phi, inverse(f))), f.apply(e.theta))
        rep = check_ext_morphism(e, tgt, f)
        assert rep.ok and rep.get("invertible").ok
    e = unit_extensions(F)[0]
    assert not check_ext_morphism(e, e, Mat.zeros(F, 1, 1)).ok


def test_unit_line_obstruction():
    F = field_make(8)
    plus, minus = unit_extensions(F)
    assert lemma_no_morph(plus, minus) == "obstructed"
    assert lemma_no_morph(plus, plus) == "unknown"


def test_separable_extension():
    F = field_make(1)
    fa = rescale(matrix_algebra(2, F), F(1) / 2)
    s = separable_extension(fa)
    assert check_extended(make_ext(fa, s.phi, s.theta)).ok
    with pytest.raises(NotSeparableError):
        separable_extension(group_algebra(cyclic_group(2), F))


@pytest.mark.parametrize("n", [3, 5])
def test_nilpotent_families_have_certified_tails(n):
    fam = get_family(f"x{n}")
    F = fam.field()
    fa = fam.build(F)
    I = Mat.identity(F, n)
    fams = theta_families(fa, I, solve_theta(fa, I, fam.lattice(F)))
    r = sqrt_rational(F, n)
    bases = {f.base for f in fams}
    assert bases == {Vec.basis(F, n, (n - 1) // 2).scale(r), Vec.basis(F, n, (n - 1) // 2).scale(-r)}
    for f in fams:
        assert set(f.directions) == {Vec.basis(F, n, j) for j in range((n + 1) // 2, n)}
        assert family_certificate(fa, I, f.base, f.directions)


@pytest.mark.parametrize("n", [2, 4])
def test_even_nilpotent_not_extendable(n):
    fam = get_family(f"x{n}")
    F = fam.field()
    assert classify_extended(fam.build(F), fam.lattice(F)).structures == []


def test_classification_is_deterministic():
    fam = get_family("kC3")
    F = fam.field()
    a = classify_extended(fam.build(F), fam.lattice(F), fam.witnesses(F)).to_dict()
    b = classify_extended(fam.build(F), fam.lattice(F), fam.witnesses(F)).to_dict()
    assert a == b


def test_budget_is_enforced(monkeypatch):
    monkeypatch.setenv("FROBEX_BUDGET", "5")
    fam = get_family("kC3")
    F = fam.field()
    with pytest.raises(CapacityError):
        classify_extended(fam.build(F), fam.lattice(F))


def test_lattice_round_trip():
    F = field_make(12)
    lat = get_family("kC3").lattice(F)
    assert CandidateLattice.from_dict(lat.to_dict()) == lat


def test_c2_witness_is_frobenius_automorphism():
    F = field_make(8)
    (f,) = c2_witnesses(F)
    assert cols_of(f) == [{0: F(1)}, {1: F(-1)}]
    fa = group_algebra(cyclic_group(2), F)
    s = find_frobenius_involutions(fa, get_family("kC2").lattice(F))
    assert f in s
