import pytest

from frobex.catalog import (
    GroupTable,
    c3_listed_structures,
    c4_listed_structures,
    complex_over_real_structures,
    cyclic_extended,
    dihedral_group,
    direct_product,
    families,
    get_family,
    group_phi_trivial_extension,
    klein_four,
    klein_four_extensions,
    listed_extensions,
    matrix_extended,
    nilpotent_structures,
    quaternion_group,
    standard_groups,
    symmetric_group,
    taft_algebra,
)
from frobex.errors import PreconditionError
from frobex.extended import check_extended, family_certificate
from frobex.frobenius import check_frobenius
from frobex.scalars import field_make


@pytest.mark.parametrize(
    "G,order,abelian",
    [(symmetric_group(3), 6, False), (dihedral_group(4), 8, False), (quaternion_group(), 8, False),
     (klein_four(), 4, True), (direct_product(klein_four(), standard_groups()["C3"]), 12, True)],
    ids=["S3", "D4", "Q8", "V4", "V4xC3"],
)
def test_group_tables(G, order, abelian):
    assert G.order == order
    assert G.is_abelian() == abelian
    for a in range(order):
        assert G.mul(a, G.inv[a]) == G.identity
        assert G.power(a, order) == G.identity


def test_quaternion_relations():
    Q = quaternion_group()
    lab = {l: k for k, l in enumerate(Q.labels)}
    i, j, k, m1 = lab["i"], lab["j"], lab["k"], lab["-1"]
    assert Q.mul(i, i) == Q.mul(j, j) == Q.mul(k, k) == Q.mul(Q.mul(i, j), k) == m1


def test_group_table_validation():
    with pytest.raises(PreconditionError):
        GroupTable("bad", ["a", "b"], [[0, 1], [0, 1]])
    with pytest.raises(PreconditionError):
        # a Latin square with identity that is not associative
        t = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
        GroupTable("loop", list("abcde"), t)


def test_klein_four_cases_all_pass():
    ext = klein_four_extensions()
    assert {c for c, _ in ext} == {"a", "b", "c", "d"}
    for _, e in ext:
        assert check_extended(e).ok, e.name
    assert len({(e.phi, e.theta) for _, e in ext}) == len(ext)


def test_complex_over_real():
    for e in complex_over_real_structures():
        assert check_extended(e).ok


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("s", [1, -1])
def test_matrix_extended(n, s):
    assert check_extended(matrix_extended(n, s)).ok


@pytest.mark.parametrize("gname", ["C2", "C3", "C4", "C5", "C6", "S3", "C2xC2"])
def test_group_phi_trivial_extension(gname):
    assert check_extended(group_phi_trivial_extension(standard_groups()[gname])).ok


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_cyclic_extended_passes_for_every_root(n):
    for k in range(n):
        for s in (1, -1):
            assert check_extended(cyclic_extended(n, k, s)).ok


def test_cyclic_extended_matches_listed_structures():
    F = field_make(24)
    c3 = {(e.phi, e.theta) for e in c3_listed_structures(F)}
    c4 = {(e.phi, e.theta) for e in c4_listed_structures(F)}
    for s in (1, -1):
        e = cyclic_extended(3, 1, s, F)
        assert (e.phi, e.theta) in c3
        e = cyclic_extended(4, 1, s, F)
        assert (e.phi, e.theta) in c4


@pytest.mark.parametrize("n", [3, 5])
def test_nilpotent_structures(n):
    for e, dirs in nilpotent_structures(n):
        assert check_extended(e).ok
        assert family_certificate(e.frob, e.phi, e.theta, dirs)
    assert nilpotent_structures(4) == []


def test_taft_arguments():
    with pytest.raises(PreconditionError):
        taft_algebra(4, 2, field_make(4))
    with pytest.raises(PreconditionError):
        taft_algebra(1, 1, field_make(1))


def test_families_build_and_lattices_fit():
    for name, fam in families().items():
        F = fam.field()
        fa = fam.build(F)
        assert check_frobenius(fa).ok, name
        lat = fam.lattice(F)
        assert lat.field is F and len(lat) > 0
        for e in listed_extensions(name, F):
            assert e.frob == fa


def test_family_conductor_override():
    fam = get_family("kC2")
    assert fam.field(24).conductor == 24
    with pytest.raises(PreconditionError):
        fam.field(12)
    with pytest.raises(KeyError):
        get_family("nope")
