import pytest

from cactusgrowth.crystal import (
    BadParameter,
    Crystal,
    CyclicGraph,
    SizeLimit,
    build_minuscule,
    decompose,
    tensor,
    tensor_power,
    weyl_orbit_weights,
)
from cactusgrowth.suites import check_crystal, check_morphism
from cactusgrowth.weights import CartanContext, ContextMismatch

GL2 = CartanContext("GL", 2)
GL3 = CartanContext("GL", 3)
GL4 = CartanContext("GL", 4)
SP4 = CartanContext("Sp", 2)
SL2 = CartanContext("SL2", 1)


def test_sl2_crystal():
    c = build_minuscule(SL2, "sl2")
    assert c.n == 2
    assert c.e(1, 1) == 0 and c.e(1, 0) is None
    assert c.f(1, 0) == 1
    assert c.eps(1, 0) == 0 and c.phi(1, 0) == 1
    assert c.eps(1, 1) == 1 and c.phi(1, 1) == 0


def test_gl3_vector_chain():
    c = build_minuscule(GL3, "vector")
    # elements 1 -> 2 -> 3 under lowering; raising reverses
    assert c.e(1, 1) == 0
    assert c.e(2, 2) == 1
    assert c.eps(1, 1) == 1
    assert c.phi(2, 1) == 1


def test_exterior_square_gl3():
    c = build_minuscule(GL3, "exterior", 2)
    assert c.n == 3
    assert sorted(c.labels) == ["12", "13", "23"]
    assert weyl_orbit_weights(c)


def test_sp4_vector():
    c = build_minuscule(SP4, "vector")
    assert c.n == 4
    assert c.weights == ((1, 0), (0, 1), (0, -1), (-1, 0))
    assert weyl_orbit_weights(c)
    # chain under lowering: 1 -> 2 -> -2 -> -1 with labels 1, 2, 1
    assert c.f(1, 0) == 1
    assert c.f(2, 1) == 2
    assert c.f(1, 2) == 3


def test_bad_parameters():
    with pytest.raises(BadParameter):
        build_minuscule(GL3, "exterior", 4)
    with pytest.raises(BadParameter):
        build_minuscule(GL3, "sl2")


def test_highest_weight_is_eps_zero():
    c = build_minuscule(GL3, "vector")
    power = tensor_power(c, 3)
    for x in power.highest_weight_elements():
        assert all(power.eps(i, x) == 0 for i in GL3.index_set())


def test_sl2_tensor_rule():
    c = build_minuscule(SL2, "sl2")
    cc = tensor(c, c)
    minus_minus = 1 * c.n + 1
    # e(- (x) -) = - (x) +
    assert cc.e(1, minus_minus) == 1 * c.n + 0
    hw = cc.highest_weight_elements()
    assert sorted(cc.labels[x] for x in hw) == ["+(x)+", "+(x)-"]


def test_gl2_hw_count_r3():
    c = build_minuscule(GL2, "vector")
    power = tensor_power(c, 3)
    # one tableau of shape (3) plus two of shape (2,1)
    assert len(power.highest_weight_elements()) == 3


def test_gl2_hw_weights_r4():
    c = build_minuscule(GL2, "vector")
    power = tensor_power(c, 4)
    weights = sorted(power.weights[x] for x in power.highest_weight_elements())
    assert weights == [(2, 2), (2, 2), (3, 1), (3, 1), (3, 1), (4, 0)]


def test_decompose_gl2_r2():
    c = build_minuscule(GL2, "vector")
    assert decompose(c, 2) == {(2, 0): (1, 3), (1, 1): (1, 1)}


def test_decompose_sl2_catalan():
    c = build_minuscule(SL2, "sl2")
    census = decompose(c, 4)
    assert census[(0,)] == (2, 1)
    assert decompose(c, 0) == {(0,): (1, 1)}


def test_decompose_totals():
    for base, ctx in ((build_minuscule(GL2, "vector"), GL2), (build_minuscule(GL3, "vector"), GL3)):
        for r in range(4):
            census = decompose(base, r)
            assert sum(cnt * size for cnt, size in census.values()) == base.n**r


def test_tensor_context_mismatch():
    with pytest.raises(ContextMismatch):
        tensor(build_minuscule(GL2, "vector"), build_minuscule(GL3, "vector"))


def test_size_limit():
    c = build_minuscule(GL3, "vector")
    with pytest.raises(SizeLimit):
        tensor_power(c, 4, size_cap=50)


def test_cyclic_graph_rejected():
    with pytest.raises(CyclicGraph):
        Crystal(SL2, ("a", "b"), {1: {0: 1, 1: 0}}, ((1,), (-1,)))


def test_weight_compatibility_enforced():
    with pytest.raises(ValueError):
        Crystal(SL2, ("a", "b"), {1: {1: 0}}, ((1,), (1,)))


def test_rectify_fixed_on_hw():
    c = build_minuscule(GL2, "vector")
    power = tensor_power(c, 4)
    for x in power.highest_weight_elements():
        assert power.rectify(x) == x


def test_rectify_lands_in_same_component():
    c = build_minuscule(GL2, "vector")
    power = tensor_power(c, 4)
    comp_of = {}
    for comp in power.components():
        for x in comp:
            comp_of[x] = comp[0]
    for x in range(power.n):
        y = power.rectify(x)
        assert power.is_highest_weight(y)
        assert comp_of[x] == comp_of[y]


def test_edge_weight_consistency():
    for c in (build_minuscule(GL3, "vector"), build_minuscule(SP4, "vector"), build_minuscule(GL4, "exterior", 2)):
        for i in c.context.index_set():
            root = c.context.simple_root(i)
            for x, y in c.e_maps[i].items():
                assert tuple(a - b for a, b in zip(c.weights[y], c.weights[x])) == root


def test_crystal_suite():
    report = check_crystal(r_max=4, catalan_r=8)
    assert report.passed, report.failures[:3]


def test_morphism_suite():
    report = check_morphism()
    assert report.passed, report.failures[:3]
