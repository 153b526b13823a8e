import pytest
from hypothesis import given, settings, strategies as st

from twistlab.errors import NotApplicable
from twistlab.exact import SparseMatrix
from twistlab.expr import (
    fundamental_morphism,
    gen,
    mul,
    scal,
    sigma_power,
)
from twistlab.hopf import (
    TwistedCoalgebra,
    antipode_checks,
    coassociativity_check,
    cocycle_check,
    counit_check,
    r_matrix_checks,
    twist_antipode_correction,
    verify_dragging,
)
from twistlab.rationals import rat
from twistlab.roots import carrier_generators, cartan_element
from twistlab.twists import (
    chain_twist,
    extended_twist_generic,
    external_factor,
    generic_extension_factor,
    jordanian_factor,
    sequence,
)


def jordanian(n):
    return sequence(jordanian_factor(n, 1))


def test_cocycle_jordanian_small():
    for n in (2, 3, 4):
        res = cocycle_check(jordanian(n))
        assert res.passed, res


def test_cocycle_extended_generic():
    res = cocycle_check(extended_twist_generic(3, 2, rat(1, 3)))
    assert res.passed


@settings(max_examples=25, deadline=None)
@given(st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_cocycle_extended_any_rational_alpha(alpha):
    seq = extended_twist_generic(3, 2, rat(alpha))
    assert cocycle_check(seq).passed
    assert counit_check(seq).passed


def test_cocycle_fails_for_bare_extension():
    res = cocycle_check(sequence(generic_extension_factor(3, 2, rat(1, 2))))
    assert not res.passed
    assert res.residual_nnz > 0


def test_cocycle_extension_over_jordanian_base():
    base = sequence(jordanian_factor(3, 1))
    ext = sequence(generic_extension_factor(3, 2, rat(1, 2)))
    assert cocycle_check(ext, base=base).passed


def test_counit_checks():
    assert counit_check(jordanian(6)).passed
    assert counit_check(chain_twist(6, 1)).passed
    assert counit_check(sequence(external_factor(6, "E0tilde"))).passed
    assert counit_check(sequence(external_factor(6, "E1tilde"))).passed


def test_twisted_coproduct_jordanian_e():
    n = 2
    seq = jordanian(n)
    co = TwistedCoalgebra(seq)
    e = gen(1, n)
    got = co.coproduct(e)
    expected = co.expected([(e, sigma_power(1, 1, n)), (scal(1), e)])
    assert got == expected


def test_twisted_coproduct_scalar_is_identity():
    co = TwistedCoalgebra(chain_twist(6, 1))
    assert co.coproduct(scal(1)) == SparseMatrix.identity(36)


@pytest.mark.parametrize("n,r", [(3, 2), (6, 3)])
@pytest.mark.parametrize("alpha", [rat(1, 3), rat(2, 5), rat(1, 2), rat(0)])
def test_extended_costructure_lines(n, r, alpha):
    beta = 1 - alpha
    h, a, b, e = carrier_generators(n, r, alpha)
    co = TwistedCoalgebra(extended_twist_generic(n, r, alpha))
    one = scal(1)
    cases = {
        "H": (h, [(h, sigma_power(-1, 1, n)), (one, h),
                  (mul(scal(-1), a), mul(b, sigma_power(-(beta + 1), 1, n)))]),
        "A": (a, [(a, sigma_power(-beta, 1, n)), (one, a)]),
        "B": (b, [(b, sigma_power(beta, 1, n)), (sigma_power(1, 1, n), b)]),
        "E": (e, [(e, sigma_power(1, 1, n)), (one, e)]),
    }
    for label, (x, pairs) in cases.items():
        assert co.coproduct(x) == co.expected(pairs), (label, alpha)


def test_twisted_coproduct_multiplicative():
    co = TwistedCoalgebra(extended_twist_generic(3, 2, rat(1, 2)))
    pairs = [(gen(1, 2), gen(2, 3)), (gen(1, 3), gen(3, 3)), (gen(1, 1), gen(1, 2))]
    for x, y in pairs:
        assert co.coproduct(mul(x, y)) == co.coproduct(x) * co.coproduct(y)


def test_r_matrix_trivial_twist():
    res = r_matrix_checks(sequence(n=2))
    assert res.passed


def test_r_matrix_jordanian_2():
    assert r_matrix_checks(jordanian(2)).passed


def test_r_matrix_extended_3():
    assert r_matrix_checks(extended_twist_generic(3, 2, rat(1, 3))).passed


def test_antipode_trivial_twist():
    f2 = fundamental_morphism(2)
    assert twist_antipode_correction(sequence(n=2), f2) == SparseMatrix.identity(2)
    gens = [gen(1, 2), cartan_element(2, 1, 2)]
    assert antipode_checks(sequence(n=2), gens).passed


def test_antipode_jordanian_2():
    gens = [cartan_element(2, 1, 2), gen(1, 2)]
    res = antipode_checks(jordanian(2), gens)
    assert res.passed, res


def test_antipode_correction_value_jordanian_2():
    # v = 1 - H E = 1 - e12/2 in the fundamental of gl(2)
    f2 = fundamental_morphism(2)
    v = twist_antipode_correction(jordanian(2), f2)
    assert v == SparseMatrix.from_entries(2, {(1, 1): 1, (2, 2): 1, (1, 2): rat(-1, 2)})
    assert TwistedCoalgebra(jordanian(2), f2).antipode_correction() == v


def test_antipode_extended_3():
    h, a, b, e = carrier_generators(3, 2, rat(1, 2))
    res = antipode_checks(extended_twist_generic(3, 2, rat(1, 2)), [h, a, b, e])
    assert res.passed, res


def test_antipode_expansion_bound():
    from twistlab.errors import ExpansionOverflow

    gens = [cartan_element(2, 1, 2), gen(1, 2)]
    with pytest.raises(ExpansionOverflow):
        antipode_checks(jordanian(2), gens, bound=0)


def test_antipode_rejects_non_nilpotent_expansion():
    from twistlab.errors import ExpansionOverflow
    from twistlab.twists import twist_factor

    h = cartan_element(2, 1, 2)
    # H x H has a diagonal (non-nilpotent) expansion kernel
    bad = sequence(twist_factor("HH", 2, [(h, h)]))
    with pytest.raises(ExpansionOverflow):
        antipode_checks(bad, [gen(1, 2)])


def test_dragging_identity():
    assert verify_dragging(6).passed
    with pytest.raises(NotApplicable):
        verify_dragging(5)


def test_coassociativity_extended():
    h, a, b, e = carrier_generators(3, 2, rat(1, 3))
    res = coassociativity_check(extended_twist_generic(3, 2, rat(1, 3)), [h, a, b, e])
    assert res.passed


def test_external_composites_are_twists():
    base = sequence(jordanian_factor(6, 1), jordanian_factor(6, 2))
    for which in ("E0tilde", "E1tilde"):
        composite = base.then(external_factor(6, which))
        assert cocycle_check(composite).passed, which
        assert cocycle_check(sequence(external_factor(6, which)), base=base).passed


def test_alternative_chain_is_a_twist():
    from twistlab.twists import alternative_chain

    alt = alternative_chain(6)
    assert cocycle_check(alt).passed
    assert counit_check(alt).passed


def test_alternative_chain_drags_to_second_external():
    # J0-conjugation of the s=1 and s=N maximal-set factors reproduces the
    # second external factor, mirroring the first dragging identity
    from twistlab.expr import fundamental_morphism, gen, mul, sigma_power
    from twistlab.twists import materialize, materialize_factor, twist_factor

    n = 6
    w = fundamental_morphism(n)
    j0 = sequence(jordanian_factor(n, 1))
    m_j0 = materialize(j0, w, w)
    m_j0_inv = materialize(j0, w, w, inverse=True)

    def corner(r):
        right = mul(gen(r, n - 1), sigma_power(rat(-1, 2), 2, n - 1))
        return twist_factor(f"E'(2,{r},{n - 1})", n, [(gen(2, r), right)])

    lhs = (
        m_j0
        * materialize_factor(corner(1), w, w)
        * materialize_factor(corner(n), w, w)
        * m_j0_inv
    )
    rhs = materialize_factor(external_factor(n, "E1tilde"), w, w)
    assert lhs == rhs
