import pytest

from twistlab.errors import IndexOutOfRange, NotApplicable
from twistlab.exact import SparseMatrix, kron
from twistlab.expr import (
    delta_morphism,
    eval_expr,
    fundamental_morphism,
    gen,
)
from twistlab.hopf import TwistedCoalgebra
from twistlab.rationals import rat
from twistlab.states import (
    Combinator,
    STATE_IDS,
    combinator_eval,
    costructure_table,
    heisenberg_pair_generators,
    two_jordanian_table_check,
    verify_diagram,
    verify_matreshka,
    verify_state,
    verify_transition_schemes,
)
from twistlab.twists import extension_factor, jordanian_factor, sequence


def unit(dim, i, j, v=1):
    return SparseMatrix.unit(dim, i, j, v)


def test_combinator_p0():
    got = combinator_eval(Combinator("P0"), gen(1, 3), 6)
    i6 = SparseMatrix.identity(6)
    assert got == kron(unit(6, 1, 3), i6) + kron(i6, unit(6, 1, 3))


def test_combinator_tpp():
    got = combinator_eval(Combinator("Tpp"), gen(1, 5), 6)
    f6 = fundamental_morphism(6)
    i6 = SparseMatrix.identity(6)
    half = rat(1, 2)
    right = (i6 + unit(6, 1, 6, half)) * (i6 + unit(6, 2, 5, half))
    assert got == kron(unit(6, 1, 5), right) + kron(i6, unit(6, 1, 5))


def test_combinator_s1minus():
    got = combinator_eval(Combinator("S1minus", r=3), None, 6)
    # -E_13 x E_26 e^{-sigma_1/2}; the correction dies in the fundamental
    assert got == kron(unit(6, 1, 3, -1), unit(6, 2, 6))


def test_costructure_table_entries():
    t = costructure_table("J1J0", 7, 3)
    ((sign, comb),) = t.entry("e1n1")
    assert (sign, comb.kind) == (1, "Tpp")
    t2 = costructure_table("E0J1J0", 6, 3)
    entry = t2.entry("e2r")
    assert [(s, c.kind) for s, c in entry] == [(1, "Pplus"), (1, "S1minus")]
    with pytest.raises(ValueError):
        costructure_table("bogus", 6, 3)


def test_costructure_table_bounds():
    with pytest.raises(NotApplicable):
        costructure_table("J1J0", 5, 3)
    with pytest.raises(IndexOutOfRange):
        costructure_table("J1J0", 6, 5)


def test_verify_state_samples():
    assert verify_state("J1J0", 6, 3).passed
    assert verify_state("E1E0E1tJ1J0", 7, 4).passed
    with pytest.raises(NotApplicable):
        verify_state("J1J0", 5, 3)


def test_all_states_n6():
    for sid in STATE_IDS:
        for r in (3, 4):
            res = verify_state(sid, 6, r)
            assert res.passed, res


def test_two_jordanian_table():
    assert two_jordanian_table_check(6).passed
    assert two_jordanian_table_check(7).passed


def test_locality_of_extensions():
    # applying the r=3 extension leaves r'=4 generators untouched
    n = 6
    base = sequence(jordanian_factor(n, 1), jordanian_factor(n, 2))
    co_before = TwistedCoalgebra(base)
    co_after = TwistedCoalgebra(base.then(extension_factor(n, 1, 3)))
    untouched = [gen(1, 4), gen(2, 4), gen(4, 5), gen(4, 6),
                 gen(1, 5), gen(1, 6), gen(2, 5), gen(2, 6)]
    for g in untouched:
        assert co_before.coproduct(g) == co_after.coproduct(g)
    touched = [gen(1, 3), gen(3, 6)]
    for g in touched:
        assert co_before.coproduct(g) != co_after.coproduct(g)


def test_diagram_n6():
    res = verify_diagram(6, 3)
    assert res.passed, res


def test_diagram_rejects_small_n():
    with pytest.raises(NotApplicable):
        verify_diagram(5, 3)


def test_matreshka():
    assert verify_matreshka(6).passed
    assert verify_matreshka(4).passed
    with pytest.raises(NotApplicable):
        verify_matreshka(3)


def test_transitions():
    assert verify_transition_schemes(3).passed
    assert verify_transition_schemes(6).passed


def test_state_verification_under_doubled_witness():
    f = fundamental_morphism(6)
    doubled = delta_morphism(f, f)
    assert verify_state("E0J1J0", 6, 3, witness=doubled).passed


def test_generator_slots():
    gens = heisenberg_pair_generators(6, 3)
    assert eval_expr(gens["ern"], fundamental_morphism(6)) == unit(6, 3, 6)
    assert len(gens) == 8
