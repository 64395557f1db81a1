"""Normal forms, grading, closed-form expansions, the [A,B]-power basis."""

import itertools
import random

import pytest

from qheis.coeff import (
    IntPoly,
    QValue,
    RF_ONE,
    RF_Q,
    RationalFunction,
    gauss_polynomial,
    q_int,
)
from qheis.freealg import FREE_A, FREE_B, FreeElement
from qheis.heis import (
    DegenerateQError,
    LEFTMOST,
    RIGHTMOST,
    NormalElement,
    QMismatchError,
    _word_normal_form,
    adad_check,
    anbn_expand,
    anbn_via_gauss,
    bnan_expand,
    bracketed_word,
    comm_power,
    commutator,
    embed,
    fban_check,
    from_lie_power_basis,
    grade,
    nf_word,
    normal_form,
    reorder_check,
    reorder_sides,
    shift_poly_check,
    to_lie_power_basis,
)

SYM = QValue()
Q0 = QValue.rational(0)

rf_int = RationalFunction.from_int


def mono(m, n, q=SYM, c=RF_ONE):
    return NormalElement.monomial(m, n, q, c)


def rand_normal(rng, q=SYM, support=6, nterms=5):
    acc = NormalElement.zero(q)
    for _ in range(nterms):
        m, n = rng.randrange(support + 1), rng.randrange(support + 1)
        coeffs = [rng.randrange(-9, 10) for _ in range(rng.randrange(1, 4))]
        c = RationalFunction(IntPoly(coeffs))
        if c.is_zero():
            c = RF_ONE
        acc = acc + mono(m, n, q, c)
    return acc


def rand_free(rng, max_len=5, nterms=3):
    acc = FreeElement.zero()
    for _ in range(nterms):
        w = "".join(rng.choice("AB") for _ in range(rng.randrange(max_len + 1)))
        acc = acc + FreeElement.word(w, rf_int(rng.randrange(-4, 5) or 1))
    return acc


# -- rewriting ---------------------------------------------------------------


def test_defining_relation():
    assert nf_word("AB", SYM) == mono(1, 1, c=RF_Q) + mono(0, 0)


def test_reordering_example_n2():
    # A B^2 = q^2 B^2 A + (1+q) B
    expected = mono(2, 1, c=RF_Q**2) + mono(1, 0, c=RF_ONE + RF_Q)
    assert nf_word("ABB", SYM) == expected


def test_zero_mode_collapse():
    assert nf_word("AABBB", Q0) == mono(1, 0, Q0)


def test_normal_form_is_linear():
    rng = random.Random(9)
    for _ in range(50):
        x, y = rand_free(rng), rand_free(rng)
        assert normal_form(x + y, SYM) == normal_form(x, SYM) + normal_form(y, SYM)


def test_rewriter_is_a_homomorphism():
    rng = random.Random(10)
    for _ in range(500):
        x, y = rand_free(rng, max_len=4), rand_free(rng, max_len=4)
        lhs = normal_form(x * y, SYM)
        rhs = normal_form(x, SYM) * normal_form(y, SYM)
        assert lhs == rhs


def test_renormalizing_a_normal_form_is_the_identity():
    rng = random.Random(11)
    for _ in range(100):
        x = rand_normal(rng)
        assert normal_form(embed(x), SYM) == x


def test_confluence_of_the_two_strategies_short_words():
    for length in range(1, 8):
        for letters in itertools.product("AB", repeat=length):
            w = "".join(letters)
            assert _word_normal_form(w, SYM, LEFTMOST) == _word_normal_form(
                w, SYM, RIGHTMOST
            )


def test_unknown_strategy_rejected():
    with pytest.raises(ValueError):
        normal_form(FREE_A, SYM, strategy="middle")


# -- algebra operations --------------------------------------------------------


def test_commutator_of_generators():
    got = commutator(nf_word("A", SYM), nf_word("B", SYM))
    assert got == mono(1, 1, c=RF_Q - RF_ONE) + mono(0, 0)


def test_monomial_product_example():
    # (B^2 A)(B A^3) = q B^3 A^4 + B^2 A^3
    got = mono(2, 1) * mono(1, 3)
    assert got == mono(3, 4, c=RF_Q) + mono(2, 3)


def test_commutator_alternating():
    rng = random.Random(12)
    for _ in range(20):
        x = rand_normal(rng)
        assert commutator(x, x).is_zero()


def test_q_mismatch_is_an_error():
    with pytest.raises(QMismatchError):
        mono(1, 0, SYM) + mono(1, 0, Q0)
    with pytest.raises(QMismatchError):
        mono(1, 0, SYM) * mono(1, 0, QValue.rational(2))


def test_power_and_identity():
    x = nf_word("AB", SYM)
    assert x**0 == NormalElement.one(SYM)
    assert x**3 == x * x * x


def test_ring_axioms_for_the_memoized_product():
    rng = random.Random(23)
    one = NormalElement.one(SYM)
    for _ in range(60):
        x, y, z = (rand_normal(rng, support=4, nterms=3) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x + y) * z == x * z + y * z
        assert one * x == x == x * one


def test_engine_is_total_at_q_one():
    # the rewriter never divides, so q = 1 (the classical case) still works
    q1 = QValue.rational(1)
    assert nf_word("AB", q1) == mono(1, 1, q1) + NormalElement.one(q1)
    assert commutator(nf_word("A", q1), nf_word("B", q1)) == NormalElement.one(q1)
    rng = random.Random(24)
    for _ in range(30):
        x, y = rand_normal(rng, q=q1, support=4), rand_normal(rng, q=q1, support=4)
        assert normal_form(embed(x) * embed(y), q1) == x * y


# -- reordering formulas ---------------------------------------------------------


def test_reorder_all_kinds_symbolic():
    for kind in ("AB^n", "A^nB", "BA^n", "B^nA"):
        for n in range(1, 9):
            assert reorder_check(kind, n, SYM)


def test_reorder_explicit_23_n2():
    # B^2 A = q^-2 A B^2 - q^-1 {2}_{1/q} B
    lhs, rhs = reorder_sides("B^nA", 2, SYM)
    assert lhs == mono(2, 1)
    qinv = RF_Q.inv()
    expected = nf_word("ABB", SYM).scale(qinv**2) - mono(1, 0, c=qinv * q_int(2, qinv))
    assert rhs == expected


def test_reorder_inverse_forms_need_nonzero_q():
    with pytest.raises(DegenerateQError):
        reorder_check("BA^n", 2, Q0)
    with pytest.raises(DegenerateQError):
        reorder_check("B^nA", 2, Q0)
    assert reorder_check("AB^n", 4, Q0)
    assert reorder_check("A^nB", 4, Q0)


def test_reorder_at_rational_q():
    q = QValue.rational(3, 2)
    for kind in ("AB^n", "A^nB", "BA^n", "B^nA"):
        assert reorder_check(kind, 5, q)


# -- grading -------------------------------------------------------------------


def test_grade_examples():
    assert set(grade(nf_word("BA", SYM)).parts) == {0}
    x = mono(2, 1) + mono(1, 0)
    parts = grade(x).parts
    assert set(parts) == {1}
    assert len(parts[1].terms) == 2


def test_grade_sums_back():
    rng = random.Random(13)
    for _ in range(30):
        x = rand_normal(rng)
        assert grade(x).total(SYM) == x


def test_product_adds_degrees():
    rng = random.Random(14)
    for _ in range(50):
        a, b = rng.randrange(-3, 4), rng.randrange(-3, 4)
        x = mono(max(a, 0) + 1, max(-a, 0) + 1)
        y = mono(max(b, 0) + 2, max(-b, 0) + 2)
        prod = x * y
        for m, n in prod.terms:
            assert m - n == a + b


# -- closed-form expansions -----------------------------------------------------


def test_comm_power_small():
    assert comm_power(0, SYM) == NormalElement.one(SYM)
    assert comm_power(1, SYM) == mono(1, 1, c=RF_Q - RF_ONE) + mono(0, 0)
    expected = (
        mono(2, 2, c=RF_Q * (RF_Q - RF_ONE) ** 2)
        + mono(1, 1, c=RF_Q**2 - RF_ONE)
        + mono(0, 0)
    )
    assert comm_power(2, SYM) == expected


def test_bnan_anbn_small_cases():
    # A B = (q [A,B] - I)/(q - 1)
    one = NormalElement.one(SYM)
    lhs = anbn_expand(1, SYM)
    rhs = (comm_power(1, SYM).scale(RF_Q) - one).scale((RF_Q - RF_ONE).inv())
    assert lhs == rhs == nf_word("AB", SYM)
    assert bnan_expand(0, SYM) == one
    assert anbn_expand(0, SYM) == one
    assert bnan_expand(2, SYM) == nf_word("BBAA", SYM)
    assert anbn_expand(2, SYM) == nf_word("AABB", SYM)


def test_bnan_anbn_match_rewriter():
    for n in range(7):
        assert bnan_expand(n, SYM) == nf_word("B" * n + "A" * n, SYM)
        assert anbn_expand(n, SYM) == nf_word("A" * n + "B" * n, SYM)


def test_gauss_polynomial_pathway():
    x = nf_word("BA", SYM)
    assert gauss_polynomial(0, x, RF_Q) == NormalElement.one(SYM)
    assert gauss_polynomial(1, x, RF_Q) == x - NormalElement.one(SYM)
    for n in range(7):
        assert anbn_via_gauss(n, SYM) == nf_word("A" * n + "B" * n, SYM)


def test_expansions_reject_degenerate_q():
    for q in (Q0, QValue.rational(1)):
        with pytest.raises(DegenerateQError):
            bnan_expand(2, q)
        with pytest.raises(DegenerateQError):
            anbn_expand(2, q)


# -- shift identity ---------------------------------------------------------------


def test_shift_specializations():
    # A [A,B] = q [A,B] A and B [A,B] = q^-1 [A,B] B
    assert shift_poly_check(FREE_A, 1, SYM)
    assert shift_poly_check(FREE_B, 1, SYM)
    assert shift_poly_check(FreeElement.one(), 3, SYM)


def test_shift_needs_nonzero_q():
    with pytest.raises(DegenerateQError):
        shift_poly_check(FREE_A, 1, Q0)


def test_shift_on_polynomials_not_just_monomials():
    rng = random.Random(15)
    for _ in range(30):
        P = rand_free(rng, max_len=4)
        assert shift_poly_check(P, rng.randrange(4), SYM)


# -- adjoint identities ------------------------------------------------------------


def test_adad_identities():
    for m in range(6):
        for n in range(6):
            assert adad_check(m, n, SYM)
    assert adad_check(3, 3, QValue.rational(5, 3))


def test_adad_vanishes_on_the_diagonal():
    br = bracketed_word("BA", SYM)
    for n in range(1, 5):
        assert commutator(br, mono(n, n)).is_zero()


def test_fban_identities():
    for n in range(1, 9):
        assert fban_check(n, SYM)
    assert bracketed_word("BA", SYM) == mono(1, 1, c=RF_ONE - RF_Q) - NormalElement.one(SYM)


# -- the [A,B]-power basis -----------------------------------------------------------


def test_lie_power_coords_examples():
    one = NormalElement.one(SYM)
    assert to_lie_power_basis(one).coords == {(0, 0): RF_ONE}
    coords = to_lie_power_basis(nf_word("AB", SYM))
    qm1 = RF_Q - RF_ONE
    assert coords.coords == {(0, 0): -qm1.inv(), (0, 1): RF_Q * qm1.inv()}


def test_lie_power_roundtrip_random():
    rng = random.Random(16)
    for _ in range(60):
        x = rand_normal(rng, support=8)
        assert from_lie_power_basis(to_lie_power_basis(x)) == x


def test_lie_power_roundtrip_at_rational_q():
    rng = random.Random(17)
    q = QValue.rational(2)
    for _ in range(30):
        x = rand_normal(rng, q=q, support=6)
        assert from_lie_power_basis(to_lie_power_basis(x)) == x


def test_lie_power_rejects_degenerate_q():
    with pytest.raises(DegenerateQError):
        to_lie_power_basis(mono(1, 1, Q0))
    with pytest.raises(DegenerateQError):
        to_lie_power_basis(mono(1, 1, QValue.rational(1)))


def test_lie_power_allows_q_minus_one():
    q = QValue.rational(-1)
    x = mono(2, 1, q) + mono(1, 1, q) + NormalElement.one(q)
    assert from_lie_power_basis(to_lie_power_basis(x)) == x


# -- rendering ---------------------------------------------------------------------


def test_render_sorted_by_degree_then_m():
    x = mono(0, 2) + mono(1, 0) + NormalElement.one(SYM) + mono(2, 1)
    assert x.render() == "A^2 + 1 + B + B^2 A"
