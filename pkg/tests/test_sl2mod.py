from fractions import Fraction

import pytest

from vermalab.exactla import SparseMat
from vermalab.sl2mod import (
    InteriorRegion,
    apply_op,
    apply_word,
    build_Ln,
    build_Tr,
    build_tensor,
    build_verma,
    casimir,
    label_str,
    module_to_json,
    verify_category_I,
)


def vec(module, label):
    return {label: Fraction(1)}


def diff(u, v):
    out = {k: u.get(k, 0) - v.get(k, 0) for k in set(u) | set(v)}
    return {k: x for k, x in out.items() if x}


class TestLn:
    def test_actions_n2(self):
        m = build_Ln(2)
        assert m.act_label("f", ("v", 1)) == {("v", 2): Fraction(2)}
        assert m.act_label("e", ("v", 1)) == {("v", 0): Fraction(2)}
        assert m.act_label("h", ("v", 1)) == {}

    def test_n0_trivial(self):
        m = build_Ln(0)
        assert m.act_label("e", ("v", 0)) == {}
        assert m.act_label("f", ("v", 0)) == {}
        assert m.act_label("h", ("v", 0)) == {}

    def test_casimir_is_scalar(self):
        m = build_Ln(2)
        assert casimir(m) == SparseMat.identity(3).scale(Fraction(8))

    def test_commutator_on_whole_module(self):
        m = build_Ln(5)
        for b in m.basis:
            ef = apply_word(m, "ef", vec(m, b))
            fe = apply_word(m, "fe", vec(m, b))
            h = apply_op(m, "h", vec(m, b))
            assert diff(ef, fe) == h


class TestVerma:
    def test_lambda_zero_actions(self):
        m = build_verma(0, 6)
        assert m.act_label("e", ("w", 2)) == {("w", 1): Fraction(-2)}
        assert m.act_label("h", ("w", 3)) == {("w", 3): Fraction(-6)}
        assert m.act_label("f", ("w", 3)) == {("w", 4): Fraction(1)}

    def test_casimir_zero_on_v0(self):
        m = build_verma(0, 8)
        assert casimir(m).is_zero()

    def test_casimir_scalar_on_general_weight(self):
        for lam in (-3, 1, 4):
            m = build_verma(lam, 8)
            expected = SparseMat.identity(len(m.basis)).scale(Fraction(lam * (lam + 2)))
            assert casimir(m) == expected

    def test_highest_weight_annihilated(self):
        m = build_verma(5, 4)
        assert apply_op(m, "e", vec(m, ("w", 0))) == {}


class TestTensor:
    def test_coproduct_f(self):
        m = build_tensor(2, 4)
        assert m.act_label("f", ("vw", 0, 0)) == {
            ("vw", 1, 0): Fraction(1), ("vw", 0, 1): Fraction(1)}

    def test_weights_add(self):
        m = build_tensor(3, 4)
        assert m.weight(("vw", 1, 2)) == 3 - 2 - 4

    def test_e_drops_vanishing_term(self):
        m = build_tensor(4, 4)
        assert m.act_label("e", ("vw", 1, 1)) == {("vw", 0, 1): Fraction(4)}

    def test_commutator_on_interior(self):
        m = build_tensor(3, 6)
        for b in InteriorRegion(m, 1).labels:
            ef = apply_word(m, "ef", vec(m, b))
            fe = apply_word(m, "fe", vec(m, b))
            h = apply_op(m, "h", vec(m, b))
            assert diff(ef, fe) == h

    def test_weight_grading_exact(self):
        m = build_tensor(3, 5)
        for b in m.basis:
            mu = m.weight(b)
            for lbl in m.act_label("e", b):
                assert m.weight(lbl) == mu + 2
            for lbl in m.act_label("f", b):
                assert m.weight(lbl) == mu - 2


class TestTr:
    def test_generators_n2(self):
        m = build_Tr(0, 2, 10)
        assert m.act_label("e", ("u", 0)) == {}
        assert m.act_label("h", ("a", 0)) == {("a", 0): Fraction(-2)}
        # quotient by the u-column carries e.abar = -k(k+r+1) abar with r=0
        e_a1 = m.act_label("e", ("a", 1))
        assert e_a1[("a", 0)] == Fraction(-2)

    def test_u_column_is_verma_r(self):
        r, n = 2, 4
        m = build_Tr(r, n, 12)
        verma = build_verma(r, 8)
        for k in range(6):
            img = m.act_label("e", ("u", k))
            ref = verma.act_label("e", ("w", k))
            assert {lbl[1]: c for lbl, c in img.items()} == {
                lbl[1]: c for lbl, c in ref.items()}

    def test_weight_multiplicities(self):
        r, n = 2, 4
        m = build_Tr(r, n, 12)
        counts = {}
        for b in m.basis:
            counts[m.weight(b)] = counts.get(m.weight(b), 0) + 1
        for k in range(r + 1):
            assert counts[r - 2 * k] == 1
        for mu in range(-r - 2, -r - 2 - 8, -2):
            assert counts[mu] == 2

    @pytest.mark.parametrize("r,n", [(0, 2), (2, 4), (1, 3)])
    def test_casimir_two_step_nilpotent(self, r, n):
        m = build_Tr(r, n, r + 12)
        c = Fraction(r * (r + 2))
        for b in InteriorRegion(m, 4).labels:
            v = vec(m, b)
            w = _shifted_casimir(m, c, v)
            assert _shifted_casimir(m, c, w) == {}
        a = vec(m, ("a", 0))
        assert _shifted_casimir(m, c, a) != {}

    @pytest.mark.parametrize("r,n", [(0, 2), (2, 4), (1, 5)])
    def test_e_power_kills_generator(self, r, n):
        m = build_Tr(r, n, r + 10)
        v = vec(m, ("a", 0))
        for _ in range(r + 2):
            v = apply_op(m, "e", v)
        assert v == {}

    @pytest.mark.parametrize("r,n", [(0, 2), (2, 6), (3, 5)])
    def test_commutator_on_interior(self, r, n):
        m = build_Tr(r, n, r + 10)
        for b in InteriorRegion(m, 1).labels:
            ef = apply_word(m, "ef", vec(m, b))
            fe = apply_word(m, "fe", vec(m, b))
            assert diff(ef, fe) == apply_op(m, "h", vec(m, b))

    def test_rejects_bad_index(self):
        with pytest.raises(ValueError):
            build_Tr(1, 2, 8)  # 1 is not a projective index for n=2


def _shifted_casimir(m, c, v):
    from vermalab.sl2mod import casimir_on_vector
    out = casimir_on_vector(m, v)
    for lbl, x in v.items():
        y = out.get(lbl, 0) - c * x
        if y:
            out[lbl] = y
        else:
            out.pop(lbl, None)
    return out


class TestCategoryMembership:
    def test_verma_is_member(self):
        rep = verify_category_I(build_verma(0, 10))
        assert rep.in_category

    def test_ln_fails_f_injectivity(self):
        rep = verify_category_I(build_Ln(2))
        assert rep.weights_diagonal and rep.e_locally_nilpotent
        assert not rep.f_injective
        assert rep.f_failures == [-2]

    def test_tr_is_member(self):
        rep = verify_category_I(build_Tr(0, 2, 10))
        assert rep.in_category


def test_weight_space_completeness():
    m = build_tensor(3, 4)
    assert m.weight_space_complete(3)
    assert m.weight_space_complete(-5)     # k up to 4 at i=0
    assert not m.weight_space_complete(-7)  # would need k = 5
    assert m.weight_space_complete(-8)      # parity mismatch: empty slice
    v = build_verma(0, 3)
    assert v.weight_space_complete(-6)
    assert not v.weight_space_complete(-8)
    t = build_Tr(0, 2, 6)
    assert t.weight_space_complete(0 - 2 * 6)
    assert not t.weight_space_complete(0 - 2 * 7)


def test_serialization_roundtrip_shape():
    m = build_verma(0, 3)
    doc = module_to_json(m)
    assert doc["kind"] == "Verma"
    assert doc["basis"] == ["w0", "w1", "w2", "w3"]
    assert doc["weights"] == [0, -2, -4, -6]
    assert all(len(t) == 3 for t in doc["actF"])


def test_label_str():
    assert label_str(("vw", 1, 2)) == "v1*w2"
    assert label_str(("a", 3)) == "a3"
