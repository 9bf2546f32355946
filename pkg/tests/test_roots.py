import pytest

from quivermoduli.errors import InputError
from quivermoduli.quiver import DimVector, Quiver
from quivermoduli.roots import (classify_root, decomposition_stratum_nonempty,
                                positive_roots_up_to, replay_witness)

from conftest import dv


class TestClassify:
    def test_a2_examples(self, a2):
        assert classify_root(a2, dv(i=1, j=1)).kind == "real"
        assert classify_root(a2, dv(i=2)).kind == "not-root"
        assert classify_root(a2, dv(i=1)).kind == "real"

    def test_k2_examples(self, k2):
        assert classify_root(k2, dv(i=2, j=2)).kind == "imaginary"
        assert classify_root(k2, dv(i=1, j=1)).kind == "imaginary"  # isotropic
        assert classify_root(k2, dv(i=2, j=1)).kind == "real"

    def test_zero_rejected(self, a2):
        with pytest.raises(InputError):
            classify_root(a2, dv())

    def test_disconnected_support_not_root(self, a3):
        assert classify_root(a3, DimVector({"1": 1, "3": 1})).kind == "not-root"

    def test_witness_replays_to_input(self, k2, a3):
        for q, d in [(k2, dv(i=2, j=1)), (k2, dv(i=3, j=2)),
                     (a3, DimVector({"1": 1, "2": 1, "3": 1}))]:
            cls = classify_root(q, d)
            assert cls.kind == "real"
            assert replay_witness(q, cls.endpoint, cls.witness) == d

    def test_imaginary_endpoint_in_fundamental_domain(self, k3):
        cls = classify_root(k3, dv(i=2, j=3))
        assert cls.kind == "imaginary"
        e = cls.endpoint
        for v in e.support():
            assert k3.symmetric_form(e, k3.simple(v)) <= 0


class TestEnumeration:
    def test_a2_roots(self, a2):
        roots = positive_roots_up_to(a2, dv(i=2, j=2))
        assert roots == [(dv(j=1), "real"), (dv(i=1), "real"),
                         (dv(i=1, j=1), "real")]

    def test_k2_affine_roots(self, k2):
        roots = dict(positive_roots_up_to(k2, dv(i=2, j=2)))
        # affine A1: roots are (a,b) with |a-b| <= 1
        assert roots == {dv(i=1): "real", dv(j=1): "real",
                         dv(i=1, j=1): "imaginary", dv(i=2, j=1): "real",
                         dv(i=1, j=2): "real", dv(i=2, j=2): "imaginary"}

    def test_single_vertex(self):
        q = Quiver(["x"], [])
        assert positive_roots_up_to(q, DimVector({"x": 3})) == \
            [(DimVector({"x": 1}), "real")]

    def test_tits_form_values(self, k2, k3, a2, a3):
        for q, bound in [(k2, dv(i=3, j=3)), (k3, dv(i=3, j=3)),
                         (a2, dv(i=3, j=3)),
                         (a3, DimVector({"1": 2, "2": 2, "3": 2}))]:
            for d, kind in positive_roots_up_to(q, bound):
                tits = q.euler(d, d)
                if kind == "real":
                    assert tits == 1, (d, kind)
                else:
                    assert tits <= 0, (d, kind)


class TestStratum:
    def test_examples(self, a2):
        assert decomposition_stratum_nonempty(a2, [dv(i=1, j=1), dv(i=1)])
        assert not decomposition_stratum_nonempty(a2, [dv(i=2)])
        assert decomposition_stratum_nonempty(a2, [dv(j=1)])

    def test_zero_part_rejected(self, a2):
        with pytest.raises(InputError):
            decomposition_stratum_nonempty(a2, [dv()])
