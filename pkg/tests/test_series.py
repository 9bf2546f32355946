import pytest

from quivermoduli.errors import InputError, MixedCutoffError
from quivermoduli.series import (TruncatedSeries, drezet_series,
                                 two_row_partition_series)


class TestTruncatedSeries:
    def test_padding_and_equality(self):
        assert TruncatedSeries([1, 2], 4).coeffs == (1, 2, 0, 0, 0)
        assert TruncatedSeries([1], 2) == TruncatedSeries([1, 0, 0], 2)

    def test_mixed_cutoff_rejected(self):
        with pytest.raises(MixedCutoffError):
            TruncatedSeries([1], 2) + TruncatedSeries([1], 3)
        with pytest.raises(MixedCutoffError):
            TruncatedSeries([1], 2) * TruncatedSeries([1], 3)

    def test_mul_truncates(self):
        a = TruncatedSeries([1, 1], 2)   # 1 + q
        assert a * a == TruncatedSeries([1, 2, 1], 2)
        b = TruncatedSeries([0, 0, 1], 2)  # q^2
        assert b * b == TruncatedSeries([0, 0, 0], 2)

    def test_geometric_inverse(self):
        one = TruncatedSeries.one(5)
        g = one.divide_one_minus_qk(1)
        assert g.coeffs == (1,) * 6
        assert g.times_one_minus_qk(1) == one

    def test_too_many_coefficients(self):
        with pytest.raises(InputError):
            TruncatedSeries([1, 2, 3], 1)


class TestPartitionSeries:
    def test_two_row_reference_values(self):
        assert list(two_row_partition_series(6).coeffs) == [1, 1, 3, 5, 10, 16, 29]

    def test_two_row_small(self):
        assert list(two_row_partition_series(0).coeffs) == [1]
        assert list(two_row_partition_series(1).coeffs) == [1, 1]

    def test_drezet_stabilizes_to_two_row(self):
        # large block sizes reproduce the two-row series below the cutoff
        assert drezet_series(6, 6, 6) == two_row_partition_series(6)

    def test_drezet_small(self):
        # (1-q)/(1-q)^2 = 1/(1-q)
        assert list(drezet_series(1, 1, 4).coeffs) == [1, 1, 1, 1, 1]

    def test_input_validation(self):
        with pytest.raises(InputError):
            drezet_series(0, 1, 3)
        with pytest.raises(InputError):
            two_row_partition_series(-1)
