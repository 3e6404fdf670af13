import io
from itertools import combinations_with_replacement

import pytest

from triheap import (
    GrundyTable,
    Position,
    ResourceLimitError,
    exhaustive_agreement,
    grundy,
    is_p_position,
    mex,
    oracle_classify,
)
from reference import classify, grundy_value


class TestMex:
    def test_empty(self):
        assert mex([]) == 0

    def test_initial_segment(self):
        assert mex({0, 1, 2}) == 3

    def test_gap_at_zero(self):
        assert mex({1, 2}) == 0

    def test_gap_inside(self):
        assert mex({0, 1, 3, 7}) == 2


class TestClassify:
    def test_terminal_is_p(self):
        assert oracle_classify(Position((0, 0, 0))) == "P"

    def test_small_p(self):
        assert oracle_classify(Position((1, 1, 2))) == "P"

    def test_small_n(self):
        assert oracle_classify(Position((1, 1, 1, 1)), bound=4) == "N"

    def test_matches_referee(self):
        table = GrundyTable(3, 6)
        memo = {}
        for heaps in combinations_with_replacement(range(7), 3):
            expected = "P" if classify(heaps, memo) else "N"
            assert table.classify(heaps) == expected

    def test_bound_exceeded(self):
        table = GrundyTable(3, 5)
        with pytest.raises(ResourceLimitError):
            table.classify((0, 0, 6))

    def test_wrong_k(self):
        table = GrundyTable(3, 5)
        with pytest.raises(ResourceLimitError):
            table.classify((0, 0, 1, 1))


class TestGrundy:
    def test_terminal(self):
        assert grundy(Position((0, 0, 0))) == 0

    def test_one_token(self):
        assert grundy(Position((0, 0, 1))) == 1

    def test_matches_referee(self):
        table = GrundyTable(3, 5)
        memo = {}
        for heaps in combinations_with_replacement(range(6), 3):
            assert table.grundy(heaps) == grundy_value(heaps, memo)

    def test_zero_exactly_on_documented_classes(self):
        # every member of classes 0..3 for k=3 has value 0
        from triheap import enumerate_p_class

        table = GrundyTable(3, 10)
        for n in range(4):
            for member in enumerate_p_class(n, 3):
                assert table.grundy(member) == 0

    def test_zero_iff_p(self):
        table = GrundyTable(3, 8)
        for heaps in combinations_with_replacement(range(9), 3):
            assert (table.grundy(heaps) == 0) == (table.classify(heaps) == "P")

    def test_warm_equals_cold(self):
        cold = {
            heaps: GrundyTable(3, 4).grundy(heaps)
            for heaps in combinations_with_replacement(range(5), 3)
        }
        warm_table = GrundyTable(3, 4)
        warm = {heaps: warm_table.grundy(heaps) for heaps in cold}
        rewarm = {heaps: warm_table.grundy(heaps) for heaps in cold}
        assert cold == warm == rewarm


class TestCsvRoundTrip:
    def test_header_and_order(self):
        table = GrundyTable(3, 2)
        buf = io.StringIO()
        table.write_csv(buf)
        lines = buf.getvalue().splitlines()
        assert lines[0] == "k,bound,version"
        assert lines[1] == "3,2,1"
        rows = [tuple(int(x) for x in line.split(",")) for line in lines[2:]]
        assert rows == sorted(rows)  # lexicographic, deterministic
        assert len(rows) == 10  # multisets of size 3 from {0,1,2}

    def test_round_trip(self):
        table = GrundyTable(4, 3)
        buf = io.StringIO()
        table.write_csv(buf)
        buf.seek(0)
        loaded = GrundyTable.read_csv(buf)
        assert loaded.k == 4 and loaded.bound == 3
        for heaps in combinations_with_replacement(range(4), 4):
            assert loaded.grundy(heaps) == table.grundy(heaps)

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            GrundyTable.read_csv(io.StringIO("not,a,table\n"))


class TestExhaustiveAgreement:
    def test_trivial_bound_zero(self):
        report = exhaustive_agreement(3, 0)
        assert report.positions_checked == 1
        assert report.ok

    def test_small_sweep_clean(self):
        report = exhaustive_agreement(3, 8)
        assert report.ok, report.summary()
        assert report.positions_checked == 165  # C(11,3) multisets
        assert report.p_count + report.n_count == 165

    def test_summary_mentions_counts(self):
        report = exhaustive_agreement(3, 4)
        assert "positions" in report.summary()
        assert "0 disagreements" in report.summary()

    def test_detects_injected_corruption(self):
        # sanity that the sweep would actually catch a broken table
        table = GrundyTable(3, 4)
        key = (0, 1, 2)
        table._pn[key] = not table._pn[key]
        report = exhaustive_agreement(3, 4, table=table)
        assert not report.ok
        assert any(h == key for h, _, _ in report.classifier_mismatches)
