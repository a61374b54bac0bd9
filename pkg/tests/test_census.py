import json
import os

import pytest

from deza.canon import canonical_certificate
from deza.catalog import construct
from deza.census import (
    PruneSpec,
    audit_theorem,
    census,
    count_regular_classes_naive,
    generate_regular,
    parse_filter,
)
from deza.classify import classify
from deza.graph6 import decode_graph6, encode_graph6
from deza.graphs import GraphError

# isomorphism-class counts of k-regular graphs, any connectivity; the
# published cubic counts (6 at v=8, 21 at v=10) pin the generator to the
# literature, the rest were frozen from the brute-force oracle
COUNTS = {
    (1, 0): 1, (2, 0): 1, (2, 1): 1, (3, 0): 1, (3, 2): 1,
    (4, 0): 1, (4, 1): 1, (4, 2): 1, (4, 3): 1,
    (5, 0): 1, (5, 2): 1, (5, 4): 1,
    (6, 0): 1, (6, 1): 1, (6, 2): 2, (6, 3): 2, (6, 4): 1, (6, 5): 1,
    (7, 0): 1, (7, 2): 2, (7, 4): 2, (7, 6): 1,
    (8, 0): 1, (8, 1): 1, (8, 2): 3, (8, 3): 6, (8, 4): 6,
    (8, 5): 3, (8, 6): 1, (8, 7): 1,
}


def _g6_set(graphs):
    return sorted(encode_graph6(g) for g in graphs)


class TestGenerateRegular:
    def test_matches_oracle_up_to_seven(self):
        for v in range(1, 8):
            for k in range(v):
                if v * k % 2:
                    continue
                got = len(list(generate_regular(v, k)))
                assert got == count_regular_classes_naive(v, k) == \
                    COUNTS[(v, k)], (v, k)

    def test_frozen_counts_at_eight(self):
        for k in (2, 3, 4):
            assert len(list(generate_regular(8, k))) == COUNTS[(8, k)]

    def test_cubic_at_ten(self):
        graphs = list(generate_regular(10, 3))
        assert len(graphs) == 21
        assert sum(g.is_connected() for g in graphs) == 19

    def test_quartic_at_nine(self):
        graphs = list(generate_regular(9, 4))
        assert len(graphs) == 16
        assert all(g.is_connected() for g in graphs)

    def test_no_duplicates_in_output(self):
        g6 = _g6_set(generate_regular(8, 3))
        assert len(set(g6)) == len(g6)

    def test_bad_parameters(self):
        with pytest.raises(GraphError):
            list(generate_regular(0, 0))
        with pytest.raises(GraphError):
            list(generate_regular(5, 5))
        with pytest.raises(GraphError):
            list(generate_regular(5, 3))   # odd vk

    def test_oracle_parity_shortcut(self):
        assert count_regular_classes_naive(5, 3) == 0


class TestPrunes:
    def test_spec_parsing(self):
        spec = PruneSpec.from_string("maxpair=k-2;sat=0,k-2", 4)
        assert spec.max_pair_count == 2
        assert spec.saturated_values == (0, 2)
        spec = PruneSpec.from_string("satdistinct=2;anchor=k-2", 5)
        assert spec.saturated_distinct_max == 2
        assert spec.saturated_anchor == 3

    def test_unknown_clause(self):
        with pytest.raises(GraphError):
            PruneSpec.from_string("frobnicate=3", 4)

    @pytest.mark.parametrize("v,k", [(8, 3), (8, 4), (9, 4)])
    def test_prune_equals_post_filter(self, v, k):
        # pruned run must produce exactly the unpruned graphs whose pair
        # counts all lie in {0, k-2}
        def two_valued(g):
            for u in range(g.v):
                for w in range(u + 1, g.v):
                    if (g.rows[u] & g.rows[w]).bit_count() not in (0, k - 2):
                        return False
            return True

        pruned = _g6_set(generate_regular(v, k, prune="maxpair=k-2;sat=0,k-2"))
        plain = _g6_set(g for g in generate_regular(v, k) if two_valued(g))
        assert pruned == plain

    def test_anchor_prune_subset(self):
        # anchored runs keep only graphs where some saturated pair hits k-2
        anchored = _g6_set(generate_regular(
            8, 4, prune="maxpair=k-2;satdistinct=2;anchor=k-2"))
        everything = _g6_set(generate_regular(8, 4))
        assert set(anchored) <= set(everything)
        assert "GQzTrg" in anchored      # the 4x2 grid survives


class TestDeterminism:
    def test_parallel_sequence_identical(self):
        serial = [encode_graph6(g) for g in generate_regular(9, 4)]
        parallel = [encode_graph6(g) for g in generate_regular(9, 4, jobs=2)]
        assert serial == parallel

    def test_two_censuses_byte_identical(self, tmp_path):
        a = tmp_path / "a"
        b = tmp_path / "b"
        census([8], [3], out=str(a))
        census([8], [3], out=str(b), jobs=2)
        for suffix in (".g6", ".meta.jsonl"):
            assert (tmp_path / ("a" + suffix)).read_bytes() == \
                (tmp_path / ("b" + suffix)).read_bytes()


class TestCensusRecords:
    def test_file_format_and_round_trip(self, tmp_path):
        prefix = tmp_path / "cells"
        records = census([6, 7], [2], out=str(prefix))
        g6_lines = (tmp_path / "cells.g6").read_text().splitlines()
        meta_lines = (tmp_path / "cells.meta.jsonl").read_text().splitlines()
        assert g6_lines == [r.graph6 for r in records]
        assert len(meta_lines) == len(records)
        for line, rec in zip(meta_lines, records):
            assert line == rec.as_json()
            data = json.loads(line)
            assert list(data) == ["graph6", "v", "k", "deza",
                                  "strictly_deza", "srg", "ddg", "diameter",
                                  "certificate_hash", "generator"]
            # re-serialization is byte-identical: no floats, fixed order
            assert json.dumps(data, separators=(",", ":")) == line
            g = decode_graph6(data["graph6"])
            rep = classify(g)
            assert data["v"] == g.v
            assert data["deza"] == (list(rep.deza) if rep.deza else None)

    def test_records_sorted_by_cell_then_hash(self):
        records = census([6, 7, 8], [2])
        keys = [(r.v, r.k, r.certificate_hash) for r in records]
        assert keys == sorted(keys)
        assert len(set(r.certificate_hash for r in records)) == len(records)

    def test_odd_cells_skipped(self):
        with_odd = [r.graph6 for r in census([5, 6], [3])]
        without = [r.graph6 for r in census([6], [3])]
        assert with_odd == without


class TestFilters:
    def test_alias_expansion(self):
        accept = parse_filter("deza with b=k-2")
        records = census([8], [4])
        picked = [r for r in records if accept(r)]
        assert any(r.graph6 == "GQzTrg" for r in picked)
        assert all(r.deza is not None and r.deza[2] == r.k - 2
                   for r in picked)

    def test_exact_parameter_filter(self):
        records = census([8], [4], filter_spec="deza(8,4,2,0)")
        assert [r.graph6 for r in records] == ["GQzTrg"]

    def test_wildcard_filter_finds_both_strict_graphs(self):
        records = census([8, 9], [4], filter_spec="deza(*,4,2,1)")
        assert all(r.deza[1:] == (4, 2, 1) for r in records)
        found = {(r.v, r.strictly_deza) for r in records}
        assert (8, True) in found
        assert (9, True) in found

    def test_srg_filter_is_petersen_at_ten(self):
        records = census([10], [3], filter_spec="srg")
        assert len(records) == 1
        assert records[0].srg == (10, 3, 0, 1)
        record_cert = canonical_certificate(
            decode_graph6(records[0].graph6)).certificate_bytes
        petersen_cert = canonical_certificate(
            construct("petersen")).certificate_bytes
        assert record_cert == petersen_cert

    def test_conjunction_and_connected(self):
        records = census([6], [2], filter_spec="connected & srg")
        assert records == []      # C6 is not strongly regular
        records = census([6], [2], filter_spec="connected")
        assert len(records) == 1  # the hexagon

    def test_bad_atom(self):
        with pytest.raises(GraphError):
            parse_filter("nonsense-atom")


class TestLimits:
    def test_desk_limits_enforced(self):
        with pytest.raises(GraphError, match="limit"):
            census([12], [6])

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("DEZA_MAX_VERTICES", "6")
        with pytest.raises(GraphError):
            census([8], [3])
        monkeypatch.setenv("DEZA_MAX_VERTICES", "8")
        assert census([8], [3])


class TestAudits:
    def test_theorem_one_small_window(self):
        report = audit_theorem(1, vmax=10)
        assert report.ok
        cases = sorted(f["case"] for f in report.found)
        assert cases == ["cubic-diameter-exceeds-2",
                         "cubic-diameter-exceeds-2",
                         "grid-4x2", "petersen"]
        by_case = {f["case"]: f for f in report.found}
        assert by_case["grid-4x2"]["graph6"] == "GQzTrg"
        assert by_case["petersen"]["diameter"] == 2

    def test_theorem_two_full_window(self):
        report = audit_theorem(2)
        assert report.ok
        assert len(report.found) == 5
        cases = sorted(f["case"] for f in report.found)
        assert cases == ["srg-(10,6,3,4)", "srg-(9,4,1,2)",
                         "strict-deza-(8,4,2,1)", "strict-deza-(9,4,2,1)",
                         "strict-deza-(9,4,2,1)"]
        assert all(f["deza"][2] == f["k"] - 2 for f in report.found)

    def test_theorem_three_flags_parameter_mismatch(self):
        report = audit_theorem(3, vmax=8)
        assert not report.ok
        assert [f["graph6"] for f in report.found] == ["GQzTrg"]
        kinds = [d["kind"] for d in report.discrepancies]
        assert kinds == ["parameter-mismatch"]
        mismatch = report.discrepancies[0]
        assert mismatch["listed"] == [8, 4, 2, 0, 2, 4]
        assert mismatch["computed"] == [8, 4, 0, 2, 4, 2]

    def test_report_serializes(self):
        report = audit_theorem(3, vmax=8)
        text = json.dumps(report.as_dict(), separators=(",", ":"))
        assert json.loads(text)["theorem"] == 3

    def test_unknown_theorem(self):
        with pytest.raises(GraphError):
            audit_theorem(7)
