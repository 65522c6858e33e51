"""
Unit tests for table generation, CSV input and baseline comparison.
"""

import csv
from dataclasses import replace

import pytest

from stabilens.catalog import (
    RECIPES, compare, compare_entry, data_path, generate_table, improvements, read_baseline, read_catalog,
    read_seeds, summarize, table_names
)
from stabilens.core.errors import MalformedCSV, UnknownTable
from stabilens.core.types import CatalogEntry, EntrySource, QuantumParams, Verdict
from stabilens.derive import format_chain, replay_chain
from stabilens.reporter import CSVReporter

from .fixtures import BINARY_SEEDS, FAMILIES, IMPROVEMENTS, TABLE1, TABLE1_AMBIGUOUS


def entry(q, N, K, D, source=EntrySource.THIS_WORK, provenance='test'):
    return CatalogEntry(params=QuantumParams(q=q, N=N, K=K, D=D), source=source, provenance=provenance)


def keys(report):
    return {e.params.key for e in report.entries}


@pytest.mark.parametrize('name', sorted(FAMILIES))
def test_family_tables(name):
    report = generate_table(name)
    assert keys(report) == FAMILIES[name]
    assert report.report_info['rows'] == len(FAMILIES[name])


def test_table_names_cover_recipes():
    assert {'table1', 'table2', 'table3', 'f3-110'} <= set(table_names())


def test_unknown_table():
    with pytest.raises(UnknownTable) as info:
        generate_table('table9')
    assert 'table1' in info.value.known


class TestBinaryRecords:
    @pytest.fixture(scope='class')
    def report(self):
        return generate_table('table1')

    def test_rows(self, report):
        assert len(report.entries) == 91
        assert {(e.N, e.K, e.D) for e in report.entries} == {row[:3] for row in TABLE1}

    def test_seeds_are_starred(self, report):
        starred = {(e.N, e.K, e.D) for e in report.entries if e.marker == '*'}
        assert starred == set(BINARY_SEEDS)

    def test_markers(self, report):
        markers = {(e.N, e.K, e.D): e.marker for e in report.entries}
        for N, K, D, expected in TABLE1:
            if (N, K, D) in TABLE1_AMBIGUOUS:
                assert markers[(N, K, D)] == 'L|S (ambiguous)'
            else:
                assert markers[(N, K, D)] == expected, (N, K, D)

    def test_ordering(self, report):
        order = [(-e.N, -e.K, e.D) for e in report.entries]
        assert order == sorted(order)

    def test_every_row_beats_baseline(self, report):
        baseline = read_baseline(data_path('binary_baseline.csv'))
        best = {}
        for b in baseline:
            best[(b.N, b.D)] = max(best.get((b.N, b.D), -1), b.K)
        assert all(e.K > best[(e.N, e.D)] for e in report.entries)

    def test_chains_replay(self, report):
        for e in report.entries:
            assert replay_chain(format_chain(e.provenance)).params == e.params

    def test_csv_is_deterministic(self, report):
        first = CSVReporter().render(report)
        assert first == CSVReporter().render(generate_table('table1'))
        assert first.splitlines()[0] == 'q,N,K,D,rule,chain'


def test_literature_improvements():
    ours = []
    for name in ('f4-765', 'f3-110', 'f7-392', 'f8-567'):
        ours.extend(generate_table(name).entries)
    verdicts = compare(ours, read_baseline(data_path('literature_baseline.csv')))
    assert [v.verdict for v in verdicts] == [Verdict.BETTER] * 6
    pairs = {(v.ours.params.key, v.theirs.params.key) for v in improvements(verdicts)}
    assert pairs == set(IMPROVEMENTS)


def test_binary_baseline_is_beaten_or_matched():
    verdicts = compare(generate_table('table1').entries, read_baseline(data_path('binary_baseline.csv')))
    counts = summarize(verdicts)
    assert counts['better'] > 0
    assert counts['worse'] == 0
    assert sum(counts.values()) == len(verdicts)


class TestCompareEntry:
    def test_equal(self):
        theirs = entry(2, 10, 4, 3, EntrySource.BASELINE)
        assert compare_entry([entry(2, 10, 4, 3)], theirs).verdict is Verdict.EQUAL

    def test_better_by_distance(self):
        theirs = entry(2, 10, 4, 3, EntrySource.BASELINE)
        result = compare_entry([entry(2, 10, 4, 4), entry(2, 10, 4, 3)], theirs)
        assert result.verdict is Verdict.BETTER
        assert result.ours.D == 4

    def test_worse(self):
        theirs = entry(2, 10, 4, 3, EntrySource.BASELINE)
        result = compare_entry([entry(2, 10, 3, 3)], theirs)
        assert result.verdict is Verdict.WORSE

    def test_incomparable(self):
        theirs = entry(2, 10, 4, 3, EntrySource.BASELINE)
        ours = [entry(2, 10, 5, 2), entry(2, 11, 4, 3), entry(4, 10, 4, 3)]
        result = compare_entry(ours, theirs)
        assert result.verdict is Verdict.INCOMPARABLE
        assert result.ours is None

    def test_summary_has_every_verdict(self):
        assert summarize([]) == {'better': 0, 'equal': 0, 'worse': 0, 'incomparable': 0}


class TestCSVInput:
    def test_bad_integer_line(self, tmp_path):
        path = tmp_path / 'base.csv'
        path.write_text("q,N,K,D,citation\n2,10,4,3,x\n2,10,four,3,y\n")
        with pytest.raises(MalformedCSV) as info:
            read_baseline(path)
        assert info.value.line == 3

    def test_missing_column(self, tmp_path):
        path = tmp_path / 'base.csv'
        path.write_text("q,N,K\n2,10,4\n")
        with pytest.raises(MalformedCSV) as info:
            read_baseline(path)
        assert info.value.line == 1

    def test_short_row(self, tmp_path):
        path = tmp_path / 'base.csv'
        path.write_text("q,N,K,D,citation\n2,10,4\n")
        with pytest.raises(MalformedCSV) as info:
            read_baseline(path)
        assert info.value.line == 2

    def test_invalid_params(self, tmp_path):
        path = tmp_path / 'base.csv'
        path.write_text("q,N,K,D,citation\n6,10,4,3,x\n")
        with pytest.raises(MalformedCSV):
            read_baseline(path)

    def test_empty_seed_file(self, tmp_path):
        path = tmp_path / 'seeds.csv'
        path.write_text("")
        assert read_seeds(path) == []

    def test_bare_seed_rows(self, tmp_path):
        path = tmp_path / 'seeds.csv'
        path.write_text("q,N,K,D\n2,252,204,7\n")
        (record,) = read_seeds(path)
        assert record.params.key == (2, 252, 204, 7)
        assert record.inputs.m == 4 and record.inputs.n == 63

    def test_underivable_seed(self, tmp_path):
        path = tmp_path / 'seeds.csv'
        path.write_text("q,N,K,D\n2,251,200,7\n")
        with pytest.raises(MalformedCSV) as info:
            read_seeds(path)
        assert info.value.line == 2

    def test_catalog_round_trip(self, tmp_path):
        report = generate_table('f4-153')
        path = tmp_path / 'catalog.csv'
        CSVReporter().generate(report, str(path))
        entries = read_catalog(path)
        assert [e.params.key for e in entries] == [e.params.key for e in report.entries]
        assert all(e.provenance.params == e.params for e in entries)


def baseline_rows():
    with open(data_path('binary_baseline.csv'), newline='', encoding='utf-8') as handle:
        return list(csv.DictReader(handle))


class TestBinaryBaseline:
    def test_every_row_cites_its_own_entry(self):
        rows = baseline_rows()
        assert len({row['citation'] for row in rows}) == len(rows)
        for row in rows:
            assert f"n={row['N']} d={row['D']}" in row['citation']
            assert row['source']

    def test_quantum_singleton_bound(self):
        for b in read_baseline(data_path('binary_baseline.csv')):
            assert b.K <= b.N - 2 * b.D + 2

    def test_monotone_in_length(self):
        """Lengthening never loses dimension, so K cannot drop as N grows at fixed D."""
        by_d = {}
        for b in read_baseline(data_path('binary_baseline.csv')):
            by_d.setdefault(b.D, []).append((b.N, b.K))
        for rows in by_d.values():
            dims = [K for _, K in sorted(rows)]
            assert dims == sorted(dims)

    def test_larger_distance_costs_dimension(self):
        known = {(b.N, b.D): b.K for b in read_baseline(data_path('binary_baseline.csv'))}
        for (N, D), K in known.items():
            if (N, D + 1) in known:
                assert known[(N, D + 1)] <= K

    def test_inferred_record_is_generated(self):
        table = {}
        for e in generate_table('table1').entries:
            table.setdefault((e.N, e.D), []).append(e.K)
        for row in baseline_rows():
            record = int(row['source'].split('K=')[1].split()[0])
            assert record == int(row['K']) + 1
            assert min(table[(int(row['N']), int(row['D']))]) == record

    def test_table_follows_baseline_data(self, tmp_path, monkeypatch):
        rows = baseline_rows()
        for row in rows:
            if (row['N'], row['D']) == ('252', '7'):
                row['K'] = '203'
        path = tmp_path / 'baseline.csv'
        with open(path, 'w', newline='', encoding='utf-8') as handle:
            writer = csv.DictWriter(handle, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
        monkeypatch.setitem(RECIPES, 'table1', replace(RECIPES['table1'], baseline=str(path)))
        entries = {(e.N, e.K, e.D) for e in generate_table('table1').entries}
        assert len(entries) == 90
        assert (252, 203, 7) not in entries
        assert (252, 204, 7) in entries
