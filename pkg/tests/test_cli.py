"""Tests for the command-line front end."""

import json
from pathlib import Path

import pytest

from a051221.cli import main
from a051221.verifier.enums import ExitStatus

GOLDEN = Path(__file__).parent / 'golden'


def _pair_156(document):
    c156 = next(item for item in document['candidates'] if item['c'] == 156)
    return next(pair for pair in c156['pairs'] if (pair['a'], pair['b']) == (22, 8))


def _invent_fallback(document):
    document['fallback_pairs'] = [[1, 1]]


def _invent_inconclusive(document):
    document['inconclusive_pairs'] = [[3, 2]]


def _lower_even_bound(document):
    document['even_exponent_bounds'][0]['min_value'] = 1


def _skip_first_prime(document):
    _pair_156(document)['primes_tried'] = [1601]


def _shift_zero_positions(document):
    pair = _pair_156(document)
    sample = pair['zero_positions_sample']
    if isinstance(sample, dict):
        sample['offset'] = (sample['offset'] + 1) % sample['modulus']
    else:
        pair['zero_positions_sample'] = [k + 1 for k in sample]


class TestExample:
    """Tests for the example subcommand."""

    def test_c31_trace_matches_golden(self, capsys):
        assert main(['example', '--c', '31']) == ExitStatus.COMPLETE
        expected = (GOLDEN / 'example_c31.txt').read_text(encoding='utf-8')
        assert capsys.readouterr().out == expected

    def test_vacuous_candidate(self, capsys):
        assert main(['example', '--c', '7']) == ExitStatus.COMPLETE
        lines = capsys.readouterr().out.splitlines()
        assert lines == [
            'c = 7',
            'fundamental pairs: 0',
            'vacuous: no fundamental pairs',
            'c = 7: excluded',
        ]

    def test_fallback_trace_lists_both_primes(self, capsys):
        assert main(['example', '--c', '156']) == ExitStatus.COMPLETE
        out = capsys.readouterr().out
        assert 'pair (22,8)' in out
        assert 'primes tried: 160001, 1601' in out
        assert 'prime: 1601 (subgroup order 200)' in out

    def test_known_value_rejected(self, capsys):
        assert main(['example', '--c', '39']) == ExitStatus.INVALID_CONFIGURATION
        assert 'known set' in capsys.readouterr().err

    def test_out_of_range_reports_checked_bounds(self, capsys):
        assert main(['example', '--c', '100', '--min', '120']) == (
            ExitStatus.INVALID_CONFIGURATION
        )
        assert '[120, 2000]' in capsys.readouterr().err


class TestKnown:
    """Tests for the known subcommand."""

    def test_bfile(self, capsys):
        assert main(['known']) == ExitStatus.COMPLETE
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == '0 0'
        assert lines[-1].endswith(' 1999')

    def test_offset_and_file(self, tmp_path):
        out = tmp_path / 'b051221.txt'
        assert main(['known', '--offset', '1', '--out', str(out)]) == ExitStatus.COMPLETE
        assert out.read_text(encoding='utf-8').splitlines()[0] == '1 0'


class TestOracleCheck:
    """Tests for the oracle-check subcommand."""

    def test_found(self, capsys):
        assert main(['oracle-check', '--c', '39', '--x-max', '7']) == ExitStatus.COMPLETE
        assert capsys.readouterr().out == 'c=39: x=3 y=31\n'

    def test_absent(self, capsys):
        assert main(['oracle-check', '--c', '31', '--x-max', '37']) == ExitStatus.COMPLETE
        assert capsys.readouterr().out == 'c=31: no representation with x <= 37\n'

    def test_width_bound(self):
        assert main(['oracle-check', '--c', '31', '--x-max', '38']) == (
            ExitStatus.INVALID_CONFIGURATION
        )


class TestVerify:
    """Tests for the verify subcommand."""

    def test_small_range(self, tmp_path, capsys):
        out = tmp_path / 'certificate.json'
        assert main(['verify', '--max', '50', '--out', str(out), '-q']) == ExitStatus.COMPLETE
        document = json.loads(out.read_text(encoding='utf-8'))
        assert document['complete'] is True
        assert 'fallback pairs: none' in capsys.readouterr().out

    def test_inconclusive_exit(self, capsys):
        argv = ['verify', '--min', '150', '--max', '160', '--primes', '160001', '-q']
        assert main(argv) == ExitStatus.INCONCLUSIVE
        assert 'inconclusive: c=156 pair (22,8)' in capsys.readouterr().out

    @pytest.mark.parametrize('flags', [
        ['--modulus', '1234'],
        ['--modulus', '100000'],
        ['--primes', '4'],
        ['--primes', 'abc'],
        ['--oracle-x-max', '40'],
        ['--min', '10', '--max', '5'],
        ['--jobs', '0'],
    ])
    def test_invalid_configuration(self, flags):
        assert main(['verify', *flags]) == ExitStatus.INVALID_CONFIGURATION

    def test_unknown_subcommand(self):
        assert main(['prove']) == ExitStatus.INVALID_CONFIGURATION

    def test_jobs_do_not_change_the_certificate(self, tmp_path):
        serial = tmp_path / 'serial.json'
        parallel = tmp_path / 'parallel.json'
        assert main(['verify', '--max', '300', '--jobs', '1', '--out', str(serial), '-q']) == 0
        assert main(['verify', '--max', '300', '--jobs', '8', '--out', str(parallel), '-q']) == 0
        assert serial.read_bytes() == parallel.read_bytes()

    @pytest.mark.slow
    def test_jobs_do_not_change_the_default_certificate(self, tmp_path):
        serial = tmp_path / 'serial.json'
        parallel = tmp_path / 'parallel.json'
        assert main(['verify', '--jobs', '1', '--out', str(serial), '-q']) == 0
        assert main(['verify', '--jobs', '8', '--out', str(parallel), '-q']) == 0
        assert serial.read_bytes() == parallel.read_bytes()

    @pytest.mark.slow
    def test_default_range(self, capsys):
        assert main(['verify', '--jobs', '4', '-q']) == ExitStatus.COMPLETE
        out = capsys.readouterr().out
        assert '0 inconclusive' in out
        for pair in ('(22,8)', '(38,16)', '(68,24)', '(67,24)', '(3,12)'):
            assert pair in out

    @pytest.mark.slow
    def test_first_prime_alone(self, capsys):
        assert main(['verify', '--primes', '160001', '--jobs', '4', '-q']) == (
            ExitStatus.INCONCLUSIVE
        )
        lines = capsys.readouterr().out.splitlines()
        assert len([line for line in lines if line.startswith('inconclusive: ')]) == 5


class TestAudit:
    """Tests for the audit subcommand."""

    def _certificate(self, tmp_path):
        path = tmp_path / 'certificate.json'
        assert main(['verify', '--max', '50', '--out', str(path), '-q']) == 0
        return path

    def test_clean(self, tmp_path, capsys):
        path = self._certificate(tmp_path)
        assert main(['audit', '--certificate', str(path), '-q']) == ExitStatus.COMPLETE
        assert 'audit: 0 discrepancies, oracle clean' in capsys.readouterr().out

    def test_tampered_residue(self, tmp_path):
        path = self._certificate(tmp_path)
        document = json.loads(path.read_text(encoding='utf-8'))
        c31 = next(item for item in document['candidates'] if item['c'] == 31)
        c31['pairs'][0]['residues'][0] = 1
        path.write_text(json.dumps(document), encoding='utf-8')
        assert main(['audit', '--certificate', str(path), '-q']) == (
            ExitStatus.INVARIANT_VIOLATION
        )

    def test_missing_file(self, tmp_path):
        missing = tmp_path / 'missing.json'
        assert main(['audit', '--certificate', str(missing)]) == (
            ExitStatus.INVALID_CONFIGURATION
        )

    def test_malformed_file(self, tmp_path):
        path = tmp_path / 'broken.json'
        path.write_text('[1, 2', encoding='utf-8')
        assert main(['audit', '--certificate', str(path)]) == ExitStatus.INVALID_CONFIGURATION

    @pytest.mark.parametrize('tamper', [
        _invent_fallback,
        _invent_inconclusive,
        _lower_even_bound,
        _skip_first_prime,
        _shift_zero_positions,
    ])
    def test_tampered_fallback_range(self, tmp_path, capsys, tamper):
        path = tmp_path / 'certificate.json'
        argv = ['verify', '--min', '150', '--max', '160', '--out', str(path), '-q']
        assert main(argv) == ExitStatus.COMPLETE
        assert main(['audit', '--certificate', str(path), '-q']) == ExitStatus.COMPLETE

        document = json.loads(path.read_text(encoding='utf-8'))
        tamper(document)
        path.write_text(json.dumps(document), encoding='utf-8')
        capsys.readouterr()
        assert main(['audit', '--certificate', str(path), '-q']) == (
            ExitStatus.INVARIANT_VIOLATION
        )
        assert 'discrepancy: ' in capsys.readouterr().out
