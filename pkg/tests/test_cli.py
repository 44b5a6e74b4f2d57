import json
import subprocess
import sys

import pytest

from supersingular.cli import dumps, main, parse_poly, parse_weil, UsageError


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_classify_poly_type1(capsys):
    code, out = run(['classify', '--poly', '[3,0,1]', '--p', '3', '--s', '1'], capsys)
    doc = json.loads(out)
    assert code == 0 and doc['schema'] == 'supersingular-report/1'
    rec = doc['record']
    assert rec['exceptional'] == 'type1' and rec['supersingular'] is True
    assert [s['invariant_factors'] for s in rec['structures']] == [[4], [2, 2]]
    assert (rec['p'], rec['s'], rec['q'], rec['g_coeffs'], rec['e'], rec['d'], rec['m']) == \
        (3, 1, 3, [3, 0, 1], 1, 1, 4)


def test_classify_weil_type2(capsys):
    code, out = run(['classify', '--weil', 'm=1,nu=0', '--p', '5', '--s', '1'], capsys)
    rec = json.loads(out)['record']
    assert code == 0 and rec['exceptional'] == 'type2' and rec['e'] == 2 and rec['d'] == 2
    assert len(rec['structures']) == rec['e'] + 1
    assert rec['module']['branch'] == 'mixed'


def test_classify_rejection(capsys):
    code = main(['classify', '--poly', '[1,1,1]', '--p', '5', '--s', '1'])
    captured = capsys.readouterr()
    assert code == 2 and 'not supersingular' in captured.err
    assert json.loads(captured.out)['error']['type'] == 'not supersingular'


def test_classify_not_elementary(capsys):
    code = main(['classify', '--poly', '[9,0,-3,0,1]', '--p', '3'])
    assert code == 2 and 'not elementary' in capsys.readouterr().err


@pytest.mark.parametrize('argv', [
    ['classify', '--poly', '[1,1', '--p', '5'],
    ['classify', '--poly', '[1,2]', '--weil', 'm=1,nu=0', '--p', '5'],
    ['classify', '--weil', 'm=4', '--p', '3'],
    ['classify', '--weil', 'm=4,nu=2', '--p', '3'],
    ['classify', '--poly', '[3,0,1]', '--p', '4'],
    ['enumerate', '--p', '5', '--d-max', '0'],
    ['verify', 'ec', '--p-max', '61', '--s', '2'],
    ['verify', 'g2', '--p', '7'],
    ['verify', 'roundtrip', '--m-max', '99'],
    ['bogus'],
    [],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 1


def test_enumerate_sorted_and_unique(capsys):
    code, out = run(['enumerate', '--p', '5', '--s', '1', '--d-max', '2'], capsys)
    recs = json.loads(out)['records']
    keys = [(len(r['g_coeffs']), r['g_coeffs'], r['e']) for r in recs]
    assert code == 0 and keys == sorted(keys) and len(set(map(str, keys))) == len(keys)
    assert all(len(r['structures']) == (1 if r['exceptional'] == 'none' else r['e'] + 1) for r in recs)


def test_structure_command(capsys):
    code, out = run(['structure', '--weil', 'm=4,nu=1', '--p', '7'], capsys)
    doc = json.loads(out)
    assert code == 0 and doc['local_2'] == {'exceptional': True, 'options': [[8], [2, 4]]}


def test_output_is_deterministic(capsys):
    _, a = run(['enumerate', '--p', '3', '--s', '3', '--d-max', '2'], capsys)
    _, b = run(['enumerate', '--p', '3', '--s', '3', '--d-max', '2'], capsys)
    assert a == b


def test_big_integers_rendered_as_strings(capsys):
    q = 13**30
    code, out = run(['classify', '--poly', json.dumps([q * q, 0, 2 * q, 0, 1]), '--p', '13', '--s', '30'],
                    capsys)
    rec = json.loads(out)['record']
    assert code == 0 and rec['q'] == str(q) and rec['g_coeffs'] == [str(q), 0, 1] and rec['e'] == 2
    assert rec['structures'][0]['invariant_factors'] == [str(q + 1)] * 2
    assert json.loads(dumps({'x': 2**53 - 1, 'y': -2**53})) == {'x': 2**53 - 1, 'y': str(-2**53)}


def test_table_output(capsys):
    code, out = run(['--table', 'classify', '--poly', '[3,0,1]', '--p', '3'], capsys)
    assert code == 0 and 'type1' in out and 'Z/2 x Z/2' in out
    code, out2 = run(['classify', '--poly', '[3,0,1]', '--p', '3', '--table'], capsys)
    assert out2 == out


def test_verify_suites(capsys):
    code, out = run(['verify', 'orders'], capsys)
    doc = json.loads(out)
    assert code == 0 and doc['corpus']['agreed'] == 477 and doc['bridge']['agreed'] == 112
    code, out = run(['verify', 'ec', '--p-max', '7'], capsys)
    assert code == 0 and json.loads(out)['passed']
    code, out = run(['verify', 'roundtrip', '--p-max', '5', '--m-max', '6'], capsys)
    assert code == 0 and json.loads(out)['passed']


def test_input_parsers():
    assert parse_poly('[3, 0, 1]').coeffs == (3, 0, 1)
    assert parse_weil('m=12,nu=5') == (12, 5)
    for bad in ('[]', '[1,2,3.5]', '[2,0,2]', '{"a":1}', '[true,1]'):
        with pytest.raises(UsageError):
            parse_poly(bad)
    for bad in ('m=1', 'm=1,nu=x', 'q=1,nu=0', 'm=1,m=2'):
        with pytest.raises(UsageError):
            parse_weil(bad)


def test_module_entry_point():
    out = subprocess.run([sys.executable, '-m', 'supersingular', 'classify', '--poly', '[2,2,1]',
                          '--p', '2'], capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)['record']['structures'][0]['invariant_factors'] == [5]
