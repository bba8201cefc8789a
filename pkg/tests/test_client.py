import json

import pytest

from respdeg import APP_VERSION, client
from respdeg.cgs import validate_model
from respdeg.parser import parse_model, serialize_model


def run(capsys, *argv):
    code = client.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *(argv + ('--format', 'json')))
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def broken_path(tmp_path, e1_raw):
    e1_raw['transitions'] = [t for t in e1_raw['transitions']
                             if not (t['from'] == 'q0' and t['profile'] == {'a1': 'a', 'a2': 'a'})]
    path = tmp_path / 'broken.json'
    path.write_text(json.dumps(e1_raw))
    return str(path)


def test_sdr(capsys, e1_path):
    code, out, err = run(capsys, 'sdr', '--model', e1_path, '--state', 'q0', '--affairs', '@bad', '--coalition', 'a1')
    assert code == 0
    assert out == '1/2 (0.5000)\n'


def test_sdr_of_empty_coalition(capsys, e1_path):
    code, out, err = run(capsys, 'sdr', '--model', e1_path, '--state', 'q0', '--affairs', 'q2', '--coalition', '')
    assert code == 0
    assert out == '0 (0.0000)\n'


def test_fdr(capsys, e1_path):
    code, out, err = run(capsys, 'fdr', '--model', e1_path, '--state', 'q0', '--affairs', '@bad', '--coalition', 'a1')
    assert code == 0
    assert out == '1/2 (0.5000)\n'

    view = run_json(capsys, 'fdr', '--model', e1_path, '--state', 'q0', '--affairs', '@bad', '--coalition', 'a1')
    assert view['distance'] == 1
    assert view['witness'] == {'states': ['q0', 'q1'], 'profiles': [{'a1': 'a', 'a2': 'b'}]}


def test_precision(capsys, e1_path):
    code, out, err = run(capsys, 'sdr', '--model', e1_path, '--state', 'q0', '--affairs', '@bad',
                         '--coalition', 'a1', '--precision', '1')
    assert out == '1/2 (0.5)\n'


def test_config_file_sets_defaults(capsys, tmp_path, e1_path):
    config_file = tmp_path / 'custom.conf'
    config_file.write_text('[Default]\nprecision = 2\n')
    code, out, err = run(capsys, 'sdr', '--config-file', str(config_file), '--model', e1_path, '--state', 'q0',
                         '--affairs', '@bad', '--coalition', 'a1')
    assert code == 0
    assert out == '1/2 (0.50)\n'


@pytest.mark.parametrize('text', ['[Default]\nprecision = four\n', 'precision = 4\n'])
def test_bad_config_file_is_a_usage_error(capsys, tmp_path, e1_path, text):
    config_file = tmp_path / 'custom.conf'
    config_file.write_text(text)
    code, out, err = run(capsys, 'sdr', '--config-file', str(config_file), '--model', e1_path, '--state', 'q0',
                         '--affairs', '@bad', '--coalition', 'a1')
    assert code == 2
    assert out == ''
    assert err.startswith('error: ')
    assert str(config_file) in err


def test_report_at_absorbing_bad_state(capsys, e1_path):
    view = run_json(capsys, 'report', '--model', e1_path, '--state', 'q2', '--affairs', '@bad')
    assert view['minimal_responsible'] == []
    assert [row['coalition'] for row in view['rows']] == ['{a1}', '{a2}', '{a1,a2}']
    for row in view['rows']:
        assert row['sdr'] == 'undefined'
        assert row['fdr']['fraction'] == '0'
        assert row['distance'] == 'inf'


def test_report_csv(capsys, e1_path):
    code, out, err = run(capsys, 'report', '--model', e1_path, '--state', 'q0', '--affairs', '@bad', '--format', 'csv')
    assert code == 0
    assert out == ('coalition,responsible,sdr,fdr,distance\n'
                   '{a1},false,1/2,1/2,1\n'
                   '{a2},false,1/2,1/2,1\n'
                   '"{a1,a2}",true,1,1,0\n')


def test_report_table(capsys, e1_path):
    code, out, err = run(capsys, 'report', '--model', e1_path, '--state', 'q0', '--affairs', '@bad')
    assert code == 0
    assert 'Responsibility report' in out
    assert 'q0 -> (a,b) q1' in out


def test_report_is_byte_deterministic(capsys, e1_path):
    argv = ('report', '--model', e1_path, '--state', 'q0', '--affairs', '@bad', '--format', 'json', '--include-empty')
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    threaded = run(capsys, *(argv + ('--threads', '3')))
    assert first == second == threaded


def test_report_agrees_with_single_queries(capsys, tmp_path):
    path = tmp_path / 'm.json'
    assert run(capsys, 'generate', '--seed', '5', '--agents', '3', '--states', '4', '--density', '0.6',
               '--output', str(path))[0] == 0
    query = ('--model', str(path), '--state', 'q0', '--affairs', '@bad')
    report = run_json(capsys, 'report', *query)
    for row in report['rows']:
        coalition = row['coalition'].strip('{}')
        sdr = run_json(capsys, 'sdr', *(query + ('--coalition', coalition)))
        fdr = run_json(capsys, 'fdr', *(query + ('--coalition', coalition)))
        assert sdr['sdr'] == row['sdr']
        assert fdr['fdr'] == row['fdr']
        assert fdr['distance'] == row['distance']


def test_report_guardrail(capsys, e1_path):
    query = ('report', '--model', e1_path, '--state', 'q0', '--affairs', '@bad', '--max-agents', '1')
    code, out, err = run(capsys, *query)
    assert code == 2
    assert 'use --force' in err
    assert run(capsys, *(query + ('--force',)))[0] == 0


def test_responsible(capsys, e1_path):
    view = run_json(capsys, 'responsible', '--model', e1_path, '--state', 'q1', '--affairs', '@bad')
    assert view['coalitions'] == ['{a1}', '{a2}', '{a1,a2}']
    view = run_json(capsys, 'responsible', '--model', e1_path, '--state', 'q1', '--affairs', '@bad', '--minimal-only')
    assert view['coalitions'] == ['{a1}', '{a2}']


def test_strict(capsys, e1_path):
    query = ('--model', e1_path, '--state', 'q2', '--affairs', '@bad')
    assert run(capsys, 'responsible', *query)[0] == 0
    assert run(capsys, 'responsible', *(query + ('--strict',)))[0] == 1
    assert run(capsys, 'sdr', *(query + ('--coalition', 'a1', '--strict')))[0] == 1
    assert run(capsys, 'fdr', *(query + ('--coalition', 'a1', '--strict')))[0] == 1
    assert run(capsys, 'report', *(query + ('--strict',)))[0] == 1
    assert run(capsys, 'sdr', '--model', e1_path, '--state', 'q0', '--affairs', '@bad', '--coalition', 'a1',
               '--strict')[0] == 0


def test_semantics_switch(capsys, e1_path):
    query = ('sdr', '--model', e1_path, '--state', 'q0', '--affairs', 'q0', '--coalition', '')
    assert run(capsys, *query)[1] == '0 (0.0000)\n'
    assert run(capsys, *(query + ('--semantics', 'include-initial')))[1] == 'undefined\n'


def test_validate(capsys, e1_path):
    code, out, err = run(capsys, 'validate', '--model', e1_path)
    assert code == 0
    assert 'Model OK' in out


def test_validate_broken_model(capsys, broken_path):
    code, out, err = run(capsys, 'validate', '--model', broken_path)
    assert code == 3
    assert 'missing transition at state `q0` for profile (a,a)' in err


def test_missing_model_file(capsys, tmp_path):
    code, out, err = run(capsys, 'validate', '--model', str(tmp_path / 'nope.json'))
    assert code == 3
    assert 'cannot read model file' in err


def test_usage_errors(capsys, e1_path):
    assert run(capsys, 'sdr', '--model', e1_path, '--state', 'q0', '--affairs', '@bad')[0] == 2
    assert run(capsys, 'sdr', '--model', e1_path, '--state', 'q9', '--affairs', '@bad', '--coalition', 'a1')[0] == 2
    assert run(capsys, 'sdr', '--model', e1_path, '--state', 'q0', '--affairs', '@none', '--coalition', 'a1')[0] == 2
    assert run(capsys, 'sdr', '--model', e1_path, '--state', 'q0', '--affairs', '@bad', '--coalition', 'a1,a1')[0] == 2
    assert run(capsys, 'sdr', '--model', e1_path, '--state', 'q0', '--affairs', '@bad', '--coalition', 'a1',
               '--precision', '-1')[0] == 2
    assert run(capsys, 'sdr', '--model', e1_path, '--state', 'q0', '--affairs', '@bad', '--coalition', 'a1',
               '--semantics', 'past')[0] == 2
    assert run(capsys)[0] == 2


def test_version(capsys):
    code, out, err = run(capsys, '--version')
    assert code == 0
    assert APP_VERSION in out


def test_oracle_subcommand(capsys, e1_path):
    view = run_json(capsys, 'oracle', '--model', e1_path, '--state', 'q0', '--affairs', '@bad', '--coalition', 'a1,a2')
    assert view['can_preclude'] is True
    assert view['distance'] == 0
    assert view['strategy'][0] == 'q0 -> a1:a, a2:b'


def test_oracle_budget(capsys, e1_path):
    code, out, err = run(capsys, 'oracle', '--model', e1_path, '--state', 'q0', '--affairs', '@bad',
                         '--coalition', 'a1,a2', '--oracle-budget', '8')
    assert code == 2
    assert 'too large for the oracle' in err


def test_generate_is_reproducible(capsys, tmp_path):
    first = run(capsys, 'generate', '--seed', '42', '--agents', '2', '--states', '3')
    second = run(capsys, 'generate', '--seed', '42', '--agents', '2', '--states', '3')
    assert first == second
    path = tmp_path / 'generated.json'
    path.write_text(first[1])
    assert run(capsys, 'validate', '--model', str(path))[0] == 0


def test_format(capsys, tmp_path, e1_path, e1):
    output = tmp_path / 'canonical.json'
    assert run(capsys, 'format', '--model', e1_path, '--output', str(output))[0] == 0
    assert output.read_bytes() == serialize_model(e1)
    assert validate_model(parse_model(output.read_bytes())) == e1


def test_user_config_file_is_written(capsys, e1_path):
    from respdeg import util
    import os
    run(capsys, 'validate', '--model', e1_path)
    path = util.user_config_file()
    assert os.path.exists(path)
    with open(path, encoding='utf8') as fp:
        assert '[Default]' in fp.read().splitlines()


@pytest.mark.parametrize('option, value', [
    ('--agents', '0'),
    ('--states', '0'),
    ('--actions', '0'),
    ('--max-available', '0'),
    ('--density', '1.5'),
    ('--density', '-0.1'),
])
def test_generate_rejects_degenerate_sizes(capsys, option, value):
    code, out, err = run(capsys, 'generate', '--seed', '1', option, value)
    assert code == 2
    assert out == ''
    assert err.startswith('error: {}'.format(option))


def test_validate_and_report_agree_on_the_model_hash(capsys, e1_path):
    validated = run_json(capsys, 'validate', '--model', e1_path)
    report = run_json(capsys, 'report', '--model', e1_path, '--state', 'q0', '--affairs', '@bad')
    assert validated['sha256'] == report['model']['sha256']
    assert len(validated['sha256']) == 64
