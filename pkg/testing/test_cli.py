import io
import json

import pytest

from sigma7.cli import run, EXIT_OK, EXIT_INPUT, EXIT_DOUBLE, EXIT_VERIFY

def write(tmp_path, name, data):
    file = tmp_path / name
    file.write_text(json.dumps(data))
    return str(file)

@pytest.fixture
def aw3(tmp_path):
    return write(tmp_path, 'aw3.json', {'r':1, 'd':0, 'H':0, 'T':{'torsion':[[3,1]]}, 'wu':[0]})

def test_decompose_text(aw3, tmp_path, capsys):
    assert run(['decompose', '--input', aw3, '--suspensions', '1'])==EXIT_OK
    assert capsys.readouterr().out.strip()=='S^3 v P^5(3) v S^6 v S^8'
    empty = write(tmp_path, 'empty.json', {'r':0, 'd':0, 'H':0, 'T':0, 'wu':[]})
    assert run(['decompose', '--input', empty, '--suspensions', '1'])==EXIT_OK
    assert capsys.readouterr().out.strip()=='S^8'

def test_decompose_json(aw3, capsys):
    assert run(['decompose', '--input', aw3, '--suspensions', '2', '--format', 'json'])==EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out['wedge']=='S^4 v P^6(3) v S^7 v S^9'
    assert out['case']=='p1-trivial' and out['suspensions']==2

def test_needs_double_suspension(tmp_path, capsys):
    file = write(tmp_path, 'ht.json', {'H':3, 'T':3, 'wu':[0,1]})
    assert run(['decompose', '--input', file])==EXIT_DOUBLE
    err = json.loads(capsys.readouterr().err)
    assert err['reason']=='H-and-T-nonzero'
    assert run(['decompose', '--input', file, '--suspensions', '2'])==EXIT_OK
    assert capsys.readouterr().out.strip()=='P^5(3) v C(P^6(3);i.alpha;9) v P^7(3)'

def test_invalid_descriptor(tmp_path, capsys):
    file = write(tmp_path, 'bad.json', {'r':1, 'd':1, 'H':9, 'T':0, 'wu':[0]})
    assert run(['decompose', '--input', file])==EXIT_INPUT
    assert 'error' in capsys.readouterr().err
    assert run(['decompose', '--input', str(tmp_path / 'missing.json')])==EXIT_INPUT

def test_bad_arguments():
    with pytest.raises(SystemExit) as info:
        run(['decompose', '--suspensions', '3', '--input', 'x.json'])
    assert info.value.code==EXIT_INPUT
    with pytest.raises(SystemExit) as info:
        run([])
    assert info.value.code==EXIT_INPUT

def test_stdin(monkeypatch, capsys):
    monkeypatch.setattr('sys.stdin', io.StringIO(json.dumps({'H':9, 'wu':[1]})))
    assert run(['decompose', '--input', '-'])==EXIT_OK
    assert capsys.readouterr().out.strip()=='C(P^4(9);alpha~;8) v P^6(9)'

def test_stage(aw3, capsys):
    assert run(['stage', '--input', aw3, '--level', '3'])==EXIT_OK
    assert capsys.readouterr().out.strip()=='S^3 v P^5(3)'

def test_verify(aw3, capsys):
    assert run(['verify', '--input', aw3])==EXIT_OK
    out = capsys.readouterr().out
    assert out.strip().endswith('pass')
    assert run(['verify', '--input', aw3, '--format', 'json'])==EXIT_OK
    assert json.loads(capsys.readouterr().out)['pass']

def test_reduce_vector(capsys):
    assert run(['reduce-vector', '--entries', '0,1,2,1'])==EXIT_OK
    assert capsys.readouterr().out.strip().split('\n')==['0,1,0,0', 'add 2 -> 3', 'scale 4 by -1', 'add 2 -> 4']
    assert run(['reduce-vector', '--entries', '0,x'])==EXIT_INPUT

def test_tables(capsys):
    assert run(['tables', 'pi', '--moore', '4,3,2', '--degree', '7'])==EXIT_OK
    assert capsys.readouterr().out.split('\n')[0]=='pi_7(P^4(9)) = Z/3 {alpha_tilde}'
    assert run(['tables', 'pi', '--moore', '3,3,1', '--degree', '6'])==EXIT_INPUT
    assert run(['tables', 'smash', '--left', '3,3,1', '--right', '4,3,2'])==EXIT_OK
    assert capsys.readouterr().out.split('\n')[0]=='P^6(3) v P^7(3)'
    assert run(['tables', 'maps', '--source', '5', '--group', '{"torsion": [[3, 2], [5, 1]]}', '--target', 'S^4'])==EXIT_OK
    assert capsys.readouterr().out.split('\n')[0].endswith('= 0')
    assert run(['tables', 'list'])==EXIT_OK

def test_corpus(capsys):
    assert run(['corpus', 'run'])==EXIT_OK
    assert 'golden cases pass' in capsys.readouterr().out
    assert run(['corpus', 'list'])==EXIT_OK

def test_corpus_mismatch(tmp_path, capsys):
    file = write(tmp_path, 'corpus.json', [{'name':'wrong', 'descriptor':{}, 'expected':{'1':'S^9'}}])
    assert run(['corpus', 'run', '--file', file])==EXIT_VERIFY
    assert 'FAIL wrong' in capsys.readouterr().out

def test_fuzz(capsys):
    assert run(['fuzz', '--budget', '5', '--seed', '0', '--verbose', '0'])==EXIT_OK
    assert capsys.readouterr().out==''

@pytest.mark.parametrize('content', ['{"wu": null}', '{"T": 3.5}', '{"H": -3}', '{"r": null}', '{"d": "1"}',
                                     '{"T": {"torsion": [3]}}', '{"T": 3, "wu": [0.5]}', '[1, 2]', '"aw3"', '{'])
def test_malformed_descriptor_files(tmp_path, capsys, content):
    file = tmp_path / 'bad.json'
    file.write_text(content)
    assert run(['decompose', '--input', str(file)])==EXIT_INPUT
    err = capsys.readouterr().err
    assert err.startswith('sigma7: error:')
    assert 'Traceback' not in err

@pytest.mark.parametrize('data', [{'name':'x'}, [{'name':'x'}], [{'name':'x', 'descriptor':{}, 'expected':{'3':'S^8'}}],
                                  [{'name':'x', 'descriptor':{}, 'expected':{'1':'S^8 v S^3'}}],
                                  [{'name':'x', 'descriptor':{}, 'expected':'S^8'}],
                                  [{'name':'x', 'descriptor':{'wu': None}, 'expected':{'1':'S^8'}}]])
def test_malformed_corpus_files(tmp_path, capsys, data):
    file = write(tmp_path, 'corpus.json', data)
    assert run(['corpus', 'run', '--file', file])==EXIT_INPUT
    assert capsys.readouterr().err.startswith('sigma7: error:')

def test_repeated_runs_are_identical(aw3, tmp_path, capsys):
    general = write(tmp_path, 'general.json', {'r':1, 'd':1, 'H':{'torsion':[[3,1],[5,1]]}, 'T':{'torsion':[[3,2]]},
                                              'wu':[0,2,1]})
    for argv in (['decompose', '--input', general, '--suspensions', '2', '--format', 'json'],
                 ['verify', '--input', aw3],
                 ['reduce-vector', '--entries', '2,1,0,2,1']):
        outputs = []
        for _ in range(3):
            assert run(argv)==EXIT_OK
            outputs.append(capsys.readouterr().out.encode())
        assert outputs[0]==outputs[1]==outputs[2]

def test_tables_sphere(capsys):
    assert run(['tables', 'sphere', '--n', '4', '--degree', '7'])==EXIT_OK
    assert capsys.readouterr().out.split('\n')[0]=='pi_7(S^4) = Z + Z/3 {alpha}'
    assert run(['tables', 'sphere', '--n', '3', '--degree', '9'])==EXIT_INPUT

def test_stage_json(aw3, capsys):
    assert run(['stage', '--input', aw3, '--level', '5', '--format', 'json'])==EXIT_OK
    assert json.loads(capsys.readouterr().out)==[{'kind':'sphere', 'n':3}, {'kind':'moore', 'n':5, 'p':3, 'e':1},
                                                 {'kind':'sphere', 'n':6}]

def test_suspend(capsys):
    assert run(['suspend', '--wedge', 'S^3 v M(1,9)'])==EXIT_OK
    assert capsys.readouterr().out.strip()=='S^4 v C(P^5(9);i.alpha;8)'
    assert run(['suspend', '--wedge', 'M(3,3)', '--times', '2', '--format', 'json'])==EXIT_OK
    assert json.loads(capsys.readouterr().out)==[{'kind':'moore', 'n':6, 'p':3, 'e':1}, {'kind':'sphere', 'n':9}]
    assert run(['suspend', '--wedge', 'Q^3'])==EXIT_INPUT
