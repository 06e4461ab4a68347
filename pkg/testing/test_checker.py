from sigma7.abelian import AbelianGroup
from sigma7.checker import verify_homology, verify, expected_homology, rigidity_key, fuzz_verify, VerificationReport
from sigma7.decompose import decompose_sigma, DecompositionResult
from sigma7.invariants import ManifoldDescriptor, aloff_wallach
from sigma7.wedge import parse_wedge

Z = AbelianGroup.free
C = AbelianGroup.cyclic

def test_verify_aloff_wallach():
    desc = aloff_wallach(3)
    report = verify_homology(desc, decompose_sigma(desc))
    assert report.passed
    assert {k: c for k,_,c,_ in report.rows}=={3: Z(1), 4: C(3), 6: Z(1), 8: Z(1)}
    assert report.trace==decompose_sigma(desc).trace

def test_tampered_wedge_fails_at_top():
    desc = aloff_wallach(3)
    tampered = DecompositionResult(1, parse_wedge('S^3 v P^5(3) v S^6'), 'p1-trivial', 'h2-torsion-free')
    report = verify_homology(desc, tampered)
    assert not report.passed
    assert report.failed_degrees==[8]
    assert 'MISMATCH' in report.table()
    assert report.table().endswith('FAIL')

def test_empty_descriptor():
    desc = ManifoldDescriptor()
    assert verify(desc, 1).passed
    assert expected_homology(desc, 1)=={8: Z(1)}
    assert verify(desc, 2).rows==[(9, Z(1), Z(1), True)]

def test_expected_homology_shape():
    desc = ManifoldDescriptor(r=2, d=1, H=C(5), T=C(9), wu=[0,0])
    assert expected_homology(desc, 2)=={4: Z(2)+C(5), 5: Z(1)+C(9), 6: Z(1)+C(5), 7: Z(2), 9: Z(1)}

def test_rigidity_key_ignores_wu_units():
    a = ManifoldDescriptor(d=2, wu=[0,1])
    b = ManifoldDescriptor(d=2, wu=[0,2])
    c = ManifoldDescriptor(d=2, wu=[1,1])
    assert rigidity_key(a)==rigidity_key(b)
    assert rigidity_key(a)==rigidity_key(c)
    assert rigidity_key(a)!=rigidity_key(ManifoldDescriptor(d=2, wu=[0,0]))

def test_fuzz_verify():
    summary = fuzz_verify(budget=50, seed=0, verbose=0)
    assert summary['failures']==[]
    assert summary['checked']>=50
    single = fuzz_verify(budget=20, seed=1, verbose=0, single_suspension=True)
    assert single['failures']==[] and single['checked']==40

def test_report_table_layout():
    report = VerificationReport([(3, Z(1), Z(1), True)])
    lines = report.table().split('\n')
    assert lines[0].split()==['degree', 'expected', 'computed']
    assert lines[1].split()==['3', 'Z', 'Z', 'ok']
    assert lines[-1]=='pass'
