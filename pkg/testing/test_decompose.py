import pytest

from sigma7.abelian import AbelianGroup
from sigma7.checker import expected_homology, rigidity_equal
from sigma7.corpus import load_corpus
from sigma7.decompose import stage, chang_split, suspend_bundle, decompose_sigma, decompose_sigma2, decompose, \
        P1_TRIVIAL, RADIUS_NEGATIVE, RADIUS_ZERO, RADIUS_POSITIVE, H2_TORSION_FREE, H3_TORSION_FREE, GENERAL, \
        case_of_kind, suspend_through_bundles
from sigma7.exceptions import BadRange, NeedsDoubleSuspension, UnsuspendableAtom
from sigma7.invariants import ManifoldDescriptor, summand_list, p1_index, P1_VANISHES, bundle_descriptor, \
        random_descriptor, random_descriptor_pair
from sigma7.wedge import WedgeExpr, Sphere, Bundle, parse_wedge, reduced_homology, suspend

Z = AbelianGroup.free
C = AbelianGroup.cyclic

def W(text):
    return parse_wedge(text)

def test_stage_examples():
    assert stage(ManifoldDescriptor(r=1, T=C(3), wu=[0]), 3)==W('S^3 v P^5(3)')
    assert stage(ManifoldDescriptor(), 5).is_empty
    assert stage(ManifoldDescriptor(r=1, d=1, H=C(3), wu=[0,0]), 5)==W('S^3 v S^4 v S^5 v S^6 v P^4(3) v P^6(3)')
    with pytest.raises(ValueError):
        stage(ManifoldDescriptor(), 6)

def test_chang_split_examples():
    assert chang_split({3: Z(1), 4: C(3)}, 3)==W('S^3 v P^5(3)')
    assert chang_split({}, 3).is_empty
    assert chang_split({5: Z(2)}, 5)==W('S^5 v S^5')
    with pytest.raises(BadRange):
        chang_split({3: Z(1)}, 2)
    with pytest.raises(BadRange):
        chang_split({7: Z(1)}, 3)
    with pytest.raises(BadRange):
        chang_split({5: C(3)}, 3)

def test_suspend_bundle_examples():
    assert suspend_bundle(3, 2)==W('P^5(9) v S^8')
    assert suspend_bundle(1, 1).render()=='C(P^5(3);i.alpha;8)'
    assert suspend_bundle(0, 1)==W('P^5(3) v S^8')
    with pytest.raises(ValueError):
        suspend_bundle(1, 0)

@pytest.mark.parametrize('rho', range(-4, 5))
@pytest.mark.parametrize('nu', [1, 2, 3])
def test_bundle_consistency(rho, nu):
    assert decompose_sigma(bundle_descriptor(rho, nu)).wedge==suspend_bundle(rho, nu)

@pytest.mark.parametrize('rho', [-2, 0, 1, 3])
@pytest.mark.parametrize('times', [1, 2, 3])
def test_suspend_through_bundles(rho, times):
    w = WedgeExpr([Bundle(rho, 2), Sphere(3)])
    with pytest.raises(UnsuspendableAtom):
        suspend(w, times)
    bundle = suspend_bundle(rho, 2)
    expected = (bundle if times==1 else suspend(bundle, times-1)) + [Sphere(3+times)]
    assert suspend_through_bundles(w, times)==expected

def test_suspend_through_bundles_examples():
    assert suspend_through_bundles(W('S^3 v M(2,9)')).render()=='S^4 v C(P^5(9);i.alpha;8)'
    assert suspend_through_bundles(W('M(3,3)'), 2)==W('P^6(3) v S^9')
    assert suspend_through_bundles(W('S^3 v P^4(5)'), 2)==suspend(W('S^3 v P^4(5)'), 2)
    with pytest.raises(ValueError):
        suspend_through_bundles(W('M(1,3)'), 0)

def test_decompose_sigma_examples():
    res = decompose_sigma(ManifoldDescriptor(r=1, T=C(9), wu=[0]))
    assert res.render()=='S^3 v P^5(9) v S^6 v S^8'
    assert res.case_label==P1_TRIVIAL and res.family==H2_TORSION_FREE and res.p1_index is None

    res = decompose_sigma(ManifoldDescriptor(r=1, T=AbelianGroup(0, [(3,2),(5,1)]), wu=[1]))
    assert res.render()=='S^3 v P^5(5) v C(P^5(9);i.alpha;8) v S^6'
    assert res.case_label==RADIUS_POSITIVE and res.p1_index==1

    assert decompose_sigma(ManifoldDescriptor()).render()=='S^8'

    res = decompose_sigma(ManifoldDescriptor(d=1, H=C(3), wu=[0,1]))
    assert res.wedge==W('S^5 v P^4(3) v P^6(3) v C(S^4;alpha;8)')
    assert res.case_label==RADIUS_ZERO and res.family==H3_TORSION_FREE and res.p1_index==2

    res = decompose_sigma(ManifoldDescriptor(H=C(9), wu=[1]))
    assert res.wedge==W('P^6(9) v C(P^4(9);alpha~;8)')
    assert res.case_label==RADIUS_NEGATIVE

def test_single_suspension_gate():
    desc = ManifoldDescriptor(H=C(3), T=C(3), wu=[0,1])
    with pytest.raises(NeedsDoubleSuspension) as info:
        decompose_sigma(desc)
    assert info.value.reason=='H-and-T-nonzero'
    assert decompose_sigma2(desc).family==GENERAL
    with pytest.raises(ValueError):
        decompose(desc, 3)

def test_decompose_sigma2_examples():
    res = decompose_sigma2(ManifoldDescriptor(r=1, d=1, H=C(3), T=C(9), wu=[0,0,0]))
    assert res.wedge==W('S^4 v S^7 v S^5 v S^6 v P^5(3) v P^6(9) v P^7(3) v S^9')
    assert res.render()=='S^4 v P^5(3) v S^5 v P^6(9) v S^6 v P^7(3) v S^7 v S^9'
    assert decompose_sigma2(ManifoldDescriptor(H=C(9), T=C(3), wu=[1,0])).wedge==\
            W('P^6(3) v P^7(9) v C(P^5(9);alpha~;9)')
    assert decompose_sigma2(ManifoldDescriptor(H=C(3), T=C(3), wu=[0,1])).wedge==\
            W('P^5(3) v P^7(3) v C(P^6(3);i.alpha;9)')

def test_result_to_dict():
    res = decompose(ManifoldDescriptor(r=1, T=C(3), wu=[2]), 1)
    out = res.to_dict()
    assert out['wedge']=='S^3 v C(P^5(3);i.alpha;8) v S^6'
    assert out['case']==RADIUS_POSITIVE and out['p1_index']==1
    assert out['witness']==['scale 1 by -1']
    assert len(out['trace'])>0

@pytest.mark.parametrize('entry', load_corpus(), ids=lambda e: e.name)
def test_golden_corpus(entry):
    for k, expected, got, ok in entry.run():
        assert got==expected, f'{entry.name} [{k}]'

def test_random_descriptors():
    for i in range(500):
        desc = random_descriptor(seed=i)
        sigma2 = decompose_sigma2(desc)
        assert reduced_homology(sigma2.wedge)==expected_homology(desc, 2)
        if desc.H.is_trivial or desc.T.is_trivial:
            sigma = decompose_sigma(desc)
            assert reduced_homology(sigma.wedge)==expected_homology(desc, 1)
            assert suspend(sigma.wedge, 1)==sigma2.wedge
            assert sigma.case_label==sigma2.case_label
        t = p1_index(desc)
        if t==P1_VANISHES:
            assert sigma2.case_label==P1_TRIVIAL
        else:
            assert sigma2.p1_index==t
            assert sigma2.case_label==case_of_kind[summand_list(desc)[t-1].kind]
        shape = expected_homology(desc, 1)
        for level in (3, 4, 5):
            assert reduced_homology(stage(desc, level))=={j:g for j,g in shape.items() if j<=level+1}

@pytest.mark.parametrize('suspensions', [1, 2])
def test_rigidity_matches_decompositions(suspensions):
    for i in range(200):
        a, b = random_descriptor_pair(seed=i, single_suspension=(suspensions==1))
        same = decompose(a, suspensions).wedge==decompose(b, suspensions).wedge
        assert rigidity_equal(a, b, suspensions)==same, (a, b)

def test_rigidity_examples():
    a = ManifoldDescriptor(r=1, T=C(3), wu=[1])
    assert rigidity_equal(a, ManifoldDescriptor(r=1, T=C(3), wu=[2]))
    assert rigidity_equal(a, a)
    b = ManifoldDescriptor(H=C(3), T=C(9), wu=[1,0])
    c = ManifoldDescriptor(H=C(3), T=C(9), wu=[0,1])
    assert not rigidity_equal(b, c, 2)
    with pytest.raises(NeedsDoubleSuspension):
        rigidity_equal(b, c, 1)
    assert isinstance(decompose_sigma(a).wedge, WedgeExpr)
