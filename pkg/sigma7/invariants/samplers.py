import numpy as np

from sigma7.abelian import AbelianGroup
from sigma7.invariants.descriptor import ManifoldDescriptor

def _rng(seed):
    if isinstance(seed, int) or seed is None:
        rng = np.random.RandomState(seed)
    else:
        rng = seed
    assert isinstance(rng, np.random.mtrand.RandomState)
    return rng

def random_group(seed=None, max_factors=4, primes=(3,5,7), max_exp=3):
    rng = _rng(seed)
    n = rng.randint(0, max_factors+1)
    return AbelianGroup(0, [(int(rng.choice(primes)), int(rng.randint(1, max_exp+1))) for _ in range(n)])

def random_descriptor(seed=None, max_rank=4, max_factors=4, primes=(3,5,7), max_exp=3, p_wu_zero=0.25, single_suspension=False):
    '''A random valid descriptor.

    Parameters
    ----------
    seed : int, None or RandomState
        the random seed used for the generation
    max_rank : int
        r and d are drawn from 0..max_rank
    max_factors : int
        H and T each get 0..max_factors cyclic factors
    primes : tuple of int
        odd primes the cyclic factors are drawn from
    max_exp : int
        exponents are drawn from 1..max_exp
    p_wu_zero : float
        probability of forcing wu = 0 (the p1 = 0 mod 3 case)
    single_suspension : bool
        if True one of H, T is set to zero so the single suspension theorems apply
    '''
    rng = _rng(seed)
    r, d = rng.randint(0, max_rank+1), rng.randint(0, max_rank+1)
    H = random_group(rng, max_factors, primes, max_exp)
    T = random_group(rng, max_factors, primes, max_exp)
    if single_suspension:
        if rng.rand()<0.5:
            H = AbelianGroup.trivial()
        else:
            T = AbelianGroup.trivial()
    n = H.count(3) + d + T.count(3)
    wu = [0]*n if rng.rand()<p_wu_zero else [int(x) for x in rng.randint(0, 3, size=n)]
    return ManifoldDescriptor(r=r, d=d, H=H, T=T, wu=wu)

def random_descriptor_pair(seed=None, single_suspension=False, **kwargs):
    '''Two descriptors that often agree on homology, so rigidity comparisons are not trivially false.'''
    rng = _rng(seed)
    a = random_descriptor(rng, single_suspension=single_suspension, **kwargs)
    if rng.rand()<0.5:
        return a, random_descriptor(rng, single_suspension=single_suspension, **kwargs)
    wu = [int(x) for x in rng.randint(0, 3, size=len(a.wu))] if rng.rand()<0.8 else [0]*len(a.wu)
    return a, ManifoldDescriptor(r=a.r, d=a.d, H=a.H, T=a.T, wu=wu)
