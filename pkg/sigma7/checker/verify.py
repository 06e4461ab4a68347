from itertools import combinations
from math import gcd

import numpy as np
from sympy import Matrix
from tqdm.auto import tqdm

from sigma7.abelian import AbelianGroup, IntegerMatrix, homology_from_boundaries
from sigma7.decompose import decompose, decompose_sigma, decompose_sigma2
from sigma7.exceptions import NeedsDoubleSuspension
from sigma7.invariants import random_descriptor, p1_radius
from sigma7.reduce import ReductionVector, add_forward, scale
from sigma7.wedge import reduced_homology, suspend

class VerificationReport(object):
    '''Degree by degree comparison of expected and computed homology.

    ``passed`` holds iff every row matches; ``trace`` echoes the citations of the result.'''
    def __init__(self, rows, trace=()):
        self.rows = rows
        self.trace = list(trace)

    @property
    def passed(self):
        return all(ok for _,_,_,ok in self.rows)

    @property
    def failed_degrees(self):
        return [k for k,_,_,ok in self.rows if not ok]

    def table(self):
        lines = [f'{"degree":>6}  {"expected":<24}{"computed":<24}']
        for k, expected, computed, ok in self.rows:
            lines.append(f'{k:>6}  {str(expected):<24}{str(computed):<24}{"ok" if ok else "MISMATCH"}')
        lines.append('pass' if self.passed else 'FAIL')
        return '\n'.join(lines)

    def __repr__(self):
        return f'VerificationReport(passed={self.passed}, failed_degrees={self.failed_degrees})'

def expected_homology(desc, suspensions):
    '''Reduced homology of Σ^k M straight from (r, d, H, T).'''
    Z = AbelianGroup.free
    shape = {2: Z(desc.r) + desc.H, 3: Z(desc.d) + desc.T, 4: Z(desc.d) + desc.H, 5: Z(desc.r), 7: Z(1)}
    return {k+suspensions: g for k,g in shape.items() if not g.is_trivial}

def verify_homology(desc, result):
    expected = expected_homology(desc, result.suspensions)
    computed = reduced_homology(result.wedge)
    trivial = AbelianGroup.trivial()
    rows = []
    for k in sorted(set(expected) | set(computed)):
        e, c = expected.get(k, trivial), computed.get(k, trivial)
        rows.append((k, e, c, e==c))
    return VerificationReport(rows, result.trace)

def verify(desc, suspensions=1):
    return verify_homology(desc, decompose(desc, suspensions))

def rigidity_key(desc):
    return (desc.r, desc.d, desc.H, desc.T, desc.p1_vanishes, p1_radius(desc))

def rigidity_equal(a, b, suspensions=1):
    '''True iff a and b agree on homology, on p1 = 0 mod 3 and on the p1-radius.'''
    if suspensions==1:
        for desc in (a, b):
            if not desc.H.is_trivial and not desc.T.is_trivial:
                raise NeedsDoubleSuspension(f'{desc} is outside the single suspension range')
    return rigidity_key(a)==rigidity_key(b)

### brute force oracles ###

def _moves(v):
    n = len(v)
    for a in range(1, n+1):
        yield scale(v, a, -1)
        for b in range(a+1, n+1):
            yield add_forward(v, a, b)

def reachable_vectors(v):
    '''All vectors reachable from v by legal moves (breadth-first search).'''
    seen = {v.entries: v}
    frontier = [v]
    while frontier:
        new = []
        for w in frontier:
            for u in _moves(w):
                if u.entries not in seen:
                    seen[u.entries] = u
                    new.append(u)
        frontier = new
    return list(seen.values())

def oracle_canonical(v):
    '''Lexicographically smallest vector reachable from v.'''
    return ReductionVector(min(u.entries for u in reachable_vectors(v)))

def minors_gcd(m, k):
    '''gcd of all k x k minors of an integer matrix (0 if they all vanish).'''
    M = Matrix(m.to_list() if isinstance(m, IntegerMatrix) else m)
    out = 0
    for rows in combinations(range(M.rows), k):
        for cols in combinations(range(M.cols), k):
            out = gcd(out, int(M.extract(list(rows), list(cols)).det(method='bareiss')))
    return out

def moore_chain_complex(n, p, e):
    '''Reduced cellular chains of P^n(p^e): Z in degrees n-1, n with boundary p^e.'''
    return {n-1: 1, n: 1}, {n: IntegerMatrix([[p**e]])}

def tensor_chain_complexes(C, D):
    '''Tensor product of two finite free chain complexes given as (ranks, boundaries).'''
    (cr, cd), (dr, dd) = C, D
    blocks = {}
    for i, a in cr.items():
        for j, b in dr.items():
            blocks.setdefault(i+j, []).append((i, j))
    def offsets(k):
        out, at = {}, 0
        for i,j in sorted(blocks.get(k, [])):
            out[(i,j)] = at
            at += cr[i]*dr[j]
        return out, at
    ranks = {k: offsets(k)[1] for k in blocks}
    boundaries = {}
    for k in blocks:
        cols, ncol = offsets(k)
        rows, nrow = offsets(k-1)
        if nrow==0:
            continue
        d = np.zeros((nrow, ncol), dtype=object)
        for (i,j), c0 in cols.items():
            w = cr[i]*dr[j]
            if i in cd and (i-1,j) in rows:
                r0 = rows[(i-1,j)]
                d[r0:r0+cr[i-1]*dr[j], c0:c0+w] = np.kron(cd[i].entries, np.eye(dr[j], dtype=int).astype(object))
            if j in dd and (i,j-1) in rows:
                r0 = rows[(i,j-1)]
                d[r0:r0+cr[i]*dr[j-1], c0:c0+w] = (-1)**i*np.kron(np.eye(cr[i], dtype=int).astype(object), dd[j].entries)
        boundaries[k] = IntegerMatrix(d, rows=nrow, cols=ncol)
    return ranks, boundaries

def kunneth_smash_homology(m, p, r, n, q, s):
    '''Reduced homology of P^m(p^r) ^ P^n(q^s) from the tensored cellular chain complexes.'''
    ranks, boundaries = tensor_chain_complexes(moore_chain_complex(m, p, r), moore_chain_complex(n, q, s))
    return homology_from_boundaries(ranks, boundaries)

### batches ###

def fuzz_verify(budget=500, seed=None, verbose=1, **kwargs):
    '''Decompose ``budget`` random descriptors and check homology and suspension compatibility.

    Returns
    -------
    dict with ``checked`` (number of decompositions verified) and ``failures`` (list of (descriptor, reason))
    '''
    rng = np.random.RandomState(seed)
    failures, checked = [], 0
    for _ in (tqdm(range(budget)) if verbose>0 else range(budget)):
        desc = random_descriptor(rng, **kwargs)
        sigma2 = decompose_sigma2(desc)
        checked += 1
        if not verify_homology(desc, sigma2).passed:
            failures.append((desc, 'homology-sigma2'))
        if desc.H.is_trivial or desc.T.is_trivial:
            sigma = decompose_sigma(desc)
            checked += 1
            if not verify_homology(desc, sigma).passed:
                failures.append((desc, 'homology-sigma'))
            if suspend(sigma.wedge, 1)!=sigma2.wedge:
                failures.append((desc, 'suspension-compatibility'))
        if verbose>1:
            print(desc, '->', sigma2.render())
    if verbose>0:
        print(f'checked {checked} decompositions, {len(failures)} failures')
    return dict(checked=checked, failures=failures)
