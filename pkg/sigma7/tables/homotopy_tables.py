'''Closed tables of low-dimensional homotopy groups away from 2.

Only pairs (space, degree) listed here are answered; anything else raises
``OutOfTable``. Every answer carries the citation text it rests on.
'''
from sympy import isprime

from sigma7.abelian import AbelianGroup, localize_away_from_2
from sigma7.exceptions import OutOfTable
from sigma7.wedge import Sphere, Moore, WedgeExpr, ALPHA, ALPHA_TILDE, IOTA_ALPHA

HUREWICZ = 'hurewicz'

citations = dict(
    hurewicz = 'Hurewicz: P^n(p^r) is (n-2)-connected, pi_{n-1} = H_{n-1} = Z/p^r',
    moore_n = 'pi_n(P^n(p^r)) = 0 away from 2 for n >= 4 (mod p^r Moore space homotopy in the first stable degrees)',
    moore_n1 = 'pi_{n+1}(P^n(p^r)) = 0 away from 2 for n >= 4 (mod p^r Moore space homotopy in the first stable degrees)',
    moore_n2 = 'pi_{n+2}(P^n(p^r)) = 0 for p >= 5 and Z/3{i o Sigma^{n-4} alpha} for p = 3, n >= 6 '
               '(cofibre sequence of the bottom cell in the stable range)',
    moore_47 = 'pi_7(P^4(p^r)) = 0 for p >= 5 and Z/3{alpha~} for p = 3, alpha~ pinching onto Sigma alpha '
               '(fibre of the pinch map and the Hilton-Milnor theorem)',
    moore_58 = 'pi_8(P^5(p^r)) = 0 for p >= 5 and Z/3{Sigma alpha~} for p = 3, generated by the top cell '
               '(double loop space of the pinch fibration)',
    moore_46 = 'pi_6(P^4(3^r)) = Z/3{i o alpha} + Z/3^r{theta}, theta killed by suspension',
    sphere_n = 'pi_n(S^n) = Z',
    sphere_low = 'pi_{n+1}(S^n) and pi_{n+2}(S^n) are 2-groups for n >= 3, trivial away from 2',
    sphere_n3 = 'pi_{n+3}(S^n) localized away from 2 is Z/3{alpha} for n = 3 and n >= 5; pi_7(S^4) = Z{nu_4} + Z/3{Sigma alpha} '
                '(Toda), alpha detected by the reduced power P^1',
    sphere_37 = 'pi_7(S^3) = Z/2 (Toda), trivial away from 2',
    smash_same = 'P^m(p^r) ^ P^n(p^s) = P^{m+n}(p^min(r,s)) v P^{m+n-1}(p^min(r,s)) away from 2',
    smash_distinct = 'P^m(p^r) ^ P^n(q^s) is contractible for distinct primes p, q',
    uct = 'universal coefficient sequence 0 -> pi_n(X) (x) A -> [P^n(A), X] -> Tor(pi_{n-1}(X), A) -> 0',
    null_on_homology = 'a map P^n(A) -> P^n(p^r), n >= 4, inducing zero on homology is null-homotopic away from 2',
    )

class HomotopyGroupEntry(object):
    '''One table entry: pi_degree(space) = group, with its generator label and citation.

    Parameters
    ----------
    space : Atom
    degree : int
    group : AbelianGroup
    generator_tag : str or None
        ``alpha``, ``alpha_tilde``, ``iota_alpha`` for the 3-primary stable classes used by the
        cone atoms, ``hurewicz`` for the bottom homology class, ``None`` otherwise
    citation : str
    '''
    def __init__(self, space, degree, group, generator_tag=None, citation=''):
        self.space = space
        self.degree = degree
        self.group = group
        self.generator_tag = generator_tag
        self.citation = citation

    @property
    def is_trivial(self):
        return self.group.is_trivial

    def __eq__(self, other):
        return isinstance(other, HomotopyGroupEntry) and (self.space, self.degree, self.group, self.generator_tag)==\
                (other.space, other.degree, other.group, other.generator_tag)

    def __repr__(self):
        tag = '' if self.generator_tag is None else f' {{{self.generator_tag}}}'
        return f'pi_{self.degree}({self.space}) = {self.group}{tag}'

def _check_moore(n, p, e):
    if n<3 or p==2 or not isprime(p) or e<1:
        raise ValueError(f'P^{n}({p}^{e}) is not a nontrivial odd Moore space of dimension >= 3')

def pi_moore(n, p, e, k):
    '''pi_k(P^n(p^e)) away from 2, for the pairs the table covers.

    Covered: k = n-1 (any n >= 3); k = n, n+1 (n >= 4); k = n+2 (n >= 6);
    (n, k) = (4, 6) for p = 3; (n, k) = (4, 7) and (5, 8).

    Raises
    ------
    OutOfTable
        for every other (n, k), e.g. pi_6(P^3(3^r)) which is not known here
    '''
    _check_moore(n, p, e)
    space = Moore(n, p, e)
    Z3 = AbelianGroup(0, [(3,1)])
    if k==n-1:
        return HomotopyGroupEntry(space, k, AbelianGroup(0, [(p,e)]), HUREWICZ, citations['hurewicz'])
    if k==n and n>=4:
        return HomotopyGroupEntry(space, k, AbelianGroup.trivial(), None, citations['moore_n'])
    if k==n+1 and n>=4:
        return HomotopyGroupEntry(space, k, AbelianGroup.trivial(), None, citations['moore_n1'])
    if k==n+2 and n>=6:
        if p==3:
            return HomotopyGroupEntry(space, k, Z3, IOTA_ALPHA, citations['moore_n2'])
        return HomotopyGroupEntry(space, k, AbelianGroup.trivial(), None, citations['moore_n2'])
    if (n,k)==(4,6) and p==3:
        return HomotopyGroupEntry(space, k, AbelianGroup(0, [(3,1),(3,e)]), IOTA_ALPHA, citations['moore_46'])
    if (n,k) in [(4,7),(5,8)]:
        cite = citations['moore_47'] if n==4 else citations['moore_58']
        if p==3:
            return HomotopyGroupEntry(space, k, Z3, ALPHA_TILDE, cite)
        return HomotopyGroupEntry(space, k, AbelianGroup.trivial(), None, cite)
    raise OutOfTable(f'pi_{k}(P^{n}({p**e})) is not in the table')

def pi_sphere(n, k):
    '''pi_k(S^n) away from 2 for n >= 3 and n <= k <= n+3, plus pi_7(S^3).'''
    if n<3:
        raise ValueError(f'spheres of dimension >= 3 only, got S^{n}')
    space = Sphere(n)
    if k==n:
        return HomotopyGroupEntry(space, k, AbelianGroup.free(1), None, citations['sphere_n'])
    if k in (n+1, n+2):
        return HomotopyGroupEntry(space, k, AbelianGroup.trivial(), None, citations['sphere_low'])
    if k==n+3:
        group = AbelianGroup(1 if n==4 else 0, [(3,1)])
        return HomotopyGroupEntry(space, k, group, ALPHA, citations['sphere_n3'])
    if (n,k)==(3,7):
        return HomotopyGroupEntry(space, k, AbelianGroup.trivial(), None, citations['sphere_37'])
    raise OutOfTable(f'pi_{k}(S^{n}) is not in the table')

def pi_atom(space, k):
    if isinstance(space, Sphere):
        return pi_sphere(space.n, k)
    if isinstance(space, Moore) and not space.is_trivial:
        return pi_moore(space.n, space.p, space.e, k)
    raise OutOfTable(f'no homotopy table for {space}')

def smash_moore(m, p, r, n, q, s):
    '''P^m(p^r) ^ P^n(q^s) as a wedge; exponents 0 mean a contractible factor.'''
    if m<3 or n<3:
        raise ValueError(f'Moore spaces of dimension >= 3 only, got P^{m} and P^{n}')
    if p!=q:
        return WedgeExpr()
    e = min(r, s)
    return WedgeExpr([Moore(m+n, p, e), Moore(m+n-1, p, e)])

def smash_citation(p, q):
    return citations['smash_same'] if p==q else citations['smash_distinct']

class HomotopySetResult(object):
    '''[P^n(A), X] away from 2.

    ``group`` is the exact group when one end of the universal coefficient sequence
    vanishes, otherwise ``None`` with only ``order`` known.
    ``certificate_null_on_homology`` is set when maps trivial on homology are null.
    '''
    def __init__(self, n, A, target, group, order, certificate_null_on_homology, citations):
        self.n = n
        self.A = A
        self.target = target
        self.group = group
        self.order = order
        self.certificate_null_on_homology = certificate_null_on_homology
        self.citations = citations

    @property
    def is_trivial(self):
        return self.group is not None and self.group.is_trivial

    @property
    def exact(self):
        return self.group is not None

    def __repr__(self):
        group = self.group if self.exact else f'<extension of order {self.order}>'
        return f'[P^{self.n}({self.A}), {self.target}] = {group}'

def _pi_or_connected(target, k):
    if k<target.bottom_dim: #below the bottom cell
        return HomotopyGroupEntry(target, k, AbelianGroup.trivial())
    return pi_atom(target, k)

def maps_from_moore(n, A, target):
    '''Homotopy classes [P^n(A), target] for a torsion group A via the universal coefficient sequence.

    Parameters
    ----------
    n : int
        dimension of the source Moore space, H_{n-1}(P^n(A)) = A
    A : AbelianGroup or raw group data
    target : Sphere or Moore

    Raises
    ------
    OutOfTable
        when pi_n or pi_{n-1} of the target is not tabulated
    '''
    A = localize_away_from_2(A)
    if not A.is_torsion:
        raise ValueError(f'source group must be torsion, got {A}')
    top, bottom = _pi_or_connected(target, n), _pi_or_connected(target, n-1)
    left = top.group.tensor(A)
    right = bottom.group.tor(A)
    cites = [citations['uct']] + [e.citation for e in (top, bottom) if e.citation]
    if left.is_trivial:
        group = right
    elif right.is_trivial:
        group = left
    else:
        group = None
    order = left.order*right.order if left.is_torsion and right.is_torsion else None
    certificate = isinstance(target, Moore) and target.n==n and n>=4
    if certificate:
        cites.append(citations['null_on_homology'])
    return HomotopySetResult(n, A, target, group, order, certificate, cites)

def table_entries():
    '''The declared table shape as (pattern, citation) pairs.'''
    return [
        ('pi_{n-1}(P^n(p^r)), n >= 3', citations['hurewicz']),
        ('pi_n(P^n(p^r)), n >= 4', citations['moore_n']),
        ('pi_{n+1}(P^n(p^r)), n >= 4', citations['moore_n1']),
        ('pi_{n+2}(P^n(p^r)), n >= 6', citations['moore_n2']),
        ('pi_6(P^4(3^r))', citations['moore_46']),
        ('pi_7(P^4(p^r))', citations['moore_47']),
        ('pi_8(P^5(p^r))', citations['moore_58']),
        ('pi_n(S^n), n >= 3', citations['sphere_n']),
        ('pi_{n+1}(S^n), pi_{n+2}(S^n), n >= 3', citations['sphere_low']),
        ('pi_{n+3}(S^n), n >= 3', citations['sphere_n3']),
        ('pi_7(S^3)', citations['sphere_37']),
        ]
