import json
from fractions import Fraction
from functools import total_ordering

from sigma7.abelian import AbelianGroup, localize_away_from_2, primary_part, as_integer
from sigma7.exceptions import MalformedInput, WuLengthMismatch, NegativeRank

H_PART, FREE_PART, T_PART = 'H', 'free', 'T'

@total_ordering
class Radius(object):
    '''Exact radius of a mod 3 degree 3 class: Neg(μ) = -1/μ, Zero = 0 or Pos(ν) = +1/ν.

    Radii are compared by their rational value, so -1 < -1/2 < ... < 0 < ... < 1/2 < 1.
    '''
    def __init__(self, kind, exponent=0):
        assert kind in ('neg', 'zero', 'pos'), f'unknown radius kind {kind!r}'
        if kind!='zero' and exponent<1:
            raise ValueError(f'radius exponent must be >= 1, got {exponent}')
        self.kind = kind
        self.exponent = exponent if kind!='zero' else 0

    @classmethod
    def neg(cls, mu):
        return cls('neg', mu)

    @classmethod
    def zero(cls):
        return cls('zero')

    @classmethod
    def pos(cls, nu):
        return cls('pos', nu)

    @property
    def value(self):
        if self.kind=='zero':
            return Fraction(0)
        return Fraction(-1 if self.kind=='neg' else 1, self.exponent)

    def __eq__(self, other):
        return isinstance(other, Radius) and self.value==other.value

    def __lt__(self, other):
        return self.value < other.value

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        v = self.value
        return str(v) if v<=0 else f'+{v}'

    def __repr__(self):
        return f'Radius({self})'

class P1Vanishes(object):
    '''Marker returned by ``p1_radius`` and ``p1_index`` when p1(M) is 0 mod 3.'''
    def __repr__(self):
        return 'P1Vanishes'

    def __eq__(self, other):
        return isinstance(other, P1Vanishes)

    def __hash__(self):
        return hash('P1Vanishes')

P1_VANISHES = P1Vanishes()

class SummandIndex(object):
    '''Position t (1-based) of a lower-cell summand of the Y-complex with its kind and radius.'''
    def __init__(self, position, kind, exponent, radius):
        self.position = position
        self.kind = kind
        self.exponent = exponent
        self.radius = radius

    def __eq__(self, other):
        return isinstance(other, SummandIndex) and \
            (self.position, self.kind, self.exponent, self.radius)==(other.position, other.kind, other.exponent, other.radius)

    def __repr__(self):
        label = 'FreePart' if self.kind==FREE_PART else f'{self.kind}Part({self.exponent})'
        return f'{self.position}:{label}[{self.radius}]'

def _torsion_group(g):
    if g is None or (isinstance(g, int) and not isinstance(g, bool) and g in (0, 1)): #0 is the trivial group here, not Z
        return AbelianGroup.trivial()
    return localize_away_from_2(g)

class ManifoldDescriptor(object):
    '''Invariants of a simply connected closed 7-manifold M away from 2.

    The homology of M has the shape

    ======  ============
    H_2     Z^r + H
    H_3     Z^d + T
    H_4     Z^d + H
    H_5     Z^r
    H_7     Z
    ======  ============

    Parameters
    ----------
    r, d : int
        free ranks of H_2 and H_3
    H, T : AbelianGroup or raw group data
        torsion of H_2 and H_3 (2-torsion is dropped with a warning); an int k means Z/k and 0 the trivial group
    wu : list of int
        the mod 3 pairing of p1(M) with the ordered basis of ``summand_list``, length m + d + l
        with m (l) the number of 3-primary cyclic summands of H (T). Entries are taken mod 3.

    Notes
    -----
    p1(M) = 0 mod 3 is not a separate input; it holds exactly when ``wu`` is zero.
    '''
    def __init__(self, r=0, d=0, H=None, T=None, wu=()):
        r, d = as_integer(r, 'r'), as_integer(d, 'd')
        if r<0 or d<0:
            raise NegativeRank(f'free ranks must be non-negative, got r={r}, d={d}')
        self.r, self.d = r, d
        self.H, self.T = _torsion_group(H), _torsion_group(T)
        for name, g in (('H', self.H), ('T', self.T)):
            if not g.is_torsion:
                raise ValueError(f'{name} is the torsion subgroup and cannot have free rank, got {g}')
        if not isinstance(wu, (list, tuple)):
            raise MalformedInput(f'wu must be a list of integers, got {wu!r}')
        self.wu = tuple(as_integer(x, 'a wu entry')%3 for x in wu)
        expected = self.m + self.d + self.ell
        if len(self.wu)!=expected:
            raise WuLengthMismatch(f'wu has length {len(self.wu)}, expected m + d + l = {self.m} + {self.d} + {self.ell} = {expected}')

    @property
    def H_not3(self):
        return primary_part(self.H, 3)[1]

    @property
    def T_not3(self):
        return primary_part(self.T, 3)[1]

    @property
    def m(self):
        return self.H.count(3)

    @property
    def ell(self):
        return self.T.count(3)

    @property
    def p1_vanishes(self):
        return not any(self.wu)

    @property
    def is_mod3_string(self):
        '''p1(M) = 0 mod 3.'''
        return self.p1_vanishes

    def homology(self):
        '''Reduced integral homology of M away from 2, nontrivial degrees only.'''
        out = {2: AbelianGroup.free(self.r) + self.H, 3: AbelianGroup.free(self.d) + self.T,
               4: AbelianGroup.free(self.d) + self.H, 5: AbelianGroup.free(self.r), 7: AbelianGroup.free(1)}
        return {k:g for k,g in out.items() if not g.is_trivial}

    @property
    def is_aloff_wallach(self):
        '''Generalized Aloff-Wallach shape: r = 1, d = 0, H = 0, T cyclic (or trivial).'''
        return self.r==1 and self.d==0 and self.H.is_trivial and len(set(p for p,_ in self.T.torsion))==len(self.T.torsion)

    @property
    def aloff_wallach_type(self):
        assert self.is_aloff_wallach, 'not of generalized Aloff-Wallach shape'
        return self.T.order

    def to_dict(self):
        return {'r':self.r, 'd':self.d, 'H':self.H.to_dict(), 'T':self.T.to_dict(), 'wu':list(self.wu)}

    def save(self, file):
        '''Save the descriptor as JSON (reload with ``load_descriptor``).'''
        with open(file, 'w') as f:
            json.dump(self.to_dict(), f, indent=1)

    def __eq__(self, other):
        return isinstance(other, ManifoldDescriptor) and self.to_key()==other.to_key()

    def __hash__(self):
        return hash(self.to_key())

    def to_key(self):
        return (self.r, self.d, self.H, self.T, self.wu)

    def __repr__(self):
        return f'ManifoldDescriptor(r={self.r}, d={self.d}, H={self.H}, T={self.T}, wu={list(self.wu)})'

def validate(desc):
    '''Validated descriptor from a JSON-like dict (or a descriptor, which is returned re-validated).'''
    if isinstance(desc, ManifoldDescriptor):
        desc = desc.to_dict()
    if not isinstance(desc, dict):
        raise MalformedInput(f'a descriptor must be a JSON object, got {type(desc).__name__}')
    unknown = set(desc) - {'r', 'd', 'H', 'T', 'wu'}
    if unknown:
        raise ValueError(f'unknown descriptor fields {sorted(unknown)}')
    return ManifoldDescriptor(r=desc.get('r', 0), d=desc.get('d', 0), H=desc.get('H'), T=desc.get('T'), wu=desc.get('wu', []))

def load_descriptor(file):
    '''Load a descriptor from a JSON file.'''
    with open(file) as f:
        return validate(json.load(f))

def summand_list(desc):
    '''The ordered lower summands of the Y-complex.

    H-summands P^4(3^μ) with μ ascending, then d copies of S^4, then T-summands
    P^5(3^ν) with ν descending; radii -1/μ, 0, +1/ν weakly increase along the list.
    '''
    mus = [e for p,e in desc.H.torsion if p==3]
    nus = sorted((e for p,e in desc.T.torsion if p==3), reverse=True)
    out = [(H_PART, mu, Radius.neg(mu)) for mu in mus] + [(FREE_PART, 0, Radius.zero())]*desc.d + \
          [(T_PART, nu, Radius.pos(nu)) for nu in nus]
    return [SummandIndex(t+1, kind, e, radius) for t,(kind,e,radius) in enumerate(out)]

def p1_index(desc):
    for t,x in enumerate(desc.wu):
        if x!=0:
            return t+1
    return P1_VANISHES

def p1_radius(desc):
    t = p1_index(desc)
    if t==P1_VANISHES:
        return P1_VANISHES
    return summand_list(desc)[t-1].radius

def aloff_wallach(k, p1_mod3=0):
    '''Generalized Aloff-Wallach manifold of type k with p1(M) = p1_mod3 mod 3.'''
    T = AbelianGroup.cyclic(k)
    return ManifoldDescriptor(r=1, d=0, T=T, wu=[p1_mod3]*T.count(3))

def bundle_descriptor(rho, nu):
    '''Total space of the S^3-bundle over S^4 with invariants (rho, 3^nu); p1 = 4 rho.'''
    return ManifoldDescriptor(r=0, d=0, T=AbelianGroup(0, [(3, nu)]), wu=[(4*rho)%3])
