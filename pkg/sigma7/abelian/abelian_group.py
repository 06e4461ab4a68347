from numbers import Integral

from sympy import factorint, isprime

from sigma7.exceptions import MalformedInput, MissingSummand, warn_two_torsion
from sigma7.abelian.smith import IntegerMatrix, smith_normal_form

def as_integer(x, what='value'):
    '''x as a Python int; bools, floats, None and strings raise ``MalformedInput``.'''
    if isinstance(x, bool) or not isinstance(x, Integral):
        raise MalformedInput(f'{what} must be an integer, got {x!r}')
    return int(x)

def _split_order(k):
    '''Prime-power factors of a cyclic order k as (p, e) pairs.'''
    k = as_integer(k, 'a cyclic order')
    if k<1:
        raise MalformedInput(f'a cyclic order must be positive, got {k}')
    return [(int(p), int(e)) for p,e in sorted(factorint(k).items())]

def _odd_pairs(pairs):
    '''Drop p = 2 (with a warning) and e = 0, check the rest.'''
    kept, dropped = [], []
    for pe in pairs:
        if not isinstance(pe, (list, tuple)) or len(pe)!=2:
            raise MalformedInput(f'torsion items must be (p, e) pairs, got {pe!r}')
        p, e = as_integer(pe[0], 'a torsion prime'), as_integer(pe[1], 'a torsion exponent')
        if not isprime(p):
            raise ValueError(f'torsion pair ({p},{e}) does not have a prime base')
        if e<0:
            raise ValueError(f'torsion pair ({p},{e}) has a negative exponent')
        if e==0:
            continue
        if p==2:
            dropped.append((p,e))
        else:
            kept.append((p,e))
    warn_two_torsion(dropped)
    return kept

class AbelianGroup(object):
    '''A finitely generated abelian group localized away from 2.

    Stored as a free rank plus a list of odd prime-power cyclic factors
    ``(p, e)`` meaning ℤ/p^e, sorted by ascending p then ascending e. Two groups
    are equal iff these fields are identical.

    Parameters
    ----------
    free_rank : int
    torsion : iterable of (p, e)
        may be unsorted and may contain p = 2 (dropped with a ``TwoTorsionDropped`` warning)

    Examples
    --------
    >>> AbelianGroup(1, [(3,2), (3,1)])
    AbelianGroup(Z + Z/3 + Z/9)
    '''
    def __init__(self, free_rank=0, torsion=()):
        free_rank = as_integer(free_rank, 'a free rank')
        if free_rank<0:
            raise ValueError(f'free rank must be non-negative, got {free_rank}')
        self.free_rank = free_rank
        self.torsion = tuple(sorted(_odd_pairs(torsion)))

    ### constructors ###
    @classmethod
    def trivial(cls):
        return cls(0, ())

    @classmethod
    def free(cls, n):
        return cls(n, ())

    @classmethod
    def cyclic(cls, k):
        '''ℤ/k for k >= 1, ℤ for k = 0.'''
        if k==0:
            return cls(1, ())
        return cls(0, _split_order(k))

    @classmethod
    def from_orders(cls, free=0, orders=()):
        '''Group from a free rank and a list of cyclic orders, e.g. ``from_orders(1, [12, 5])``.'''
        pairs = []
        for k in orders:
            pairs.extend(_split_order(k))
        return cls(free, pairs)

    @classmethod
    def from_dict(cls, data):
        '''Inverse of ``to_dict``: ``{"free": n, "torsion": [[p, e], ...]}``.'''
        unknown = set(data) - {'free', 'torsion'}
        if unknown:
            raise MalformedInput(f'unknown group fields {sorted(unknown)}')
        torsion = data.get('torsion', [])
        if not isinstance(torsion, (list, tuple)):
            raise MalformedInput(f'torsion must be a list of [p, e] pairs, got {torsion!r}')
        return cls(data.get('free', 0), torsion)

    def to_dict(self):
        return {'free': self.free_rank, 'torsion': [[p,e] for p,e in self.torsion]}

    ### structure ###
    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and self.free_rank==other.free_rank and self.torsion==other.torsion

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __add__(self, other):
        return self.direct_sum(other)

    def direct_sum(self, other):
        return AbelianGroup(self.free_rank + other.free_rank, self.torsion + other.torsion)

    @property
    def is_trivial(self):
        return self.free_rank==0 and not self.torsion

    @property
    def is_torsion(self):
        return self.free_rank==0

    @property
    def order(self):
        '''Order of the torsion subgroup.'''
        out = 1
        for p,e in self.torsion:
            out *= p**e
        return out

    @property
    def invariant_factors(self):
        '''Torsion as d_1 | d_2 | ... | d_k with every d_i > 1.'''
        by_prime = {}
        for p,e in self.torsion:
            by_prime.setdefault(p, []).append(p**e)
        k = max((len(v) for v in by_prime.values()), default=0)
        factors = [1]*k
        for powers in by_prime.values(): #largest powers go to the last factors
            for i,q in enumerate(sorted(powers, reverse=True)):
                factors[k-1-i] *= q
        return factors

    def count(self, p, e=None):
        '''Number of cyclic factors at prime p (and exponent e if given).'''
        return sum(1 for q,f in self.torsion if q==p and (e is None or f==e))

    ### homological algebra on cyclic factors ###
    def tensor(self, other):
        free = self.free_rank*other.free_rank
        pairs = list(self.torsion)*other.free_rank + list(other.torsion)*self.free_rank
        pairs += [(p, min(e,f)) for p,e in self.torsion for q,f in other.torsion if p==q]
        return AbelianGroup(free, pairs)

    def tor(self, other):
        return AbelianGroup(0, [(p, min(e,f)) for p,e in self.torsion for q,f in other.torsion if p==q])

    def __str__(self):
        parts = []
        if self.free_rank==1:
            parts.append('Z')
        elif self.free_rank>1:
            parts.append(f'Z^{self.free_rank}')
        parts += [f'Z/{p**e}' for p,e in self.torsion]
        return ' + '.join(parts) if parts else '0'

    def __repr__(self):
        return f'AbelianGroup({self})'

def localize_away_from_2(g):
    '''Localize raw group data away from 2.

    Accepts an ``AbelianGroup``, a JSON literal ``{"free": n, "torsion": [[p, e], ...]}``,
    a pair ``(free, items)`` where each item is a cyclic order or a ``(p, e)`` pair,
    or a single integer k meaning ℤ/k (ℤ for k = 0). All 2-power torsion is removed
    and reported through the ``TwoTorsionDropped`` warning category.
    '''
    if isinstance(g, AbelianGroup):
        return g
    if isinstance(g, dict):
        return AbelianGroup.from_dict(g)
    if isinstance(g, Integral) and not isinstance(g, bool):
        return AbelianGroup.cyclic(g)
    if not isinstance(g, (list, tuple)) or len(g)!=2 or not isinstance(g[1], (list, tuple)):
        raise MalformedInput(f'cannot read {g!r} as a group: expected an int, a dict or a (free, items) pair')
    free, items = g
    pairs = []
    for item in items:
        if isinstance(item, Integral) and not isinstance(item, bool):
            pairs.extend(_split_order(item))
        else:
            pairs.append(item)
    return AbelianGroup(free, pairs)

def primary_part(g, p):
    '''Split g into its p-primary torsion and the rest (free part stays with the rest).'''
    part_p = AbelianGroup(0, [(q,e) for q,e in g.torsion if q==p])
    part_not_p = AbelianGroup(g.free_rank, [(q,e) for q,e in g.torsion if q!=p])
    return part_p, part_not_p

def merge(*groups):
    out = AbelianGroup.trivial()
    for g in groups:
        out = out + g
    return out

def remove_cyclic_summand(g, p, e):
    '''Delete one occurrence of ℤ/p^e from g, the quotient g/(ℤ/p^e).'''
    torsion = list(g.torsion)
    if (p,e) not in torsion:
        raise MissingSummand(f'Z/{p}^{e} is not a cyclic summand of {g}')
    torsion.remove((p,e))
    return AbelianGroup(g.free_rank, torsion)

def insert_cyclic_summand(g, p, e):
    return AbelianGroup(g.free_rank, g.torsion + ((p,e),))

def homology_from_boundaries(ranks, boundaries):
    '''Integral homology of a finite free chain complex, localized away from 2.

    Parameters
    ----------
    ranks : dict degree -> int
        rank of the chain group C_k
    boundaries : dict degree -> IntegerMatrix or nested list
        d_k : C_k -> C_{k-1} as a (rank_{k-1}, rank_k) matrix; missing degrees are zero maps

    Returns
    -------
    dict degree -> AbelianGroup, only nontrivial degrees
    '''
    diag = {}
    for k, rank in ranks.items():
        below = ranks.get(k-1, 0)
        d = boundaries.get(k)
        if d is None or rank==0 or below==0:
            diag[k] = []
            continue
        if not isinstance(d, IntegerMatrix):
            d = IntegerMatrix(d, rows=below, cols=rank)
        if d.shape!=(below, rank):
            raise ValueError(f'boundary d_{k} has shape {d.shape}, expected {(below, rank)}')
        diag[k] = [x for x in smith_normal_form(d)[0] if x!=0]
    out = {}
    for k, rank in ranks.items():
        free = rank - len(diag[k]) - len(diag.get(k+1, []))
        g = AbelianGroup.from_orders(free, [x for x in diag.get(k+1, []) if x!=1])
        if not g.is_trivial:
            out[k] = g
    return out
