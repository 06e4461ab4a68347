import re

from sympy import isprime

from sigma7.abelian import AbelianGroup, localize_away_from_2
from sigma7.exceptions import UnsuspendableAtom

ALPHA, ALPHA_TILDE, IOTA_ALPHA = 'alpha', 'alpha_tilde', 'iota_alpha'
attach_tags = [ALPHA, ALPHA_TILDE, IOTA_ALPHA]
tag_text = {ALPHA:'alpha', ALPHA_TILDE:'alpha~', IOTA_ALPHA:'i.alpha'}
text_tag = {b:a for a,b in tag_text.items()}

def _add_homology(out, degree, group):
    out[degree] = out.get(degree, AbelianGroup.trivial()) + group

class Atom(object):
    '''Base class of the wedge summands. Atoms are immutable values compared by ``key``.'''
    kind_rank = None

    @property
    def key(self):
        raise NotImplementedError

    @property
    def bottom_dim(self):
        raise NotImplementedError

    @property
    def top_dim(self):
        raise NotImplementedError

    @property
    def sort_key(self):
        raise NotImplementedError

    def suspend(self, times=1):
        raise NotImplementedError

    def homology(self):
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError

    @property
    def is_trivial(self):
        return False

    def __eq__(self, other):
        return type(self) is type(other) and self.key==other.key

    def __hash__(self):
        return hash((type(self).__name__,) + self.key)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __repr__(self):
        return f'{type(self).__name__}{self.key}'

class Sphere(Atom):
    '''S^n, n >= 3.'''
    kind_rank = 0
    def __init__(self, n):
        if n<3:
            raise ValueError(f'spheres live in dimension >= 3 here, got S^{n}')
        self.n = n

    @property
    def key(self):
        return (self.n,)

    @property
    def bottom_dim(self):
        return self.n

    top_dim = bottom_dim

    @property
    def sort_key(self):
        return (self.n, self.kind_rank, 0, 0, 0, self.n)

    def suspend(self, times=1):
        return Sphere(self.n + times)

    def homology(self):
        return {self.n: AbelianGroup.free(1)}

    def to_json(self):
        return {'kind':'sphere', 'n':self.n}

    def __str__(self):
        return f'S^{self.n}'

class Moore(Atom):
    '''P^n(p^e) = S^{n-1} ∪_{p^e} e^n with reduced homology ℤ/p^e in degree n-1.

    ``e = 0`` is accepted as the contractible space P^n(1); ``WedgeExpr`` drops it.'''
    kind_rank = 1
    def __init__(self, n, p, e):
        if n<3:
            raise ValueError(f'Moore spaces live in dimension >= 3 here, got P^{n}')
        if p==2 or not isprime(p):
            raise ValueError(f'Moore atoms need an odd prime, got p={p}')
        if e<0:
            raise ValueError(f'negative exponent e={e}')
        self.n, self.p, self.e = n, p, e

    @property
    def key(self):
        return (self.n, self.p, self.e)

    @property
    def order(self):
        return self.p**self.e

    @property
    def is_trivial(self):
        return self.e==0

    @property
    def bottom_dim(self):
        return self.n - 1

    @property
    def top_dim(self):
        return self.n

    @property
    def sort_key(self):
        return (self.n - 1, self.kind_rank, self.p, self.e, 0, self.n)

    def suspend(self, times=1):
        return Moore(self.n + times, self.p, self.e)

    def homology(self):
        return {} if self.is_trivial else {self.n-1: AbelianGroup(0, [(self.p, self.e)])}

    def to_json(self):
        return {'kind':'moore', 'n':self.n, 'p':self.p, 'e':self.e}

    def __str__(self):
        return f'P^{self.n}({self.order})'

class Cone(Atom):
    '''A sphere or Moore space with one more cell attached by a 3-primary class.

    ======================  ==================  ======================================
    tag                     core                top cell
    ======================  ==================  ======================================
    ``alpha``               S^n                 n+4, attached by Σ^{n-3}α
    ``alpha_tilde``         P^n(3^μ)            n+4, pinches onto Σ^{n-3}α
    ``iota_alpha``          P^n(3^ν)            n+3, bottom cell inclusion after Σ^{n-4}α
    ======================  ==================  ======================================

    ``top_dim`` may be omitted and is then derived from the table.
    '''
    kind_rank = 2
    tag_rank = {ALPHA:0, ALPHA_TILDE:1, IOTA_ALPHA:2}

    def __init__(self, core, tag, top_dim=None):
        if tag not in attach_tags:
            raise ValueError(f'unknown attach tag {tag!r}, expected one of {attach_tags}')
        if tag==ALPHA:
            if not isinstance(core, Sphere):
                raise ValueError('alpha cones are built on spheres')
        else:
            if not isinstance(core, Moore) or core.p!=3 or core.e<1:
                raise ValueError(f'{tag} cones are built on nontrivial 3-primary Moore spaces, got {core!r}')
        if core.n<4:
            raise ValueError(f'cones need a core of dimension >= 4, got {core}')
        expected = core.n + (3 if tag==IOTA_ALPHA else 4)
        if top_dim is not None and top_dim!=expected:
            raise ValueError(f'a {tag} cone on {core} has its top cell in dimension {expected}, not {top_dim}')
        self.core, self.tag, self._top = core, tag, expected

    @property
    def key(self):
        return (self.core.key, self.tag, self._top)

    @property
    def bottom_dim(self):
        return self.core.bottom_dim

    @property
    def top_dim(self):
        return self._top

    @property
    def sort_key(self):
        p, e = (self.core.p, self.core.e) if isinstance(self.core, Moore) else (0, 0)
        return (self.bottom_dim, self.kind_rank, p, e, self.tag_rank[self.tag], self._top)

    def suspend(self, times=1):
        return Cone(self.core.suspend(times), self.tag, self._top + times)

    def homology(self):
        out = dict(self.core.homology())
        _add_homology(out, self._top, AbelianGroup.free(1))
        return out

    def to_json(self):
        return {'kind':'cone', 'core':self.core.to_json(), 'tag':self.tag, 'top':self._top}

    def __str__(self):
        return f'C({self.core};{tag_text[self.tag]};{self._top})'

class Bundle(Atom):
    '''Total space M_{ρ,3^ν} of the S^3-bundle over S^4; only valid unsuspended.'''
    kind_rank = 3
    def __init__(self, rho, nu):
        if nu<1:
            raise ValueError(f'bundle needs nu >= 1, got {nu}')
        self.rho, self.nu = int(rho), int(nu)

    @property
    def key(self):
        return (self.rho, self.nu)

    @property
    def bottom_dim(self):
        return 3

    @property
    def top_dim(self):
        return 7

    @property
    def sort_key(self):
        return (3, self.kind_rank, 3, self.nu, self.rho, 7)

    def suspend(self, times=1):
        raise UnsuspendableAtom(f'{self} must be suspended through suspend_bundle')

    def homology(self):
        return {3: AbelianGroup(0, [(3, self.nu)]), 7: AbelianGroup.free(1)}

    def to_json(self):
        return {'kind':'bundle', 'rho':self.rho, 'nu':self.nu}

    def __str__(self):
        return f'M({self.rho},{3**self.nu})'

def moore(n, group):
    '''Atoms of P^n(A) for any finitely generated A (an int k means ℤ/k).

    The free part contributes spheres S^{n-1}; torsion splits into prime-power Moore atoms.'''
    g = localize_away_from_2(group)
    return [Sphere(n-1) for _ in range(g.free_rank)] + [Moore(n, p, e) for p,e in g.torsion]

def _flatten(raw):
    for item in raw:
        if isinstance(item, Atom):
            yield item
        elif isinstance(item, (list, tuple, WedgeExpr)):
            yield from _flatten(item)
        else:
            raise ValueError(f'cannot read {item!r} as a wedge summand')

class WedgeExpr(object):
    '''A wedge of atoms, kept in canonical order.

    The order is (bottom cell dimension, kind Sphere < Moore < Cone < Bundle, prime,
    exponent, attach tag, top cell dimension); equality is equality of the sorted atom
    tuples. Contractible Moore atoms are removed on construction.
    '''
    def __init__(self, atoms=()):
        self.atoms = tuple(sorted((a for a in _flatten(atoms) if not a.is_trivial), key=lambda a: a.sort_key))

    def __iter__(self):
        return iter(self.atoms)

    def __len__(self):
        return len(self.atoms)

    def __getitem__(self, i):
        return self.atoms[i]

    def __eq__(self, other):
        return isinstance(other, WedgeExpr) and self.atoms==other.atoms

    def __hash__(self):
        return hash(self.atoms)

    def __add__(self, other):
        return WedgeExpr(self.atoms + tuple(other))

    @property
    def is_empty(self):
        return len(self.atoms)==0

    def suspend(self, times=1):
        return suspend(self, times)

    def reduced_homology(self):
        return reduced_homology(self)

    def render(self):
        return ' v '.join(str(a) for a in self.atoms) if self.atoms else '*'

    __str__ = render

    def to_json(self):
        return [a.to_json() for a in self.atoms]

    def __repr__(self):
        return f'WedgeExpr({self.render()})'

def normalize(raw):
    '''Canonical wedge from atoms, nested lists of atoms (e.g. ``moore(5, 45)``) or wedges.'''
    return raw if isinstance(raw, WedgeExpr) else WedgeExpr(raw)

def suspend(w, times=1):
    if times<1:
        raise ValueError(f'suspend by a positive number of times, got {times}')
    return WedgeExpr([a.suspend(times) for a in normalize(w)])

def reduced_homology(w):
    '''Reduced integral homology (away from 2) by degree; trivial degrees are omitted.'''
    out = {}
    for a in normalize(w):
        for degree, group in a.homology().items():
            _add_homology(out, degree, group)
    return {k:v for k,v in sorted(out.items()) if not v.is_trivial}

_core_re = r'(S\^(\d+)|P\^(\d+)\((\d+)\))'
_atom_res = [
    (re.compile(r'^S\^(\d+)$'), 'sphere'),
    (re.compile(r'^P\^(\d+)\((\d+)\)$'), 'moore'),
    (re.compile(r'^C\(' + _core_re + r';(alpha|alpha~|i\.alpha);(\d+)\)$'), 'cone'),
    (re.compile(r'^M\((-?\d+),(\d+)\)$'), 'bundle'),
    ]

def _prime_power(k):
    g = AbelianGroup.cyclic(k)
    if len(g.torsion)!=1:
        raise ValueError(f'{k} is not an odd prime power')
    return g.torsion[0]

def _parse_atom(text):
    for regex, kind in _atom_res:
        match = regex.match(text)
        if match is None:
            continue
        g = match.groups()
        if kind=='sphere':
            return [Sphere(int(g[0]))]
        if kind=='moore':
            return moore(int(g[0]), int(g[1]))
        if kind=='cone':
            core = Sphere(int(g[1])) if g[1] is not None else Moore(int(g[2]), *_prime_power(int(g[3])))
            return [Cone(core, text_tag[g[4]], int(g[5]))]
        rho, order = int(g[0]), int(g[1])
        p, nu = _prime_power(order)
        if p!=3:
            raise ValueError(f'bundle order must be a power of 3, got {order}')
        return [Bundle(rho, nu)]
    raise ValueError(f'cannot parse wedge summand {text!r}')

def parse_wedge(text):
    '''Inverse of ``WedgeExpr.render``; ``*`` is the empty wedge.'''
    text = text.strip()
    if text in ('*', ''):
        return WedgeExpr()
    return WedgeExpr([_parse_atom(part.strip()) for part in text.split(' v ')])

def atom_from_json(data):
    kind = data['kind']
    if kind=='sphere':
        return Sphere(data['n'])
    elif kind=='moore':
        return Moore(data['n'], data['p'], data['e'])
    elif kind=='cone':
        return Cone(atom_from_json(data['core']), data['tag'], data.get('top'))
    elif kind=='bundle':
        return Bundle(data['rho'], data['nu'])
    raise ValueError(f'unknown atom kind {kind!r}')

def wedge_from_json(data):
    return WedgeExpr([atom_from_json(a) for a in data])
