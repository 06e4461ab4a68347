'''Row reduction of a Z/3 attaching vector over an ordered set of wedge summands.

A vector c = (c_1, ..., c_n) records the mod 3 components of an attaching map on
the ordered summands Y_1, ..., Y_n (positions numbered from 1). Two moves are allowed:

* ``add_forward(v, a, b)`` for a < b: c_b <- c_a + c_b (composition with a self-map of the wedge
  that maps Y_a onto Y_b)
* ``scale(v, a, -1)``: c_a <- -c_a

Both are invertible, so they split vectors into classes. Each nonzero class is
represented by the unit vector at its first nonzero position.
'''
from sigma7.exceptions import IllegalDirection

class ReductionVector(object):
    '''A Z/3 vector over the positions 1..n of an ordered list of summands.

    Positions follow ``summand_list``, whose radii weakly increase, so "forward"
    (from an earlier to a later position) is the direction of the legal moves.

    Parameters
    ----------
    entries : iterable of int
        taken mod 3
    '''
    def __init__(self, entries):
        self.entries = tuple(int(x)%3 for x in entries)

    @classmethod
    def from_summands(cls, wu, summands):
        '''Vector over the summands of ``summand_list``; their radii must weakly increase.'''
        if len(wu)!=len(summands):
            raise ValueError(f'{len(wu)} entries for {len(summands)} summands')
        radii = [s.radius for s in summands]
        if any(a>b for a,b in zip(radii, radii[1:])):
            raise ValueError(f'summand radii must weakly increase, got {[str(x) for x in radii]}')
        return cls(wu)

    def replace(self, entries):
        return ReductionVector(entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, position):
        return self.entries[position-1]

    def __eq__(self, other):
        return isinstance(other, ReductionVector) and self.entries==other.entries

    def __hash__(self):
        return hash(self.entries)

    @property
    def is_zero(self):
        return not any(self.entries)

    def __str__(self):
        return ','.join(str(x) for x in self.entries)

    def __repr__(self):
        return f'ReductionVector({self})'

def _check_position(v, a):
    if not 1<=a<=len(v):
        raise ValueError(f'position {a} outside 1..{len(v)}')

class Scale(object):
    def __init__(self, a, unit):
        self.a, self.unit = a, unit

    def apply(self, v):
        return scale(v, self.a, self.unit)

    def __eq__(self, other):
        return isinstance(other, Scale) and (self.a, self.unit)==(other.a, other.unit)

    def __str__(self):
        return f'scale {self.a} by {self.unit}'

    __repr__ = __str__

class AddForward(object):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def apply(self, v):
        return add_forward(v, self.a, self.b)

    def __eq__(self, other):
        return isinstance(other, AddForward) and (self.a, self.b)==(other.a, other.b)

    def __str__(self):
        return f'add {self.a} -> {self.b}'

    __repr__ = __str__

def add_forward(v, a, b):
    '''Add entry a to entry b (mod 3); only legal from an earlier position to a later one.'''
    _check_position(v, a)
    _check_position(v, b)
    if a>=b:
        raise IllegalDirection(f'cannot add position {a} to position {b}: moves only run forward')
    entries = list(v.entries)
    entries[b-1] = (entries[a-1] + entries[b-1])%3
    return v.replace(entries)

def scale(v, a, unit):
    _check_position(v, a)
    if unit not in (1, -1):
        raise ValueError(f'unit must be 1 or -1, got {unit}')
    entries = list(v.entries)
    entries[a-1] = (unit*entries[a-1])%3
    return v.replace(entries)

def first_nonzero(v):
    '''First position with a nonzero entry, None for the zero vector.'''
    return next((t+1 for t,x in enumerate(v.entries) if x!=0), None)

def apply_moves(v, moves):
    for move in moves:
        v = move.apply(v)
    return v

def canonical_form(v, witness=False):
    '''Reduce v to 0 or to the unit vector at its first nonzero position.

    Parameters
    ----------
    v : ReductionVector
    witness : bool
        also return the list of moves taking v to its canonical form

    Returns
    -------
    ReductionVector, or (ReductionVector, list of moves) if ``witness``
    '''
    moves = []
    t = first_nonzero(v)
    if t is not None:
        if v[t]==2:
            moves.append(Scale(t, -1))
        for b in range(t+1, len(v)+1):
            if v[b]==1:
                moves += [Scale(b, -1), AddForward(t, b)]
            elif v[b]==2:
                moves.append(AddForward(t, b))
    form = apply_moves(v, moves)
    assert t is None or form.entries==tuple(int(i==t) for i in range(1, len(v)+1)), f'reduction of {v} ended at {form}'
    return (form, moves) if witness else form
