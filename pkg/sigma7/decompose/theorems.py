'''Suspension splittings of simply connected closed 7-manifolds away from 2.

Every decomposition is assembled from two parts:

* the outer summands, which split off by homology alone
  (r (S^3 v S^6) v d S^5 v P^4(H') v P^5(T') v P^6(H), H' and T' the non 3-primary parts);
* the Y-block, the lower summands P^4(3^μ), S^4, P^5(3^ν) of ``summand_list`` with one top
  8-cell attached by a mod 3 vector. The vector is reduced to a unit vector at the
  P^1-index (``sigma7.reduce``) and the summand at that position absorbs the top cell.

For the double suspension everything is shifted up once; for the single suspension
the Y-block only exists when H = 0 or T = 0.
'''
from sigma7.exceptions import NeedsDoubleSuspension
from sigma7.invariants import summand_list, H_PART, FREE_PART, T_PART
from sigma7.reduce import ReductionVector, canonical_form, first_nonzero
from sigma7.tables import citations
from sigma7.wedge import Sphere, Moore, Cone, Bundle, WedgeExpr, moore, suspend, ALPHA, ALPHA_TILDE, IOTA_ALPHA

P1_TRIVIAL, RADIUS_NEGATIVE, RADIUS_ZERO, RADIUS_POSITIVE = 'p1-trivial', 'radius-negative', 'radius-zero', 'radius-positive'
H2_TORSION_FREE, H3_TORSION_FREE, GENERAL = 'h2-torsion-free', 'h3-torsion-free', 'general'
case_of_kind = {H_PART:RADIUS_NEGATIVE, FREE_PART:RADIUS_ZERO, T_PART:RADIUS_POSITIVE}

anchors = dict(
    homology = 'homology of M: H_2 = Z^r+H, H_3 = Z^d+T, H_4 = Z^d+H, H_5 = Z^r, H_7 = Z',
    skeleta = 'the suspended homology skeleta split off r (S^3 v S^6), d S^5, P^4(H), P^5(T), P^6(H) away from 2',
    y_complex = 'the remaining lower summands P^4(3^mu), S^4, P^5(3^nu) carry the top cell',
    wu = 'the top cell is attached through alpha on every summand where P^1 = p1 mod 3 pairs nontrivially (mod 3 Wu formula)',
    reduction = 'order-respecting row moves reduce the attaching vector to a unit vector at the P^1-index',
    bundle = 'Sigma M_{rho,3^nu} is P^5(3^nu) v S^8 if 3 | rho, and P^5(3^nu) with an 8-cell on i o Sigma alpha otherwise',
    double = 'the double suspension splits for arbitrary H and T',
    )

class DecompositionResult(object):
    '''The homotopy type of Σ^k M away from 2 as a wedge.

    Attributes
    ----------
    suspensions : int
        1 or 2
    wedge : WedgeExpr
    case_label : str
        ``p1-trivial``, ``radius-negative``, ``radius-zero`` or ``radius-positive``
    family : str
        ``h2-torsion-free`` (H = 0), ``h3-torsion-free`` (T = 0) or ``general``
    p1_index : int or None
        position in ``summand_list`` that absorbed the top cell
    witness : list of moves
        reduction of the attaching vector to its canonical form
    trace : list of str
        citation anchors of the statements used
    '''
    def __init__(self, suspensions, wedge, case_label, family, p1_index=None, witness=(), trace=()):
        self.suspensions = suspensions
        self.wedge = wedge
        self.case_label = case_label
        self.family = family
        self.p1_index = p1_index
        self.witness = list(witness)
        self.trace = list(trace)

    def render(self):
        return self.wedge.render()

    def to_dict(self):
        return {'suspensions':self.suspensions, 'wedge':self.wedge.render(), 'atoms':self.wedge.to_json(),
                'case':self.case_label, 'family':self.family, 'p1_index':self.p1_index,
                'witness':[str(m) for m in self.witness], 'trace':self.trace}

    def __repr__(self):
        return f'DecompositionResult(suspensions={self.suspensions}, {self.case_label}, {self.wedge.render()})'

def suspend_bundle(rho, nu):
    '''Σ M_{ρ,3^ν}: P^5(3^ν) v S^8 when 3 | ρ, otherwise C(P^5(3^ν); i.alpha; 8).'''
    if nu<1:
        raise ValueError(f'nu must be >= 1, got {nu}')
    if rho%3==0:
        return WedgeExpr([Moore(5, 3, nu), Sphere(8)])
    return WedgeExpr([Cone(Moore(5, 3, nu), IOTA_ALPHA, 8)])

def suspend_through_bundles(w, times=1):
    '''Suspend a wedge that may contain ``Bundle`` atoms by routing them through ``suspend_bundle``.'''
    if times<1:
        raise ValueError(f'suspend by a positive number of times, got {times}')
    atoms = []
    for a in w:
        if isinstance(a, Bundle):
            first = suspend_bundle(a.rho, a.nu)
            atoms += list(first if times==1 else suspend(first, times-1))
        else:
            atoms.append(a.suspend(times))
    return WedgeExpr(atoms)

def family_of(desc):
    if desc.H.is_trivial:
        return H2_TORSION_FREE
    if desc.T.is_trivial:
        return H3_TORSION_FREE
    return GENERAL

def y_summands(desc):
    '''Lower summands of the Y-complex in the order of ``summand_list``, one atom per position.'''
    atoms = []
    for s in summand_list(desc):
        if s.kind==H_PART:
            atoms.append(Moore(4, 3, s.exponent))
        elif s.kind==FREE_PART:
            atoms.append(Sphere(4))
        else:
            atoms.append(Moore(5, 3, s.exponent))
    return atoms

def _absorbing_block(summand):
    '''The top 8-cell attached to one lower summand.'''
    if summand.kind==H_PART:
        return WedgeExpr([Cone(Moore(4, 3, summand.exponent), ALPHA_TILDE, 8)]), citations['moore_47']
    if summand.kind==FREE_PART:
        return WedgeExpr([Cone(Sphere(4), ALPHA, 8)]), citations['sphere_n3']
    return suspend_bundle(1, summand.exponent), anchors['bundle']

def y_block(desc):
    '''The Y-block at the single suspension level.

    Returns
    -------
    wedge : WedgeExpr
    case_label : str
    index : int or None
        the P^1-index
    witness : list of moves
    cites : list of str
    '''
    summands = summand_list(desc)
    atoms = y_summands(desc)
    form, witness = canonical_form(ReductionVector.from_summands(desc.wu, summands), witness=True)
    t = first_nonzero(form)
    if t is None:
        return WedgeExpr(atoms + [Sphere(8)]), P1_TRIVIAL, None, witness, [anchors['y_complex'], anchors['wu']]
    block, cite = _absorbing_block(summands[t-1])
    rest = atoms[:t-1] + atoms[t:]
    cites = [anchors['y_complex'], anchors['wu'], anchors['reduction'], cite]
    return WedgeExpr(rest) + block, case_of_kind[summands[t-1].kind], t, witness, cites

def outer_summands(desc):
    '''Summands split off by homology alone, at the single suspension level.'''
    return WedgeExpr([[Sphere(3), Sphere(6)] for _ in range(desc.r)] + [Sphere(5) for _ in range(desc.d)] +
                     moore(4, desc.H_not3) + moore(5, desc.T_not3) + moore(6, desc.H))

def _assemble(desc, suspensions):
    block, label, t, witness, cites = y_block(desc)
    wedge = outer_summands(desc) + block
    if suspensions==2:
        wedge = suspend(wedge, 1)
        cites = cites + [anchors['double'], citations['moore_58'] if label==RADIUS_NEGATIVE else citations['moore_n2']]
    trace = [anchors['homology'], anchors['skeleta']] + cites
    return DecompositionResult(suspensions, wedge, label, family_of(desc), t, witness, trace)

def decompose_sigma(desc):
    '''ΣM away from 2; needs H = 0 or T = 0.

    Raises
    ------
    NeedsDoubleSuspension
        if both H and T are nonzero (``reason`` is ``'H-and-T-nonzero'``)
    '''
    if not desc.H.is_trivial and not desc.T.is_trivial:
        raise NeedsDoubleSuspension(f'single suspension needs H = 0 or T = 0, got H = {desc.H}, T = {desc.T}',
                                    reason='H-and-T-nonzero')
    return _assemble(desc, 1)

def decompose_sigma2(desc):
    '''Σ²M away from 2, for any descriptor.'''
    return _assemble(desc, 2)

def decompose(desc, suspensions=1):
    if suspensions==1:
        return decompose_sigma(desc)
    if suspensions==2:
        return decompose_sigma2(desc)
    raise ValueError(f'suspensions must be 1 or 2, got {suspensions}')
