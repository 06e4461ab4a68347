from sigma7.abelian import AbelianGroup, localize_away_from_2
from sigma7.exceptions import BadRange
from sigma7.wedge import Sphere, Moore, WedgeExpr, moore

def chang_split(homology, bottom):
    '''The sphere and Moore space wedge with the given homology.

    Away from 2 an (n-1)-connected complex of dimension <= n+2 splits uniquely into
    spheres and Moore spaces, so the wedge is determined by its homology.

    Parameters
    ----------
    homology : dict degree -> AbelianGroup (or raw group data)
        must be concentrated in degrees bottom..bottom+2 with torsion only below bottom+2
    bottom : int
        n >= 3
    '''
    if bottom<3:
        raise BadRange(f'the bottom degree must be >= 3, got {bottom}')
    atoms = []
    for k, g in sorted(homology.items()):
        g = localize_away_from_2(g)
        if g.is_trivial:
            continue
        if not bottom<=k<=bottom+2:
            raise BadRange(f'homology in degree {k} is outside {bottom}..{bottom+2}')
        if k==bottom+2 and g.torsion:
            raise BadRange(f'torsion in the top degree {k} needs a cell in degree {k+2}')
        atoms += [Sphere(k) for _ in range(g.free_rank)] + [Moore(k+1, p, e) for p,e in g.torsion]
    return WedgeExpr(atoms)

def stage(desc, level):
    '''Suspension of the homology skeleton M_(level) of M, level 3, 4 or 5.

    ========  =========================================================
    level 3   r S^3 v d S^4 v P^4(H) v P^5(T)
    level 4   level 3 v d S^5 v P^6(H)
    level 5   level 4 v r S^6
    ========  =========================================================
    '''
    if level not in (3, 4, 5):
        raise ValueError(f'stage level must be 3, 4 or 5, got {level}')
    out = chang_split({3: AbelianGroup.free(desc.r) + desc.H, 4: AbelianGroup.free(desc.d) + desc.T}, 3)
    if level>=4:
        out = out + [Sphere(5) for _ in range(desc.d)] + moore(6, desc.H)
    if level>=5:
        out = out + [Sphere(6) for _ in range(desc.r)]
    return out
