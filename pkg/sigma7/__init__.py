import sigma7.abelian
import sigma7.wedge
import sigma7.tables
import sigma7.invariants
import sigma7.reduce
import sigma7.decompose
import sigma7.checker
import sigma7.corpus

from sigma7.abelian import AbelianGroup, IntegerMatrix, smith_normal_form, localize_away_from_2
from sigma7.wedge import Sphere, Moore, Cone, Bundle, WedgeExpr, normalize, suspend, reduced_homology, parse_wedge
from sigma7.invariants import ManifoldDescriptor, Radius, validate, load_descriptor, summand_list, p1_radius, p1_index
from sigma7.reduce import ReductionVector, canonical_form
from sigma7.decompose import decompose, decompose_sigma, decompose_sigma2, stage, chang_split, suspend_bundle
from sigma7.checker import verify_homology, rigidity_equal
from sigma7.exceptions import TwoTorsionDropped, NeedsDoubleSuspension, OutOfTable
