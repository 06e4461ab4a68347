from sigma7.decompose.stages import stage, chang_split
from sigma7.decompose.theorems import DecompositionResult, suspend_bundle, suspend_through_bundles, y_summands, \
        y_block, outer_summands, decompose_sigma, decompose_sigma2, decompose, family_of, \
        P1_TRIVIAL, RADIUS_NEGATIVE, RADIUS_ZERO, RADIUS_POSITIVE, H2_TORSION_FREE, H3_TORSION_FREE, GENERAL, case_of_kind, anchors
