from sigma7.reduce.reduction import ReductionVector, Scale, AddForward, add_forward, scale, first_nonzero, \
        apply_moves, canonical_form
