from sigma7.abelian.abelian_group import AbelianGroup, localize_away_from_2, primary_part, merge, as_integer, \
        remove_cyclic_summand, insert_cyclic_summand, homology_from_boundaries
from sigma7.abelian.smith import IntegerMatrix, smith_normal_form
