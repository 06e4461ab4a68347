from sigma7.invariants.descriptor import ManifoldDescriptor, Radius, SummandIndex, P1Vanishes, P1_VANISHES, \
        validate, load_descriptor, summand_list, p1_index, p1_radius, aloff_wallach, bundle_descriptor, \
        H_PART, FREE_PART, T_PART
from sigma7.invariants.samplers import random_descriptor, random_descriptor_pair, random_group
