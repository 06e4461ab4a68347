from sigma7.wedge.wedge_expr import Atom, Sphere, Moore, Cone, Bundle, WedgeExpr, moore, normalize, suspend, \
        reduced_homology, parse_wedge, wedge_from_json, atom_from_json, ALPHA, ALPHA_TILDE, IOTA_ALPHA, attach_tags
