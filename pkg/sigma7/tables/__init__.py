from sigma7.tables.homotopy_tables import HomotopyGroupEntry, HomotopySetResult, pi_moore, pi_sphere, pi_atom, \
        smash_moore, smash_citation, maps_from_moore, table_entries, citations
