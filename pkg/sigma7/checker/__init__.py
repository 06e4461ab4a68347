from sigma7.checker.verify import VerificationReport, expected_homology, verify_homology, verify, rigidity_key, \
        rigidity_equal, reachable_vectors, oracle_canonical, minors_gcd, moore_chain_complex, tensor_chain_complexes, \
        kunneth_smash_homology, fuzz_verify
