"""Level-1 cyclotomic KLR algebras ``R_n`` on the cyclic quiver with ``n`` vertices.

The algebra is built from its presentation: residue combinatorics decide
which idempotents survive, a rewriting engine reduces any element to the
canonical basis ``e(i) y_n^a psi_w``, and the remaining modules study the
result (projective classes, the Brauer-line quiver, the corner ``e R_n e``
and the matching Hecke-side dimension count).
"""

from .errors import InvalidInput, InvalidParameter, KLRError, VerificationFailure
from .residues import (QuiverData, admissible_swaps, class_representative,
                       enumerate_admissible, is_admissible, level_shift, morita_partition)
from .words import AlgebraElement, Cross, Dot, Idem
from .engine import (NormalWord, degree, enumerate_basis, identity, is_canonical, multiply,
                     normal_form, one_ij, rewrite)
from .derivations import (check_trace, derive_dot_rules, derive_idempotent_vanishing,
                          replay_all)
from .basis import structure_constants, verify_ring_axioms
from .quotient import (projective_isomorphism_check, quiver_presentation, truncation_map,
                       verify_truncation_iso)
from .hecke import Partition, hook_dim, is_n_regular, simple_dims_hooks, verify_identities
from .expr import format_expr, parse_element
from .verify import run_suite

__version__ = "0.1.0"
