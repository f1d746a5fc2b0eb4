from gospace.invariants.commutator import commutator_report  # NOQA
from gospace.invariants.commutator import find_refutations  # NOQA
from gospace.invariants.commutator import reduced_commutator  # NOQA
from gospace.invariants.commutator import symmetrized_invariants  # NOQA
from gospace.invariants.derivation import check_invariants_realform  # NOQA
from gospace.invariants.derivation import derivation_matrix  # NOQA
from gospace.invariants.derivation import invariant_basis  # NOQA
from gospace.invariants.derivation import invariant_dimensions  # NOQA
from gospace.invariants.pbw import PBWAlgebra  # NOQA
from gospace.invariants.pbw import PBWElement  # NOQA
from gospace.invariants.sym_poly import monomial_count  # NOQA
from gospace.invariants.sym_poly import monomials  # NOQA
from gospace.invariants.sym_poly import SymPoly  # NOQA
