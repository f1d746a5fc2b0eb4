from gospace.natred.natural_reductivity import check_crown_natred  # NOQA
from gospace.natred.natural_reductivity import is_naturally_reductive  # NOQA
from gospace.natred.natural_reductivity import natred_implies_go_audit  # NOQA
from gospace.natred.natural_reductivity import NatTriple  # NOQA
from gospace.natred.natural_reductivity import psi  # NOQA
