from gospace.family.conjugation import Conjugation  # NOQA
from gospace.family.conjugation import ConjugationError  # NOQA
from gospace.family.conjugation import validate_conjugation  # NOQA
from gospace.family.crown import complexify  # NOQA
from gospace.family.crown import FieldError  # NOQA
from gospace.family.family import compare_with_crown  # NOQA
from gospace.family.family import Family  # NOQA
from gospace.family.family import family_verify  # NOQA
from gospace.family.family import FamilyMember  # NOQA
from gospace.family.family import load_family  # NOQA
from gospace.family.family import parse_family  # NOQA
from gospace.family.inclusion_audit import AuditReport  # NOQA
from gospace.family.inclusion_audit import inclusion_audit  # NOQA
from gospace.family.real_form import real_form  # NOQA
