from gospace.exactla.matrix import add_vectors  # NOQA
from gospace.exactla.matrix import DimensionMismatchError  # NOQA
from gospace.exactla.matrix import kernel_basis  # NOQA
from gospace.exactla.matrix import Matrix  # NOQA
from gospace.exactla.matrix import rank  # NOQA
from gospace.exactla.matrix import solve_linear  # NOQA
from gospace.exactla.matrix import zero_vector  # NOQA
from gospace.exactla.scalar import conjugate  # NOQA
from gospace.exactla.scalar import format_scalar  # NOQA
from gospace.exactla.scalar import GAUSSIAN  # NOQA
from gospace.exactla.scalar import get_domain  # NOQA
from gospace.exactla.scalar import get_field_name  # NOQA
from gospace.exactla.scalar import parse_scalar  # NOQA
from gospace.exactla.scalar import RATIONAL  # NOQA
from gospace.exactla.scalar import ScalarParseError  # NOQA
from gospace.exactla.scalar import to_domain  # NOQA
