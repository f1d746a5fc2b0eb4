from gospace import exactla  # NOQA
from gospace import liespace  # NOQA
from gospace import geodesic  # NOQA
from gospace import natred  # NOQA
from gospace import invariants  # NOQA
from gospace import family  # NOQA
from gospace import cli  # NOQA

# --- config variable definitions ---
from gospace.config import *  # NOQA


from gospace import _version  # NOQA


__version__ = _version.__version__
