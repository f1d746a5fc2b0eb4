from gospace.geodesic.go_checker import certify_go_linear  # NOQA
from gospace.geodesic.go_checker import check_crown_go_consistency  # NOQA
from gospace.geodesic.go_checker import check_go  # NOQA
from gospace.geodesic.go_checker import check_omega_realform  # NOQA
from gospace.geodesic.go_checker import GO_MODES  # NOQA
from gospace.geodesic.go_checker import is_linear_section  # NOQA
from gospace.geodesic.go_checker import linear_section_system  # NOQA
from gospace.geodesic.go_checker import refute_go  # NOQA
from gospace.geodesic.go_checker import sample_go  # NOQA
from gospace.geodesic.go_checker import verify_graph_map  # NOQA
from gospace.geodesic.moduli import geodesic_system  # NOQA
from gospace.geodesic.moduli import ModuliPoint  # NOQA
from gospace.geodesic.moduli import omega_member  # NOQA
from gospace.geodesic.moduli import phi  # NOQA
from gospace.geodesic.moduli import solve_geodesic_vector  # NOQA
from gospace.geodesic.moduli import ZeroVectorError  # NOQA
from gospace.geodesic.verdict import CERTIFIED  # NOQA
from gospace.geodesic.verdict import GoVerdict  # NOQA
from gospace.geodesic.verdict import INCONCLUSIVE  # NOQA
from gospace.geodesic.verdict import REFUTED  # NOQA
from gospace.geodesic.verdict import SAMPLED  # NOQA
