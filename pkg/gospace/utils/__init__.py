from gospace.utils.json_utils import dumps_report  # NOQA
from gospace.utils.json_utils import load_json  # NOQA
from gospace.utils.json_utils import save_json  # NOQA
from gospace.utils.parallel_utils import get_n_jobs  # NOQA
from gospace.utils.parallel_utils import parallel_map  # NOQA
