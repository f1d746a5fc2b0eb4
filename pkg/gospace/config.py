import os

# --- Configuration ---
# Environment variable which caps the number of workers.
THREADS_ENV = 'GOSPACE_THREADS'
# Environment variable which overrides the catalog directory.
CATALOG_ENV = 'GOSPACE_CATALOG'


# --- Constant definitions ---
DEFAULT_NUM_SAMPLES = 200
DEFAULT_SEED = 0
# random coordinates are drawn from [-DEFAULT_BOUND, DEFAULT_BOUND]
DEFAULT_BOUND = 10
DEFAULT_MAX_DEGREE = 4
DEFAULT_CERTIFICATE_SAMPLES = 1000

DEFAULT_CATALOG_DIR = os.path.normpath(os.path.join(
    os.path.dirname(os.path.abspath(__file__)), os.pardir, 'catalog'))
