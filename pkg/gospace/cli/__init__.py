from gospace.cli.analysis import analyze  # NOQA
from gospace.cli.catalog import Catalog  # NOQA
from gospace.cli.catalog import CatalogError  # NOQA
from gospace.cli.main import run  # NOQA
