import os
from logging import getLogger

from gospace.config import CATALOG_ENV
from gospace.config import DEFAULT_CATALOG_DIR
from gospace.family.family import load_family
from gospace.liespace.space_io import load_space
from gospace.liespace.space_io import SpaceFormatError
from gospace.liespace.validation import validate
from gospace.utils.json_utils import load_json


class CatalogError(Exception):
    pass


def get_catalog_dir(catalog_dir=None):
    """Catalog directory: argument, then ``GOSPACE_CATALOG``, then default."""
    return catalog_dir or os.environ.get(CATALOG_ENV) or DEFAULT_CATALOG_DIR


class Catalog(object):
    """Named spaces and families of a catalog directory.

    Every ``*.json`` file is loaded; documents with a ``crown`` field are
    families, the others spaces. All entries must validate and names must be
    unique.

    Args:
        catalog_dir (str or None): directory, see :func:`get_catalog_dir`.
        logger:

    """

    def __init__(self, catalog_dir=None, logger=None):
        self.logger = logger or getLogger(__name__)
        self.catalog_dir = get_catalog_dir(catalog_dir)
        if not os.path.isdir(self.catalog_dir):
            raise CatalogError('catalog directory {} does not exist'
                               .format(self.catalog_dir))
        self.spaces = {}
        self.families = {}
        self.paths = {}
        for filename in sorted(os.listdir(self.catalog_dir)):
            if not filename.endswith('.json'):
                continue
            self._load(os.path.join(self.catalog_dir, filename))
        self.logger.info('catalog {}: {} spaces, {} families'.format(
            self.catalog_dir, len(self.spaces), len(self.families)))

    def _load(self, path):
        try:
            is_family = 'crown' in load_json(path)
            if is_family:
                entry = load_family(path, catalog_dir=self.catalog_dir,
                                    logger=self.logger)
            else:
                entry = load_space(path)
        except (SpaceFormatError, ValueError) as e:
            raise CatalogError('{}: {}'.format(path, e))
        if entry.name in self.paths:
            raise CatalogError('duplicate catalog name {} in {} and {}'
                               .format(entry.name, self.paths[entry.name],
                                       path))
        self.paths[entry.name] = path
        if is_family:
            self.families[entry.name] = entry
            return
        report = validate(entry, logger=self.logger)
        if not report.ok:
            raise CatalogError('{} fails validation: {}'.format(
                path, ', '.join(report.failed_checks())))
        self.spaces[entry.name] = entry

    def space_names(self):
        return sorted(self.spaces)

    def family_names(self):
        return sorted(self.families)

    def get_space(self, name):
        try:
            return self.spaces[name]
        except KeyError:
            raise CatalogError('unknown space {}'.format(name))

    def get_family(self, name):
        try:
            return self.families[name]
        except KeyError:
            raise CatalogError('unknown family {}'.format(name))
