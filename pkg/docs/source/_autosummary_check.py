import inspect
import os
import types

import gospace.family
import gospace.geodesic
import gospace.invariants
import gospace.liespace
import gospace.natred

_documented_packages = (gospace.liespace, gospace.geodesic, gospace.natred,
                        gospace.invariants, gospace.family)


def _is_rst_exists(entity):
    return os.path.exists('source/generated/{}.rst'.format(entity))


def check(app, exception):
    missing_entities = [name for name in _list_exported()
                        if not _is_rst_exists(name)]
    if len(missing_entities) != 0:
        app.warn('\n'.join([
            'Undocumented entities found.',
            '',
        ] + missing_entities))


def _list_exported():
    # functions and classes re-exported by the subpackages
    names = []
    for package in _documented_packages:
        for name, entity in package.__dict__.items():
            if isinstance(entity, types.FunctionType) or \
                    inspect.isclass(entity):
                names.append('{}.{}'.format(package.__name__, name))
    return sorted(names)
