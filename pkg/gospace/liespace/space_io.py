"""Reading and writing the space file format (UTF-8 JSON)."""
import os

from gospace.exactla.matrix import Matrix
from gospace.exactla.scalar import format_scalar
from gospace.exactla.scalar import get_domain
from gospace.exactla.scalar import parse_scalar
from gospace.exactla.scalar import ScalarParseError
from gospace.liespace.reductive_space import ReductiveSpace
from gospace.liespace.reductive_space import Tag
from gospace.liespace.reductive_space import TAG_NAMES
from gospace.liespace.reductive_space import UNKNOWN
from gospace.utils.json_utils import load_json
from gospace.utils.json_utils import save_json

SPACE_FIELDS = ('name', 'field', 'dimension', 'basis', 'brackets',
                'isotropy', 'metric', 'tags')
_REQUIRED_FIELDS = ('name', 'field', 'dimension', 'basis', 'brackets',
                    'isotropy', 'metric')
_KIND_NAMES = {dict: 'an object', list: 'a list', str: 'a string'}


class SpaceFormatError(ValueError):
    pass


def _parse_index(value, dim, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpaceFormatError('{} must be an integer, got {!r}'
                               .format(what, value))
    if not 0 <= value < dim:
        raise SpaceFormatError('{} {} out of range [0, {})'
                               .format(what, value, dim))
    return value


def _parse_tags(tags):
    if not isinstance(tags, dict):
        raise SpaceFormatError('tags must be an object')
    result = {}
    for name, entry in tags.items():
        if name not in TAG_NAMES:
            raise SpaceFormatError('unknown tag {!r}'.format(name))
        if not isinstance(entry, dict) or set(entry) - {'value', 'source'}:
            raise SpaceFormatError(
                'tag {!r} must be an object with value and source'
                .format(name))
        value = entry.get('value', UNKNOWN)
        if value not in (True, False, UNKNOWN):
            raise SpaceFormatError('tag {!r} has invalid value {!r}'
                                   .format(name, value))
        result[name] = Tag(value, str(entry.get('source', '')))
    return result


def _expect(value, kind, what):
    if not isinstance(value, kind):
        raise SpaceFormatError('{} must be {}, got {}'.format(
            what, _KIND_NAMES[kind], type(value).__name__))
    return value


def _parse_brackets(entries, dim, domain):
    brackets = {}
    for entry in _expect(entries, list, 'brackets'):
        _expect(entry, dict, 'bracket entry')
        if set(entry) != {'i', 'j', 'coeffs'}:
            raise SpaceFormatError(
                'bracket entry must have exactly i, j, coeffs: {!r}'
                .format(entry))
        i = _parse_index(entry['i'], dim, 'bracket index i')
        j = _parse_index(entry['j'], dim, 'bracket index j')
        if i >= j:
            raise SpaceFormatError(
                'bracket entries need i < j, got ({}, {})'.format(i, j))
        if (i, j) in brackets:
            raise SpaceFormatError(
                'duplicate bracket entry ({}, {})'.format(i, j))
        coeffs = {}
        for k, value in _expect(entry['coeffs'], dict, 'coeffs').items():
            try:
                k = int(k)
            except ValueError:
                raise SpaceFormatError(
                    'coefficient key must be an index, got {!r}'.format(k))
            coeffs[_parse_index(k, dim, 'coefficient index')] = \
                parse_scalar(value, domain)
        brackets[(i, j)] = coeffs
    return brackets


def _parse_metric(rows, n, domain):
    _expect(rows, list, 'metric')
    for row in rows:
        _expect(row, list, 'metric row')
    if len(rows) != n or any(len(row) != n for row in rows):
        raise SpaceFormatError(
            'metric must be a {0}x{0} matrix on the complement'.format(n))
    return Matrix.from_strings(rows, domain, cols=n)


def parse_space(params):
    """Builds a :class:`ReductiveSpace` from a decoded space document.

    Every structural mistake in the document, wrong JSON types included,
    is reported as :class:`SpaceFormatError`.

    Args:
        params (dict): decoded JSON document.

    Returns (ReductiveSpace): the space, not yet validated.

    """
    _expect(params, dict, 'space document')
    unknown = sorted(set(params) - set(SPACE_FIELDS))
    if unknown:
        raise SpaceFormatError('unknown fields {}'.format(unknown))
    missing = [f for f in _REQUIRED_FIELDS if f not in params]
    if missing:
        raise SpaceFormatError('missing fields {}'.format(missing))

    name = _expect(params['name'], str, 'name')
    field = _expect(params['field'], str, 'field')
    try:
        domain = get_domain(field)
    except ValueError as e:
        raise SpaceFormatError(str(e))
    dim = params['dimension']
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise SpaceFormatError('dimension must be a nonnegative integer')
    basis = _expect(params['basis'], list, 'basis')
    if len(basis) != dim:
        raise SpaceFormatError('basis must list {} labels'.format(dim))
    for label in basis:
        _expect(label, str, 'basis label')
    if len(set(basis)) != len(basis):
        raise SpaceFormatError('basis labels must be unique')

    try:
        brackets = _parse_brackets(params['brackets'], dim, domain)
        isotropy = [_parse_index(a, dim, 'isotropy index')
                    for a in _expect(params['isotropy'], list, 'isotropy')]
        if len(set(isotropy)) != len(isotropy):
            raise SpaceFormatError('isotropy indices must be unique')
        metric = _parse_metric(params['metric'], dim - len(isotropy), domain)
    except ScalarParseError as e:
        raise SpaceFormatError(str(e))

    tags = _parse_tags(params.get('tags', {}))
    return ReductiveSpace(name, field, basis, brackets, isotropy, metric,
                          tags=tags)


def load_space(filepath):
    """Loads a space file.

    Args:
        filepath (str): path to the JSON space file.

    Returns (ReductiveSpace): the space, not yet validated.

    """
    if not os.path.exists(filepath):
        raise SpaceFormatError('space file {} does not exist'
                               .format(filepath))
    try:
        params = load_json(filepath)
    except ValueError as e:
        raise SpaceFormatError('{} is not valid JSON: {}'.format(filepath, e))
    return parse_space(params)


def dump_space(space):
    """Space document for `space`, in the space file format."""
    brackets = []
    for (i, j), coeffs in sorted(space.bracket_table().items()):
        brackets.append({
            'i': i, 'j': j,
            'coeffs': dict((str(k), format_scalar(v))
                           for k, v in sorted(coeffs.items()))})
    tags = {}
    for name in TAG_NAMES:
        tag = space.tags[name]
        tags[name] = {'value': tag.value, 'source': tag.source}
    return {
        'name': space.name,
        'field': space.field,
        'dimension': space.dim,
        'basis': list(space.basis_labels),
        'brackets': brackets,
        'isotropy': list(space.isotropy),
        'metric': space.metric.tolist(),
        'tags': tags,
    }


def save_space(filepath, space):
    save_json(filepath, dump_space(space), indent=2)
