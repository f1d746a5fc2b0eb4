from gospace.exactla.scalar import GAUSSIAN
from gospace.liespace.reductive_space import Tag
from gospace.liespace.reductive_space import TAG_NAMES
from gospace.liespace.reductive_space import UNKNOWN


class FieldError(ValueError):
    pass


def complexify(space, name=None):
    """Crown of a rational space: same structure constants over ``QQ_I``.

    Literature tags do not transfer and are reset to 'unknown'. The crown's
    signature is reported as ``(n, n)`` with ``n = dim m``.

    Args:
        space (ReductiveSpace): space over the rationals.
        name (str or None): name of the crown, defaults to
            ``<name>-crown``.

    Returns (ReductiveSpace): space over the Gaussian rationals.

    """
    if not space.is_rational():
        raise FieldError('{} is already over the Gaussian rationals'
                         .format(space.name))
    source = 'complexification of {}'.format(space.name)
    tags = dict((t, Tag(UNKNOWN, source)) for t in TAG_NAMES)
    return space.copy(name=name or '{}-crown'.format(space.name),
                      field=GAUSSIAN, tags=tags)
