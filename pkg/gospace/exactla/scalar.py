"""Exact scalars over the rationals and the Gaussian rationals.

Scalars are plain elements of sympy's ``QQ`` and ``QQ_I`` domains. This module
only adds the text grammar used by every file format and a few conversions.
"""
import re

from sympy.polys.domains import QQ
from sympy.polys.domains import QQ_I

RATIONAL = 'rational'
GAUSSIAN = 'gaussian'

_domain_dict = {
    RATIONAL: QQ,
    GAUSSIAN: QQ_I,
}

_RAT = r'\d+(?:/\d+)?'
_scalar_pattern = re.compile(
    r'^(?P<re>-?{r})(?:(?P<sign>[+-])(?P<im>{r})?\*?i)?$'
    r'|^(?P<isign>-?)(?P<ionly>{r})?\*?i$'.format(r=_RAT))


class ScalarParseError(ValueError):
    pass


def get_domain(field):
    """Returns the sympy domain of `field` ('rational' or 'gaussian')."""
    try:
        return _domain_dict[field]
    except KeyError:
        raise ValueError('field must be one of {}, got {}'
                         .format(sorted(_domain_dict.keys()), field))


def get_field_name(domain):
    if domain == QQ_I:
        return GAUSSIAN
    elif domain == QQ:
        return RATIONAL
    raise ValueError('unsupported domain {}'.format(domain))


def is_gaussian(value):
    return isinstance(value, QQ_I.dtype)


def _parse_rational(text):
    if '/' in text:
        num, den = text.split('/')
    else:
        num, den = text, '1'
    if int(den) == 0:
        raise ScalarParseError('zero denominator in {!r}'.format(text))
    return QQ(int(num), int(den))


def parse_scalar(text, domain=QQ_I):
    """Parses the scalar grammar into an element of `domain`.

    Accepted forms are ``3``, ``-2/5``, ``1/2+3/4i``, ``i``, ``-i`` and
    ``2/3*i``.

    Args:
        text (str or int): scalar text. Integers are accepted as is.
        domain: ``QQ`` or ``QQ_I``. Imaginary parts are rejected for ``QQ``.

    Returns: domain element

    """
    if isinstance(text, bool):
        raise ScalarParseError('boolean is not a scalar: {!r}'.format(text))
    if isinstance(text, int):
        return to_domain(QQ(text), domain)
    if not isinstance(text, str):
        raise ScalarParseError('scalar must be a string, got {}'
                               .format(type(text).__name__))
    match = _scalar_pattern.match(text.strip().replace(' ', ''))
    if match is None:
        raise ScalarParseError('invalid scalar {!r}'.format(text))
    if match.group('re') is not None:
        re_part = _parse_rational(match.group('re'))
        if match.group('sign') is None:
            im_part = QQ.zero
        else:
            im_part = _parse_rational(match.group('im') or '1')
            if match.group('sign') == '-':
                im_part = -im_part
    else:
        re_part = QQ.zero
        im_part = _parse_rational(match.group('ionly') or '1')
        if match.group('isign') == '-':
            im_part = -im_part
    if im_part and domain == QQ:
        raise ScalarParseError(
            'imaginary part in rational context: {!r}'.format(text))
    return to_domain(QQ_I(re_part, im_part), domain)


def _format_rational(q):
    if q.denominator == 1:
        return '{}'.format(q.numerator)
    return '{}/{}'.format(q.numerator, q.denominator)


def format_scalar(value):
    """Formats a domain element with the scalar grammar."""
    if not is_gaussian(value):
        return _format_rational(QQ.convert(value))
    re_part, im_part = value.x, value.y
    if not im_part:
        return _format_rational(re_part)
    im_text = '' if abs(im_part) == 1 else _format_rational(abs(im_part))
    if not re_part:
        return '{}{}i'.format('-' if im_part < 0 else '', im_text)
    return '{}{}{}i'.format(_format_rational(re_part),
                            '-' if im_part < 0 else '+', im_text)


def real_part(value):
    if is_gaussian(value):
        return value.x
    return QQ.convert(value)


def imag_part(value):
    if is_gaussian(value):
        return value.y
    return QQ.zero


def conjugate(value):
    if is_gaussian(value):
        return QQ_I(value.x, -value.y)
    return value


def to_domain(value, domain):
    """Converts ints, rationals and Gaussian rationals into `domain`.

    A Gaussian value with nonzero imaginary part cannot be moved into ``QQ``.
    """
    if is_gaussian(value):
        if domain == QQ_I:
            return value
        if value.y:
            raise ValueError('{} is not rational'.format(format_scalar(value)))
        return value.x
    if isinstance(value, int):
        value = QQ(value)
    if domain == QQ_I:
        return QQ_I(value, QQ.zero)
    return QQ.convert(value)
