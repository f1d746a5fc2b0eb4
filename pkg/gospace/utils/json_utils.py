import json
from logging import getLogger

from gospace.exactla.matrix import Matrix
from gospace.exactla.scalar import format_scalar
from gospace.exactla.scalar import QQ
from gospace.exactla.scalar import QQ_I


class JSONEncoderEX(json.JSONEncoder):
    """Encoder class used for `json.dump`

    Scalars are written with the scalar grammar and matrices as nested lists
    of scalar strings.
    """

    def default(self, obj):
        if isinstance(obj, Matrix):
            return obj.tolist()
        elif isinstance(obj, (QQ.dtype, QQ_I.dtype)):
            return format_scalar(obj)
        elif hasattr(obj, 'to_dict'):
            return obj.to_dict()
        else:
            return super(JSONEncoderEX, self).default(obj)


def dumps_report(params, indent=2):
    """Serializes a report with its key order preserved."""
    return json.dumps(params, indent=indent, cls=JSONEncoderEX,
                      ensure_ascii=False)


def save_json(filepath, params, ignore_error=False, indent=4, logger=None):
    """Save `params` to `filepath` in json format.

    Args:
        filepath (str): filepath to save args
        params (dict or list): parameters to be saved.
        ignore_error (bool): If `True`, it will ignore exception with printing
            error logs, which prevents to stop.
        indent (int): Indent for saved file.
        logger:

    """
    try:
        with open(filepath, 'w', encoding='utf-8') as f:
            json.dump(params, f, indent=indent, cls=JSONEncoderEX,
                      ensure_ascii=False)
            f.write('\n')
    except Exception as e:
        if not ignore_error:
            raise e
        else:
            logger = logger or getLogger(__name__)
            logger.warning('Error occurred at save_json, but ignoring...')
            logger.warning('The file {} may not be saved or corrupted.'
                           .format(filepath))
            logger.warning(e)


def load_json(filepath):
    """Load params, which is stored in json format.

    Args:
        filepath (str): filepath to json file to load.

    Returns (dict or list): params
    """
    with open(filepath, 'r', encoding='utf-8') as f:
        params = json.load(f)
    return params
