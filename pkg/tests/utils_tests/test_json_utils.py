import os

import pytest

from gospace.exactla.matrix import Matrix
from gospace.exactla.scalar import QQ
from gospace.exactla.scalar import QQ_I
from gospace.utils.json_utils import dumps_report
from gospace.utils.json_utils import load_json
from gospace.utils.json_utils import save_json

params = {
    'a_int': 1,
    'b_str': 'string',
    'c_list': [1, 2, 3],
    'd_tuple': (1, 2),
    'q_rational': QQ(-3, 4),
    'q_gaussian': QQ_I(1, -2),
    'm_matrix': Matrix([[1, QQ(1, 2)], [0, -1]], QQ),
}

params_invalid = {
    'lambda_function': lambda x: x * 2,
}


def test_save_json(tmpdir):
    filepath = os.path.join(str(tmpdir), 'tmp.json')
    save_json(filepath, params)
    assert os.path.exists(filepath)


def test_save_json_ignore_error(tmpdir):
    filepath = os.path.join(str(tmpdir), 'tmp.json')

    # 1. should raise error when ignore_error=False
    with pytest.raises(TypeError):
        save_json(filepath, params_invalid, ignore_error=False)

    # 2. should not raise error when ignore_error=True
    save_json(filepath, params_invalid, ignore_error=True)


def test_load_json(tmpdir):
    filepath = os.path.join(str(tmpdir), 'tmp.json')
    save_json(filepath, params)

    params_load = load_json(filepath)
    expected_params_load = {
        'a_int': 1,
        'b_str': 'string',
        'c_list': [1, 2, 3],
        'd_tuple': [1, 2],
        'q_rational': '-3/4',
        'q_gaussian': '1-2i',
        'm_matrix': [['1', '1/2'], ['0', '-1']],
    }
    assert params_load == expected_params_load


def test_dumps_report_keeps_order():
    text = dumps_report({'z': 1, 'a': QQ(1, 3)})
    assert text.index('"z"') < text.index('"a"')
    assert '"1/3"' in text


if __name__ == '__main__':
    pytest.main([__file__, '-v', '-s'])
