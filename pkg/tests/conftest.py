"""
Pytest 配置文件
"""
import pytest
import sys
import os

# 將項目根目錄加入 Python 路徑
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from app.extensions import init_extensions  # noqa: E402

TEST_DPS = 50


@pytest.fixture(scope='session', autouse=True)
def working_precision():
    """所有測試使用相同的 mpmath 精度"""
    return init_extensions(TEST_DPS)


@pytest.fixture
def twisted_cubic():
    """γ(t) = (t, t², t³)"""
    from app.core.frenet.curves import twisted_cubic
    return twisted_cubic()


@pytest.fixture
def unit_circle():
    from app.core.frenet.registry import builtin_curve
    return builtin_curve('circle')


@pytest.fixture
def helix():
    """單位速率 helix，κ_1 = κ_2 = 1/2"""
    from app.core.frenet.registry import builtin_curve
    return builtin_curve('helix')


@pytest.fixture
def circle_samples():
    """密集取樣的單位圓（步長 1e-3）"""
    import numpy as np
    from app.core.frenet.curves import SampledCurve
    t = np.linspace(0.0, 2 * np.pi, 6284)
    return SampledCurve(parameters=t, points=np.column_stack([np.cos(t), np.sin(t)]), name='circle')
