# -*- coding: utf-8 -*-
"""
공용 픽스처: 타워와 시드 고정 난수 생성기

타워 생성(특히 검증)이 가장 비싸므로 세션 범위로 한 번만 만듭니다.
"""

import numpy as np
import pytest

from core.tower import build_artin_schreier_tower, build_finite_tower, build_kummer_tower

T = 0b10
T3 = 0b1000
T5 = 0b100000


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def kummer2():
    return build_kummer_tower([2])


@pytest.fixture(scope="session")
def kummer23():
    return build_kummer_tower([2, 3])


@pytest.fixture(scope="session")
def kummer235():
    return build_kummer_tower([2, 3, 5])


@pytest.fixture(scope="session")
def kummer2357():
    return build_kummer_tower([2, 3, 5, 7])


@pytest.fixture(scope="session")
def gf64():
    """F_{2^6}, shape (3, 2)"""
    return build_finite_tower(2, (3, 2))


@pytest.fixture(scope="session")
def gf128():
    """F_{2^7}, 순환 shape (7,)"""
    return build_finite_tower(2, (7,))


@pytest.fixture(scope="session")
def gf2_15():
    """F_{2^15}, shape (5, 3)"""
    return build_finite_tower(2, (5, 3))


@pytest.fixture(scope="session")
def as_t_t3():
    """F_2(t)(α_1, α_2), a = (t, t³)"""
    return build_artin_schreier_tower([(T, 1), (T3, 1)])


@pytest.fixture(scope="session")
def as_t_t3_t5():
    return build_artin_schreier_tower([(T, 1), (T3, 1), (T5, 1)])
