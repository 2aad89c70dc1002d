# -*- coding: utf-8 -*-
"""θ-Reed–Muller 랭크 메트릭 부호 라이브러리"""

__version__ = "0.1.0"
