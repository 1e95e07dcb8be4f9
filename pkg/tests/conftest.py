import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from invsum import kernels  # noqa: E402

SMALL_ODD_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


@pytest.fixture(scope="module", params=sorted(kernels.BACKENDS))
def backend(request):
    return kernels.BACKENDS[request.param]
