import os
import tempfile

import pytest

# keep the det A cache out of the user's home directory during tests
os.environ.setdefault("FREEDIV_CACHE", tempfile.mkdtemp(prefix="freediv-test-"))


@pytest.fixture(scope="session")
def mats():
    from freediv.a4 import build_matrices

    return build_matrices()
