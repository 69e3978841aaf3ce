from __future__ import annotations

import pytest

from foregone.scenarios import build_registry

# Most unit tests get by on a few seeds; the acceptance suite uses the
# full default of sixteen where a criterion calls for it.
FEW_SEEDS = (0, 1, 2, 3)


@pytest.fixture(scope="session")
def registry():
    return build_registry()
