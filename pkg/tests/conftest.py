import warnings

import pytest

from tracecodes import families


@pytest.fixture(autouse=True)
def _quiet_extrapolation():
    # Worked examples outside a proven range warn by design; tests that care
    # about the warning assert it explicitly with pytest.warns.
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", families.ExtrapolationWarning)
        yield
