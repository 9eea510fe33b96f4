import mpmath
import pytest

from elliptica import make_context

# Dyadic tau (binary-exact real and imaginary parts) so that frozen-value
# comparisons do not depend on the precision at which a decimal literal was
# parsed.
TAU_DYADIC = mpmath.mpc(0.3125, 1.125)


@pytest.fixture(scope="session")
def ctx():
    """Workhorse context: generic dyadic tau, default 30 digits."""
    return make_context(TAU_DYADIC)


@pytest.fixture(scope="session")
def ctx50():
    """Same tau at 50 working digits, for oracle comparisons."""
    return make_context(TAU_DYADIC, digits=50)
