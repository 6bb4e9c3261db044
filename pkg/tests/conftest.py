import pytest

from helpers import make_a4, make_a5, make_s3, make_s4, make_s5


@pytest.fixture(scope="session")
def s3():
    return make_s3()


@pytest.fixture(scope="session")
def s4():
    return make_s4()


@pytest.fixture(scope="session")
def s5():
    return make_s5()


@pytest.fixture(scope="session")
def a4():
    return make_a4()


@pytest.fixture(scope="session")
def a5():
    return make_a5()


@pytest.fixture(scope="session")
def sweep24():
    import time
    from subdepth.corpus import run_sweep
    t0 = time.monotonic()
    report = run_sweep(24)
    report.elapsed = time.monotonic() - t0
    return report


@pytest.fixture(scope="session")
def uq2():
    from subdepth.hopfcore import build_small_quantum_group
    return build_small_quantum_group(2)


@pytest.fixture(scope="session")
def uq3():
    from subdepth.hopfcore import build_small_quantum_group
    return build_small_quantum_group(3)
