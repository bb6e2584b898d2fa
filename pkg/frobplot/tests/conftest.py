import pytest

pytest.importorskip("frobplot")

from pathlib import Path

FIXDIR = Path(__file__).parent / "fixtures"


@pytest.fixture
def trials_csv() -> str:
    return str(FIXDIR / "trials.csv")


@pytest.fixture
def ratios_csv() -> str:
    return str(FIXDIR / "ratios.csv")


@pytest.fixture
def prime_ratios_csv() -> str:
    return str(FIXDIR / "ratios_primes.csv")


@pytest.fixture(autouse=True)
def close_figures():
    yield
    import matplotlib.pyplot as plt

    plt.close("all")
