import pytest

from latmac.classgroup import classify, enumerate_products
from latmac.order import OrderCtx
from latmac.presets import EXAMPLES
from latmac.ring import PolyRingFp


@pytest.fixture(scope="session")
def ex1():
    return OrderCtx("Z", "x^3+4*x-1")


@pytest.fixture(scope="session")
def ex2():
    return OrderCtx("GF(2)[t]", "y^3+(t^3+t^2+t)")


@pytest.fixture(scope="session")
def F2():
    return PolyRingFp(2)


@pytest.fixture(scope="session")
def F3():
    return PolyRingFp(3)


def _corpus(example):
    p = EXAMPLES[example]
    ctx = OrderCtx(p.ring, p.f)
    return ctx, enumerate_products(ctx, p.prime_bound, p.exp_bound, p.max_factors)


@pytest.fixture(scope="session")
def corpus1():
    return _corpus(1)


@pytest.fixture(scope="session")
def corpus2():
    return _corpus(2)


@pytest.fixture(scope="session")
def table1(corpus1):
    _, items = corpus1
    return classify([b for b, _ in items], EXAMPLES[1].box, dict(items))


@pytest.fixture(scope="session")
def table2(corpus2):
    _, items = corpus2
    return classify([b for b, _ in items], EXAMPLES[2].box, dict(items))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for name in sorted(RESULTS, key=lambda k: int(k[1:])):
            terminalreporter.write_line(RESULTS[name])
