import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--regen-golden",
        action="store_true",
        default=False,
        help="rewrite the golden CLI outputs instead of comparing against them",
    )


@pytest.fixture
def regen_golden(request):
    return request.config.getoption("--regen-golden")
