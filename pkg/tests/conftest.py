"""Optional backend forcing: pytest --rational-backend {gmpy2,fractions}."""

from __future__ import annotations


def pytest_addoption(parser):
    parser.addoption(
        "--rational-backend",
        default=None,
        choices=("gmpy2", "fractions"),
        help="force the exact-arithmetic backend for the whole run",
    )


def pytest_configure(config):
    name = config.getoption("--rational-backend")
    if name:
        from chainbrackets import fockoracle
        from chainbrackets.exactnum import set_backend

        set_backend(name)
        fockoracle.clear_caches()
