import pytest

from polariton_lab.config import default_config


@pytest.fixture(scope="session")
def cfg():
    return default_config()


@pytest.fixture(scope="session")
def iface(cfg):
    return cfg.media.interface()
