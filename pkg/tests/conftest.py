import pytest

from bigonslide.assembly import build_surface_S
from bigonslide.cutmodel import build_standard_cut_model, enumerate_completions


@pytest.fixture(scope="session")
def surface():
    cache = {}

    def get(t):
        if t not in cache:
            cache[t] = build_surface_S(t)
        return cache[t]

    return get


@pytest.fixture(scope="session")
def nonslidable():
    def get(t, alpha=1):
        return next(c for c in enumerate_completions(build_standard_cut_model(t, alpha)) if not c.slidable)

    return get
