import pytest
from hypothesis import settings

settings.register_profile("repo", max_examples=30, deadline=None)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def small_complexes():
    from adcalc.constructions import disk_complex, globular_sum, simplex_complex

    return [
        disk_complex(0),
        disk_complex(1),
        disk_complex(2),
        simplex_complex(1),
        simplex_complex(2),
        globular_sum([1, 0, 1]).complex,
    ]
