import random

import pytest
from hypothesis import given, settings, strategies as st

from adcalc.cells import cell_identity, enumerate_adc_morphisms, enumerate_cells
from adcalc.complexes import ComplexError
from adcalc.constructions import disk_complex, simplex_complex
from adcalc.homotopy import ANTIHOMOTOPY, HOMOTOPY, homotopy_identity, random_family_from
from adcalc.transformations import (
    OplaxOnAtoms,
    atoms_of,
    corrupt,
    identity_transformation,
    nu_of_homotopy,
    on_atoms,
    oplax_validate,
    same_components,
    validate_on_atoms,
)

K, L = disk_complex(1), simplex_complex(2)
HOMS = enumerate_adc_morphisms(K, L, 1)
CELLS = [c for i in range(3) for c in enumerate_cells(K, i, 1)]


def _homotopy(seed):
    rng = random.Random(seed)
    for _ in range(200):
        drawn = random_family_from(rng.choice(HOMS), rng.randrange(1 << 30), HOMOTOPY)
        if drawn and any(not c.is_zero() for c in drawn[1].components.values()):
            return drawn[1]
    pytest.skip("no nonzero homotopy drawn")


@settings(max_examples=15)
@given(st.integers(0, 10_000))
def test_nu_of_a_homotopy_is_oplax(seed):
    alpha = nu_of_homotopy(_homotopy(seed))
    assert oplax_validate(alpha, CELLS).ok
    assert validate_on_atoms(on_atoms(alpha)).ok


def test_identity_homotopy_gives_the_identity():
    f = HOMS[3]
    assert same_components(nu_of_homotopy(homotopy_identity(f, HOMOTOPY)), identity_transformation(f), CELLS)


def test_corrupted_component_is_caught():
    alpha = nu_of_homotopy(_homotopy(1))
    atom = atoms_of(K)[-1]
    broken = corrupt(alpha, atom, cell_identity(alpha.component(atom)))
    assert not oplax_validate(broken, CELLS).ok
    bad_atoms = OplaxOnAtoms(alpha.source, alpha.target, dict(on_atoms(alpha).assignment))
    bad_atoms.assignment[next(iter(atom.top.support()))] = cell_identity(alpha.component(atom))
    assert not validate_on_atoms(bad_atoms).ok


def test_antihomotopies_are_refused():
    with pytest.raises(ComplexError):
        nu_of_homotopy(homotopy_identity(HOMS[0], ANTIHOMOTOPY))
