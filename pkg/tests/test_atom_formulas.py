import pytest

from adcalc.acceptance import join_atom_formula, tensor_atom_formula
from adcalc.chains import Chain
from adcalc.complexes import generator_atom
from adcalc.constructions import chi_morphism, disk_complex, join_name, simplex_complex, tensor, tensor_name


def test_edge_between_two_points_starts_at_the_left_point():
    a, b = disk_complex(0, "a"), disk_complex(0, "b")
    edge = join_name("a₀", "b₀")
    assert join_atom_formula(a, b, "a₀", "b₀", 0, 0) == Chain(0, {join_name("a₀", None): 1})
    assert join_atom_formula(a, b, "a₀", "b₀", 0, 1) == Chain(0, {join_name(None, "b₀"): 1})
    assert join_atom_formula(a, b, "a₀", "b₀", 1, 0) == Chain(1, {edge: 1})


@pytest.mark.parametrize("m,n", [(0, 1), (1, 0), (1, 1), (0, 2), (2, 1)])
def test_join_formula_agrees_with_simplex_atoms_through_chi(m, n):
    K, L = simplex_complex(m), simplex_complex(n)
    chi = chi_morphism(m, n)
    T = chi.target
    for x in [None] + K.all_generators():
        for y in [None] + L.all_generators():
            if x is None and y is None:
                continue
            gen = join_name(x, y)
            (image,) = chi.maps[gen].support()
            table = generator_atom(T, image)
            for r in range(T.degree_of(image) + 1):
                for side in (0, 1):
                    assert chi.apply(join_atom_formula(K, L, x, y, r, side)) == table.row(r, side)


def test_square_atom_from_the_tensor_formula():
    # d(x₁⊗x₁) = (x¹₀ − x⁰₀)⊗x₁ − x₁⊗(x¹₀ − x⁰₀); the source is its negative part
    D = disk_complex(1)
    src = tensor_atom_formula(D, D, "x₁", "x₁", 1, 0)
    assert src == Chain(1, {tensor_name("x⁰₀", "x₁"): 1, tensor_name("x₁", "x¹₀"): 1})
    assert src == generator_atom(tensor(D, D), tensor_name("x₁", "x₁")).row(1, 0)
