from fractions import Fraction
from itertools import product

import pytest

from equitau.charclass import mu_model
from equitau.finitestab import (
    character_orbit_representatives,
    euler_phi,
    fixed_locus,
    ktheory_free_module_dimension,
    sector_dimensions,
    support_subgroup,
    vistoli_kernel_dimension,
)
from equitau.lattice import GroupDescriptor, TorsionCharacterPoint


def test_euler_phi_small_values():
    assert [euler_phi(n) for n in range(1, 9)] == [1, 1, 2, 2, 4, 2, 6, 4]


def test_support_subgroup_examples():
    z6 = GroupDescriptor(0, (6,))
    assert support_subgroup(z6, TorsionCharacterPoint(z6, (Fraction(1, 3),))) == GroupDescriptor(0, (3,))
    assert support_subgroup(z6, TorsionCharacterPoint.zero(z6)) == GroupDescriptor(0, ())
    assert support_subgroup(z6, TorsionCharacterPoint(z6, (Fraction(1, 6),))) == z6


def test_support_order_equals_point_order_exhaustive():
    descriptors = [
        GroupDescriptor(0, ()),
        GroupDescriptor(0, (8,)),
        GroupDescriptor(0, (24,)),
        GroupDescriptor(0, (2, 4)),
        GroupDescriptor(0, (2, 2, 2)),
        GroupDescriptor(0, (3, 3)),
    ]
    for desc in descriptors:
        for residues in product(*(range(d) for d in desc.torsion_orders)):
            values = tuple(Fraction(r, d) for r, d in zip(residues, desc.torsion_orders))
            point = TorsionCharacterPoint(desc, values)
            assert support_subgroup(desc, point).order() == point.order()


def test_fixed_locus_two_points():
    for d in (2, 4, 6):
        model = mu_model(d, [0, 1])
        for e in (d_ for d_ in range(2, d + 1) if d % d_ == 0):
            # H = mu_e is cut out by the characters that are multiples of e
            components = fixed_locus(model, [(e % d,)])
            assert [c.indices for c in components] == [(0,), (1,)]


def test_fixed_locus_trivial_subgroup_gives_whole_space():
    model = mu_model(4, [0, 1])
    components = fixed_locus(model, [(1,)])  # K = N, so H is trivial
    assert [c.indices for c in components] == [(0, 1)]
    assert components[0].dim == 1


def test_fixed_locus_on_p2():
    model = mu_model(2, [0, 0, 1])
    components = fixed_locus(model, [])  # H = mu_2 itself
    assert [c.indices for c in components] == [(0, 1), (2,)]
    assert [c.dim for c in components] == [1, 0]


def test_fixed_locus_partitions_coordinates():
    model = mu_model((2, 4), [(1, 0), (0, 1), (1, 2), (0, 0)])
    for kernel_gens in ([], [(1, 0)], [(0, 1)], [(1, 2)]):
        components = fixed_locus(model, kernel_gens)
        covered = sorted(i for c in components for i in c.indices)
        assert covered == list(range(len(model.weights)))


def test_character_orbits_cover_the_group():
    for desc in [GroupDescriptor(0, (6,)), GroupDescriptor(0, (2, 4))]:
        reps = character_orbit_representatives(desc)
        assert sum(euler_phi(p.order()) for p in reps) == desc.order()


def test_sector_table_mu2():
    decomp = sector_dimensions(mu_model(2, [0, 1]))
    assert [(s.order, s.dimension) for s in decomp.sectors] == [(1, 2), (2, 2)]
    assert decomp.total_dimension == 4
    assert vistoli_kernel_dimension(decomp) == 2


def test_sector_table_mu6():
    decomp = sector_dimensions(mu_model(6, [0, 1]))
    assert [(s.order, s.dimension) for s in decomp.sectors] == [(1, 2), (2, 2), (3, 4), (6, 4)]
    assert decomp.total_dimension == 12
    assert vistoli_kernel_dimension(decomp) == 10
    supports = [s.support for s in decomp.sectors]
    assert supports == [
        GroupDescriptor(0, ()),
        GroupDescriptor(0, (2,)),
        GroupDescriptor(0, (3,)),
        GroupDescriptor(0, (6,)),
    ]


def test_sector_table_trivial_action():
    for d in (2, 5):
        decomp = sector_dimensions(mu_model(d, [0, 0]))
        assert decomp.total_dimension == 2 * d
        for s in decomp.sectors:
            assert [c.indices for c in s.components] == [(0, 1)]
            assert s.dimension == 2 * s.residue_degree


def test_trivial_group_has_no_twisted_sectors():
    decomp = sector_dimensions(mu_model(1, [0, 1]))
    assert len(decomp.sectors) == 1
    assert vistoli_kernel_dimension(decomp) == 0


def test_totals_match_free_module_dimension():
    for d in range(1, 9):
        model = mu_model(d, [0, 1])
        decomp = sector_dimensions(model)
        assert decomp.total_dimension == ktheory_free_module_dimension(model) == 2 * d
        assert decomp.untwisted_dimension == 2
        assert vistoli_kernel_dimension(decomp) == 2 * d - 2


def test_sectors_on_noncyclic_group():
    model = mu_model((2, 2), [(0, 0), (1, 0), (0, 1)])
    decomp = sector_dimensions(model)
    # four characters, all of order <= 2, each a singleton orbit
    assert len(decomp.sectors) == 4
    assert decomp.total_dimension == 3 * 4 == ktheory_free_module_dimension(model)
    assert decomp.untwisted_dimension == 3


def test_sector_requires_finite_group():
    from equitau.charclass import torus_model

    with pytest.raises(ValueError):
        sector_dimensions(torus_model([1, -1]))
