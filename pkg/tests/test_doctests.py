import doctest

import equitau.lattice


def test_lattice_doctests():
    failures, tried = doctest.testmod(equitau.lattice)
    assert tried > 0
    assert failures == 0
