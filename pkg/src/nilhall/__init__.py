"""Exact arithmetic in torsion-free nilpotent groups of Hirsch length <= 5.

Groups are given by presentations G(t).  Products, inverses and powers
come from closed-form Hall polynomials (:mod:`nilhall.hallpolys`) and are
checked against a collection-from-the-left oracle (:mod:`nilhall.collector`).
"""

from nilhall._backend import BACKEND
from nilhall.collector import (collect_invert, collect_multiply, collect_power,
                               conjugate_power)
from nilhall.hallpolys import (hall_inverse, hall_multiply, hall_power,
                               theorem_polynomials)
from nilhall.presentation import (GroupPresentation, StructureConstants,
                                  consistency_algebraic, consistency_direct,
                                  load_group_spec, new_presentation)

__version__ = "0.1.0"
