"""Genus-zero positive allowable Lefschetz fibrations.

Planar mapping class engine, simple closed curves, positive twist
factorizations with their homological invariants, Hurwitz moves, a text
file format, bundled dataset generators, and an HTTP service; the
``palf`` command line fronts all of it.
"""

from .curves import Curve, act_on_curve, curve_twist, curves_equal, homology_class, pi1_class
from .intlinalg import AbelianGroup, IntMatrix, cokernel, smith_normal_form
from .surface import (MappingClass, Surface, SurfaceMismatchError, TwistGen,
                      UnsupportedGenusError, compose, equals, invert,
                      loop_action, twist, twist_word)
from .words import Word, cyclic_normal_form, reduce

__all__ = [
    "AbelianGroup", "Curve", "IntMatrix", "MappingClass", "Surface",
    "SurfaceMismatchError", "TwistGen", "UnsupportedGenusError", "Word",
    "act_on_curve", "cokernel", "compose", "curve_twist", "curves_equal",
    "cyclic_normal_form", "equals", "homology_class", "invert",
    "loop_action", "pi1_class", "reduce", "smith_normal_form", "twist",
    "twist_word",
]

__version__ = "0.1.0"
