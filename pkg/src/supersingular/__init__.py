"""Group structures of rational points on elementary supersingular abelian varieties."""

from .arith import IntPoly, NotElementaryError
from .structure import (AbelianGroupStructure, StructureResult, enumerate_classes,
                        local_structure_at_2, module_structure_descriptor, rational_point_structures)
from .weil import (Exceptional, IsogenyClass, MultiplicityError, NotSupersingularError, WeilNumber,
                   is_supersingular_poly, parse_frobenius, simple_class, weil_min_poly)

__version__ = '0.1.0'

__all__ = ['IntPoly', 'AbelianGroupStructure', 'StructureResult', 'Exceptional', 'IsogenyClass',
           'WeilNumber', 'NotElementaryError', 'NotSupersingularError', 'MultiplicityError',
           'enumerate_classes', 'local_structure_at_2', 'module_structure_descriptor',
           'rational_point_structures', 'is_supersingular_poly', 'parse_frobenius',
           'simple_class', 'weil_min_poly']
