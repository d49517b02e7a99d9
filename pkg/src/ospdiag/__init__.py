"""Cup and circle diagram combinatorics for projective OSp(r|2n) modules."""
from .blocks import BlockWindow, basis_census, block_weights, cartan, graded_cartan, quiver
from .brauer import BrauerDiagram, BrauerElement, compose, parse_diagram
from .circles import circle_diagram, components, hom_dim, hom_poly, is_nuclear, orientations
from .cups import CupDiagram, cup_diagram, weight_of_cup
from .errors import OspError
from .labels import DiagrammaticWeight, parse_weight
from .laurent import LaurentPoly
from .weights import (GroupParams, HookPartition, defect, freeze, hook_partitions, super_weight,
                      super_weights, tail_length, weight_diagram, weight_from_hook)

__version__ = "0.1.0"
