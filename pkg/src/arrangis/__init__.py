"""Topological invariants of complex line arrangements from exact equations or braided wiring diagrams."""

from .algebra import CyclotomicMatrix, CyclotomicNumber, RootOfUnity, corank
from .combinatorics import (Character, Combinatorics, Cycle, EnumerationCapExceeded, InvalidCharacter,
                            InvalidCombinatorics, MalformedCycle, NotInnerCyclic, blow_up, check_inner_cyclic,
                            cycle_basis, enumerate_inner_cyclic_characters, incidence_graph, inner_unramified,
                            is_inner_cyclic, validate_combinatorics)
from .depth import DepthReport, build_A_xi, edge_cycle, quasi_projective_depth
from .geometry import (Arrangement, GenericityError, GenericityExhausted, ProjectionFrame, ProjectiveLine,
                       certify, check_realizes, choose_projection, combinatorics_of)
from .invariant import (HomologyClass, InvariantResult, evaluate, invariant, invariant_from_wiring, istar_cycle,
                        istar_pair)
from .wiring import (BraidWord, LabeledBraid, WiringDiagram, WiringSyntaxError, a_kl, beta_uv, compute_wiring,
                     half_twist, parse_wiring, print_wiring)

__version__ = "0.1.0"
