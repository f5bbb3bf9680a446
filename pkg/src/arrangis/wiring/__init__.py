from .braids import OVER_UPPER, BraidError, BraidWord, LabeledBraid, a_kl, half_twist
from .diagram import Braid, Singular, WiringDiagram, WiringError, beta_uv
from .dsl import WiringSyntaxError, parse_wiring, print_wiring
from .tracker import IM_OVER_SIGN, compute_wiring

__all__ = [
    "OVER_UPPER", "IM_OVER_SIGN", "BraidError", "BraidWord", "LabeledBraid", "a_kl", "half_twist",
    "Braid", "Singular", "WiringDiagram", "WiringError", "beta_uv",
    "WiringSyntaxError", "parse_wiring", "print_wiring", "compute_wiring",
]
