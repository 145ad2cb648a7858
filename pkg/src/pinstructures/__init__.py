"""Decide orientation, spin, pin±, pin^c and Lipschitz structures on closed
manifolds built from a small catalog by Cartesian products."""

from .abelian import CoefficientRing, FgAbelianGroup, cohomology_via_uct, ext_to, hom_to, product_homology, tensor, tor
from .catalog import ManifoldDescriptor, klein, mk, product, product_of, rp, sphere, torus
from .commands import decide_expression
from .deciders import (
    DecisionReport,
    decide_lipschitz,
    decide_orientable,
    decide_pin_c,
    decide_pin_minus,
    decide_pin_plus,
    decide_spin,
    full_report,
    full_report_product,
    pin_c_fast_path,
)
from .errors import (
    CorruptRingData,
    InvariantViolation,
    MisuseError,
    PinStructuresError,
    SearchSpaceExceeded,
    UnsupportedDegree,
    UnsupportedParameter,
)
from .expr import ParseError, build, parse
from .ring import Z2Class, Z2Subspace
from .steenrod import sq, sw_from_wu, wu_classes

__version__ = "0.1.0"
