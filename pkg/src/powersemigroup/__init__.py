"""Power semigroups over numerical semigroups: sumset arithmetic, the
involution sigma, the translation quotient, and bounded automorphism search."""

from .core_sets import (
    ArithmeticOverflow,
    NaturalSet,
    add,
    dilate,
    gap,
    gap_set,
    interval,
    is_interval,
    normalize,
    reflect,
    translate,
)
from .numerical_semigroup import (
    ClosureViolation,
    InfiniteComplement,
    NumericalSemigroup,
    from_complement,
    from_generators,
    interval_semigroup,
    parse_description,
)
from .power_structures import (
    CarrierTooLarge,
    EquivClassRep,
    WindowCarrier,
    enumerate_window,
    equivalent,
    phi,
    phi_inv,
    sigma,
)

__version__ = "0.1.0"
