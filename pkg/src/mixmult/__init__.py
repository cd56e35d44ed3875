"""Multi-Rees algebras, mixed multiplicities, mixed volumes and sectional Milnor numbers."""
from .errors import (InternalInconsistency, MixMultError, ParseError, PreconditionError,
                     ResourceError, RingMismatchError)
from .field import GF, QQ, field_from_name
from .ring import GradedRing, MonomialOrder
from .polynomial import Polynomial
from .parser import (SessionDocument, format_polynomial, parse_polynomial, parse_ring,
                     parse_session)
from .groebner import (GroebnerBasis, buchberger, ideal_membership, is_groebner_basis,
                       leading_term_ideal, normal_form)
from .ideal import (Ideal, eliminate, ideal_combine, ideal_intersection, ideal_power, ideal_quotient,
                    kernel_of_map, krull_dimension, saturation)
from .rees import (ReesPresentation, rees_defining_ideal, rees_defining_ideal_monomial,
                   rees_ideal_as_kernel, verify_rees_generators)
from .hilbert import (HilbertSeries, hilbert_coefficient, hilbert_polynomial_value,
                      monomial_hilbert_series, multigraded_hilbert_series, reduce_hilbert,
                      series_coefficient_bruteforce)
from .multiplicity import (FiberPresentation, colength, fiber_presentation, mixed_multiplicity,
                           rees_algebra_multiplicity)
from .polytope import (LatticePolytope, bernstein_bound, minkowski_sum, mixed_volume,
                       mixed_volume_series, newton_polytope, polytope_to_ideal)
from .milnor import (EulerCharacteristic, MilnorProfile, euler_characteristic_complement,
                     jacobian_ideal, milnor_number, sectional_milnor_numbers)

__version__ = "0.1.0"
