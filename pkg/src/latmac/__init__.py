"""Matrix similarity classes over Z and F_p[t] through ideal classes of A[x]/(f).

A matrix over A with irreducible characteristic polynomial f corresponds to
an ideal class of the order A[theta]; degree-one ideals ``(a, theta - z)``
give the explicit representative ``C_f(a, z)``.
"""

from .classgroup import (
    ClassTable,
    PrimeIdealInfo,
    classify,
    degree_one_primes_above,
    enumerate_ideals,
    enumerate_products,
    is_equivalent,
    small_residue_bound,
    verify_lenstra,
)
from .ideal import (
    DegreeOneForm,
    IdealLat,
    colon_lattice,
    contract_to_A,
    degree_one_form,
    hnf_rows,
    ideal_from_generators,
    ideal_mul,
    ideal_norm,
    kappa,
    lambda_matrix,
    parse_ideal,
    unit_ideal,
)
from .lm import (
    Representative,
    cf_matrix,
    cf_via_conjugation,
    ideal_to_matrix,
    matrix_to_ideal,
    rehm_form,
    representative_for_ideal,
)
from .order import FieldElem, OrderCtx, OrderElem
from .poly import PrimeOfA
from .ring import ZZ, FpPoly, PolyRingFp, ring_from_string

__version__ = "0.1.0"
