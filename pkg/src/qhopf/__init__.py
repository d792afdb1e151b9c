"""qhopf: exact symbolic engine for a glued quantum 3-sphere.

The package models the coordinate *-algebra of the quantum 3-sphere
obtained by gluing two quantum solid tori, its circle coaction, the
two-disc base algebra sitting inside it, a strong connection for the
fibration with its Gauss-binomial closed form, the idempotents of the
associated line modules, and the exact trace pairing that certifies the
fibration nontrivial.  A truncated-operator layer provides an
independent numeric oracle for every symbolic identity.
"""

from .scalars import ONE, P, Q, ZERO, ParamScalar, ppow, qbinomial, qpow
from .s3core import (AlgElement, BasisMonomial, FreeWord, is_coinvariant,
                     iota_image, iota_word, mul, mul_by_generator,
                     normalize_word, star, winding_decompose)
from .hopf import CotensorElement, LaurentElement, coaction
from .gluing import DiscElement, TrivializedElement, boundary, chi, disc_mul, \
    gluing_check, phi12
from .galois import (TensorElement, check_connection_properties,
                     galois_witness, lifted_can, strong_connection,
                     strong_connection_closed)
from .chern import CoinvariantMatrix, idempotent, matrix_trace, pairing, \
    trace_functional
from .numrep import (TruncatedRep, build_rep, classical_maps_check, evaluate,
                     faithfulness_probe, mvn_witness_check, numeric_trace,
                     polar_isometry_check, spectrum_check)

__version__ = "0.1.0"
