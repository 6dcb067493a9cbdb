"""Exact apolarity, harmonic polynomials and border-rank certificates."""

__version__ = "0.1.0"

from .apolarity import (
    ApolarComponent,
    Catalecticant,
    apolar_component,
    catalecticant,
    contract,
    is_equivariant_spotcheck,
    sylvester_lower_bound,
)
from .certify import (
    BorderRankCertificate,
    CertificationError,
    build_ideal_I,
    certify_border_rank_q3,
    classify_ternary_quadratic,
    decompose_q2,
    q2_apolar_generator,
    verify_apolar_ideal_theorem,
)
from .groebner import (
    GradedIdealPresentation,
    MonomialIdeal,
    buchberger_colon_check,
    hilbert_function,
    leading_ideal,
    lex_leading_term,
    monomial_colon,
    monomial_intersect,
    monomial_saturation,
    reduce,
)
from .harmonic import (
    HarmonicBasis3,
    So3Basis,
    harmonic_basis_3,
    harmonic_decompose,
    harmonic_dim,
    laplacian,
    so3_action,
)
from .linalg import ExactMatrix, exact_rank, kernel_basis
from .parser import parse_poly
from .polynomial import UVZ, X, Y, Poly, VariableFrame, change_frame, quadric
from .scalars import GaussianRational, Rational
