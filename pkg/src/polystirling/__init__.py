"""Exact computer algebra for Stirling and Eulerian numbers of polynomial
sequences.

The package expands any polynomial sequence P = {p_n} (deg p_n = n,
p_0 = 1) in falling factorials and back, producing the Stirling triangles
of both kinds associated with P, together with the associated Eulerian
numbers, all over exact rational arithmetic. An umbral-calculus layer
(linear functionals, series operators, Sheffer sequences) supplies the
generating-function routes, and twenty-odd named families come fully
wired with closed-form oracles and verification suites.
"""

from .associated import (
    associated_exp,
    associated_log,
    bar_transform,
    s1_assoc,
    s1_assoc_functional,
    s1_assoc_gf,
    s2_assoc,
    s2_assoc_finite_difference,
    s2_assoc_gf,
    verify_orthogonality,
)
from .eulerian import (
    descent_count_row,
    eulerian_assoc,
    eulerian_assoc_polynomial,
    eulerian_gf_polynomials,
    eulerian_number,
    eulerian_polynomial,
    eulerian_row,
    frobenius_a_from_s2,
    frobenius_s2_from_a,
    worpitzky_coefficients,
)
from .families import FAMILY_IDS, PolynomialFamily, UnsupportedFamilyError, family, oracle_check
from .polynomials import (
    NEG_INFINITY,
    Polynomial,
    Rational,
    binomial,
    central_factorial,
    expand_in_basis,
    falling_factorial,
    rational,
    rising_factorial,
)
from .series import FormalPowerSeries, fps
from .triangles import (
    ScalarSequence,
    Triangle,
    bell_value,
    bernoulli_number,
    bernoulli2nd_number,
    central_factorial_numbers,
    euler_number,
    gould_hopper,
    lah,
    lah_degenerate,
    scalar_sequence,
    stirling1,
    stirling1_degenerate,
    stirling2,
    stirling2_degenerate,
)
from .umbral import ShefferPair, apply_operator, expand_in_sheffer, functional, sheffer_polynomials
from .verify import run_suite

__version__ = "0.1.0"
