"""Exact intersection calculus for the family of lines on a cubic fourfold.

Everything is computed over the rationals with no floating point anywhere:
scalars cross the boundary as ``fractions.Fraction`` and classes print in
the same normal forms the command-line tool uses.
"""

from ._core import (
    FClass,
    IClass,
    SchubertClass,
    XClass,
    ansatz_to_I,
    beta_class,
    check_catalog,
    class_Cx,
    class_S,
    class_V,
    class_W,
    class_of_F,
    curve_genera,
    d3_pullback,
    degree_phi,
    degree_psi,
    grothendieck_reduce,
    identity_suite,
    lambda_class,
    lr_coefficients,
    minors_certificate,
    normalisation_suite,
    omega_p,
    p_pull,
    p_push,
    pairing_R,
    pairing_Rprime,
    q_pull,
    q_push,
    residuation_classes,
    resultant_quartic,
    run_checks,
    solve_ansatz,
    strict_transform_V,
    transfer_HX,
    w_degree,
)

__all__ = [
    "FClass",
    "IClass",
    "SchubertClass",
    "XClass",
    "ansatz_to_I",
    "beta_class",
    "check_catalog",
    "class_Cx",
    "class_S",
    "class_V",
    "class_W",
    "class_of_F",
    "curve_genera",
    "d3_pullback",
    "degree_phi",
    "degree_psi",
    "grothendieck_reduce",
    "identity_suite",
    "lambda_class",
    "lr_coefficients",
    "minors_certificate",
    "normalisation_suite",
    "omega_p",
    "p_pull",
    "p_push",
    "pairing_R",
    "pairing_Rprime",
    "q_pull",
    "q_push",
    "residuation_classes",
    "resultant_quartic",
    "run_checks",
    "solve_ansatz",
    "strict_transform_V",
    "transfer_HX",
    "w_degree",
]

__version__ = "0.1.0"
