"""Exact computations with E_{n,k}, hook-Schur transition matrices and
cocharge Kostka-Foulkes polynomials."""

from .algebra import (BiPolynomial, QPolynomial, QRational, ZPoly, q_binomial,
                      qq_pochhammer, z_pochhammer)
from .enk import (EnkFamily, TransitionMatrix, enk_family, enk_via_hall_littlewood,
                  enk_via_newton, enk_via_schur, main_theorem_check, powersum_identity,
                  t_entry, t_inverse, t_matrix)
from .hall_littlewood import (Tableau, cocharge, enumerate_ssyt, hall_littlewood_H,
                              hl_at_one_minus_z, kostka_cocharge, kostka_hook,
                              validate_hl_axioms)
from .partitions import Partition, dominance_geq, n_stat, partitions_of
from .plethysm import AlphabetFactor, FiniteAlphabet, omega_truncated, pleth_finite, pleth_scale
from .symfun import SymFunc, e, expand_in_schur, h, hall_inner, m_mu, omega, p, schur

__version__ = "0.1.0"

__all__ = [
    "AlphabetFactor", "BiPolynomial", "EnkFamily", "FiniteAlphabet", "Partition",
    "QPolynomial", "QRational", "SymFunc", "Tableau", "TransitionMatrix", "ZPoly",
    "cocharge", "dominance_geq", "e", "enk_family", "enk_via_hall_littlewood",
    "enk_via_newton", "enk_via_schur", "enumerate_ssyt", "expand_in_schur", "h",
    "hall_inner", "hall_littlewood_H", "hl_at_one_minus_z", "kostka_cocharge",
    "kostka_hook", "m_mu", "main_theorem_check", "n_stat", "omega", "omega_truncated",
    "p", "partitions_of", "pleth_finite", "pleth_scale", "powersum_identity",
    "q_binomial", "qq_pochhammer", "schur", "t_entry", "t_inverse", "t_matrix",
    "validate_hl_axioms", "z_pochhammer",
]
