"""Exact combinatorial and numerical building blocks for the geometric
side of a trace-formula computation: root systems and their parabolic
lattices, nilpotent orbit dimensions, decay invariants, Weyl
discriminants, congruence-subgroup indices, Mellin finite parts, and the
error-exponent budget that ties them together.
"""

from .errors import (DiagnosticsError, DomainError, NumericError, ParseError,
                     ResourceLimitError, TracegeoError, exit_code_for)
from .root_datum import (RootSystem, SimpleType, build_root_system,
                         dual_coxeter_number, positive_roots)
from .parabolic_lattice import (LeviDatum, ParabolicSubset,
                                count_contributing_tuples, d_nonvanishing,
                                dim_unipotent_radical,
                                enumerate_parabolic_subsets, f_sets, full_levi,
                                levi_of, make_levi, minimal_levi)
from .nilpotent_orbits import (GLType, OrbitLabel, induced_dim, list_orbits,
                               min_orbit_dim, minimal_orbit, orbit_dim,
                               trivial_orbit)
from .invariants_k import (GroupSpec, RelativeDatum, k_by_pairs, k_min_orbit,
                           k_report, k_richardson)
from .local_data import (DiscriminantValue, RationalMatrix, as_fraction,
                         modulus_character, weyl_discriminant)
from .arithmetic import (LevelData, PrimeFixedResult, congruence_index,
                         conjecture_bound, is_neat_level, level_data,
                         prime_fixed_check, sl_index)
from .mellin_fp import (AsymptoticExpansion, TailFunction, exp_preset,
                        fp_mellin, sqrt_exp_preset, torsion_constant,
                        truncation_tail)
from .error_budget import (BudgetParams, ExponentReport, a_exponent, beta_max,
                           exponents, lambda_min, total_envelope)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticExpansion", "BudgetParams", "DiagnosticsError",
    "DiscriminantValue", "DomainError", "ExponentReport", "GLType",
    "GroupSpec", "LevelData", "LeviDatum", "NumericError", "OrbitLabel",
    "ParabolicSubset", "ParseError", "PrimeFixedResult", "RationalMatrix",
    "RelativeDatum", "ResourceLimitError", "RootSystem", "SimpleType",
    "TailFunction", "TracegeoError", "a_exponent", "as_fraction", "beta_max",
    "build_root_system", "congruence_index", "conjecture_bound",
    "count_contributing_tuples", "d_nonvanishing", "dim_unipotent_radical",
    "dual_coxeter_number", "enumerate_parabolic_subsets", "exit_code_for",
    "exp_preset", "exponents", "f_sets", "fp_mellin", "full_levi",
    "induced_dim", "is_neat_level", "k_by_pairs", "k_min_orbit", "k_report",
    "k_richardson", "lambda_min", "level_data", "levi_of", "list_orbits",
    "make_levi", "min_orbit_dim", "minimal_levi", "minimal_orbit",
    "modulus_character", "orbit_dim", "positive_roots", "prime_fixed_check",
    "sl_index", "sqrt_exp_preset", "torsion_constant", "total_envelope",
    "trivial_orbit", "truncation_tail", "weyl_discriminant",
]
