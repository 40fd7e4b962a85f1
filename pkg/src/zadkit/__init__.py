"""Exact decision procedures for zero-action-determined modules and
zero-product-determined algebras over Q and prime fields."""

__version__ = "0.1.0"

from .exactlin import Field, Mat, Subspace, nullspace, rank, rref, solve
from .errors import (DEFAULT_BUDGET, InvalidAlgebra, InvalidModule, NotIdempotent, NotIrreducible,
                     OverBudget, UnsupportedRadicalRegime, ZadkitError)
from .verdict import Answer, Verdict
from .algebra import (FDAlgebra, center, direct_sum_algebra, group_algebra, make_algebra, matrix_algebra,
                      path_algebra, poly_quotient, quotient_algebra, radical, tensor_product_algebra,
                      triangular, validate_algebra)
from .modules import (Character, FDModule, ModuleMap, direct_sum_module, hom_space, is_irreducible,
                      make_module, natural_module, one_dim_modules, principal_projective, quotient_module,
                      regular_module, validate_module)
from .zad import (Discrepancy, NotZadWitness, ZadCertificate, check_certificate, check_witness, decide_zad,
                  is_zad_irreducible, is_zad_oracle, is_zad_principal_projective, s_span_exhaustive, t_ker)
from .zpd import (ComponentWitness, Ext1Witness, E_subalgebra, I_ideal, ext1_self, is_zpd,
                  zpd_condition_crosscheck)
