"""Exact structure-constant kernel for Hom-Hopf algebras, Hom-Long dimodules,
their braided monoidal structure and the Hom-Long equation.

All arithmetic is exact rational; every identity check is an exact matrix
identity on lexicographic tensor bases and reports counterexample witnesses.
"""

from .linalg import (Matrix, Tensor3, Vector, scalar, kron, kron_all,
                     perm_matrix, flip_matrix, apply3, solve_exact,
                     DimensionMismatch, SingularMatrix)
from .report import AxiomReport, Check
from .homstruct import (HomAlgebra, HomCoalgebra, HomBialgebra, HomHopfAlgebra,
                        QuasiTriangularStructure, CoQuasiTriangularStructure,
                        NotAutomorphism, validate_hom_algebra,
                        validate_hom_coalgebra, validate_hom_bialgebra,
                        validate_hom_hopf, validate_all, yau_twist, dual_hopf,
                        tensor_hopf, opposite_algebra, validate_quasitriangular,
                        validate_coquasitriangular, quasitriangular,
                        coquasitriangular)
from .repmod import (HomModule, HomComodule, YetterDrinfeldModule,
                     validate_hom_module, validate_hom_comodule, check_yd,
                     yd_prebraiding)
from .longdimod import (HomLongDimodule, DualityData, MismatchedBase,
                        AntipodeNotInvertible, validate_long_dimodule,
                        canonical_dimodule, tensor_dimodule, unit_dimodule,
                        trivial_dimodule, monoidal_constraints, associator,
                        check_coherence, left_dual, right_dual, check_snake,
                        smash_product_algebra, to_smash_module,
                        from_smash_module, dimodule_morphism_report,
                        is_dimodule_morphism)
from .braidcat import (BraidingContext, BraidOperator, DimoduleMorphism,
                       InvalidContext, NotAMorphism, long_braiding,
                       long_braiding_inverse, check_braid_morphism,
                       check_naturality, check_hexagons, check_qybe,
                       hb_yd_structure, check_braiding_compatibility,
                       module_as_dimodule, comodule_as_dimodule,
                       module_family_braiding, comodule_family_braiding,
                       check_symmetry)
from .longeq import (OperatorOnTensorSquare, DiagonalSolution,
                     HAlphaLongDimodule, ZeroDiagonal, SearchSpaceTooLarge,
                     check_long_equation, check_invertible_iff,
                     diagonal_solution, coordinate_criterion, tau_transforms,
                     validate_halpha_dimodule, module_extension,
                     comodule_extension, dimodule_solution, search_solutions,
                     operator_to_coords, coords_to_operator)

__version__ = "0.1.0"
