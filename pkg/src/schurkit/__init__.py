"""Exact computations with Schur and Weyl modules, Schur complexes and Bott's
algorithm over the integers."""
from ._backend import NAME as KERNEL_BACKEND
from .exact_linalg import (ChainComplex, ExactMatrix, PresentedModule, SmithForm,
                           StructuralError, cokernel, homology, image_basis,
                           smith_normal_form, tensor)
from .partitions import (Partition, SkewShape, conjugate, contains, lr_coefficient,
                         partition, skew_decomposition, ssyt_count)
from .multilinear import (DIVIDED, EXTERIOR, SYMMETRIC, alpha_beta, comultiplication,
                          divided_pairing, multiplication)
from .schur_weyl import (SCHUR, WEYL, box_map, plucker_graded_piece, schur_as_image,
                         schur_module, skew_ses, verify_cauchy, verify_direct_sum,
                         weyl_module)
from .schur_complexes import (SchurComplex, TwoTermMap, component_rank_check,
                              derived_schur_homology, exterior_complex, schur_complex,
                              symmetric_complex, verify_classical_truncation,
                              verify_decalage)
from .bott import (BottAnswer, GrassWeight, Weight, bott_algorithm, char_free_vanishing,
                   char_p_variant, dot_action, grassmann_bott, koszul_component_rank,
                   lr_symmetry_check, p1_cohomology_oracle, partial_flag_bott,
                   verify_bott_p1)

__version__ = "0.1.0"
