"""Exact workbench for differential modalities on rig-linear categories."""

from .rig import BOOL, INT, NAT, RIGS, Z2, RigDescriptor, get_rig
from .labels import Label, UNIT, atom, bag, inl, inr, pair, pair_chain, point
from .category import (AtomsObject, BagObject, BiproductObject, GradedObject,
                       LinComb, Morphism, NeedsWindow, PointsObject, UNIT_OBJ,
                       ZERO_OBJ, add_morphisms, biproduct, compose,
                       compose_chain, enumerate_basis, from_columns, identity,
                       inj_left, inj_right, morphisms_equal_up_to,
                       point_as_morphism, points_of, proj_left, proj_right,
                       symmetry, tensor, tensor_many, tensor_mor,
                       zero_morphism)
from .actions import (ActionData, boxtimes, coderive, free_action,
                      free_nilsquare, is_commuting, lift_modality,
                      universal_extend)
from .modalities import (ModalityBundle, bag_modality, points_modality,
                         costorage_iso, costorage_top,
                         codereliction_from_deriving,
                         deriving_from_codereliction, m_tensor_from_storage,
                         m_unit_from_storage, storage_iso, storage_top)
from .freediff import (FreeDifferentialModality, free_differential, rho,
                       rho_flat, rho_sharp)
from .equations import (CheckReport, Equation, Gens, check_equation,
                        run_morphism_suite, run_suite, zero_mutant)
from .verify import (RelOracle, lemma27_witness, refute_deriving,
                     rel_oracle_compare)

__version__ = "0.1.0"
