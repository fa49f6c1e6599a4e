"""cusim: computing with effectively presented Cu-semigroups.

The library builds desk-scale models (extended scalar powers, lower
semicontinuous functions on finite posets, glued simple-pure models),
applies the formal-differences construction, extracts augmented kernels and
compact groups, and audits axioms with three-valued verdicts and witnesses.
"""

from .audit import Window, audit_axioms, audit_morphism, o5_search, overall
from .augmented import (AugmentedModel, compact_group, find_complement, find_positive_absorber,
                        kernel_model, point_augmented, pointed_discrete_augmented)
from .catalog import catalog, full_catalog
from .cc import CcModel, GateError, cc_below, cc_eq, cc_way_below, srm_decide
from .core import (EXPECTED_FAIL, FAIL, PASS, SKIPPED, UNKNOWN, AuditReport, Chain, CuMap, CuModel,
                   Verdict3, identity_map, matrix_map)
from .functionals import Functional, audit_functional, evaluate, extend, hat
from .limits import InductiveSystem, verify_L1, verify_L2, verify_limit
from .models import (FinitePoset, VectorModel, direct_sum, ext_power, glued_simple_pure, lsc_poset,
                     pointed_kernel_presentation, razak_model)
from .scalars import INF, INT, NAT, REAL

__version__ = "0.1.0"
