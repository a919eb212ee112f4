"""Verification toolkit and fixed-point engine for finite b-metric spaces."""

from .certify import ContractionCertificate, PairRecord, certify, certify_basic, certify_generalized, compute_ms
from .engine import (Cycle, FixedPoint, FixedPointReport, Trajectory, check_b_continuity,
                     check_theorem_consequence, enumerate_fixed_points, picard_iterate)
from .functions import (FcOperator, FunctionSuite, SequencePairProbe, SimulationFunction, ThetaFunction,
                        affine_plus_one, builtin_suite, check_fc_properties, check_j_property_i,
                        check_j_property_ii, check_theta_membership, exponential, fc_eval, j_eval, ratio,
                        scaled_ratio, scaled_ratio_membership, theta_eval)
from .space import (AxiomViolationError, FiniteBMetricSpace, SelfMap, SpaceError, ValidationReport, build_map,
                    build_space, distance, minimal_coefficient, validate_axioms)

__version__ = "0.1.0"
