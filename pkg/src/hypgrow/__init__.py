"""Growth of hyperbolic-type distances along rays in starlike plane domains."""

from .domains import (Ball, CircularNotched, Comb, PolynomialDomain, Punctured, QuadrantComplement,
                      ShiftedHalfSpace, alpha_sharp, boundary_samples, catalog, contains, dist_boundary, g3,
                      nearest_boundary_direction, parse_domain_spec, sector_complement_g1, sector_complement_g2)
from .metrics import MetricKind, MetricResult, evaluate
from .profile import ProfileTable, derivative_at_zero, envelope  # the profile() function lives in hypgrow.profile

__version__ = "0.1.0"
