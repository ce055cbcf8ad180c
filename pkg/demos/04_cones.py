"""
Cones, duals and lattice supports
=================================

Exact rational computations on small polyhedral cones.
"""

from segretoric import RationalCone, cone_contains, dual_cone, is_strongly_convex, lattice_support
from segretoric.cones import cone_coefficients

sigma = RationalCone(2, [(1, 0), (1, 2)])

###############################################################################
# Membership comes with exact coefficients.
print(cone_coefficients(sigma, (2, 1)))
print(cone_contains(sigma, (0, 1)))

###############################################################################
# The dual of a simplicial cone, and its dual again.
dual = dual_cone(sigma)
print(dual.generators, dual_cone(dual).generators)

###############################################################################
# A cone containing a line is not strongly convex.
print(is_strongly_convex(sigma), is_strongly_convex(RationalCone(2, [(1, 1), (1, -1), (-1, 0)])))

###############################################################################
# Lattice points of sigma in a small box index the monomials of its algebra.
print(lattice_support(sigma, 2))
