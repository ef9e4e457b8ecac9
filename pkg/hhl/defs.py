# -*- coding: utf-8 -*-
# hhl - Hausdorff operators on the Heisenberg group, checked numerically
# Copyright(C) 2026, The hhl developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""
Defs
====

This module contains constants and some magic values.
"""


# Geometry ================================================

# Ambient dimension used when nothing else is requested (H^1, 3 coordinates)
default_n = 1

# Central difference step for the vector fields is
# fd_step * (1 + |x|_h)
fd_step = 1e-5

# Relative tolerance used when comparing a map against diag(a,...,a,a^2)
# and when deciding whether off diagonal blocks vanish
block_tolerance = 1e-14


# Matrix norm estimator ===================================

# Grid over the Koranyi unit sphere for n = 1 (theta x phi)
norm_grid_theta = 100
norm_grid_phi = 101

# Number of seeded random angle vectors for n >= 2
norm_grid_random = 10000
norm_grid_seed = 0

# Golden section refinement: sweeps over all angles, iterations per angle
norm_refine_sweeps = 3
norm_refine_iterations = 40

# Coarser grid used for per sample norms of general matrix fields
field_norm_grid_theta = 24
field_norm_grid_phi = 25
field_norm_grid_random = 600
field_norm_refine_sweeps = 2

# Batch size (maps x grid points) evaluated at once
norm_batch_points = 2 ** 21


# Quadrature ==============================================

# Adaptive composite Gauss-Legendre
gauss_points = 15
quad_rel_tol = 1e-8
quad_abs_tol = 1e-14
quad_max_panels = 2 ** 14

# Dyadic shell ratio test for improper endpoints
shell_width = 0.6931471805599453 # ln 2, shells are dyadic in rho
ratio_threshold = 0.99
ratio_window = 16
ratio_lookback = 3
max_shells = 1000


# Monte Carlo =============================================

mc_samples = 2 ** 16
mc_strata = 32
mc_seed = 0

# Exponent kappa of the rho^(kappa - 1) density in the innermost ball stratum
mc_core_exponent = 0.25

# Every stratum gets at least samples // (mc_min_fraction * strata) points
mc_min_fraction = 4

# Radius used to cut off generating functions with unbounded support
gaussian_cutoff = 6.0


# Weights =================================================

# Default ball family: centre radii (|c|) and radius exponents (2^k)
family_center_radii = (0.5, 1.0, 2.0, 4.0)
family_radius_exponents = tuple(range(-3, 4))

# Shrink factors s of E = B(0, s r) in the sandwich check
sandwich_shrink = (0.5, 0.25, 0.125)

# Dilation factors Lambda of the doubling probe
doubling_factors = (2.0, 4.0, 8.0)

# A weight is considered infinite on a ball above this average
weight_overflow = 1e300


# Norms ===================================================

# sup over r > 0 is replaced by max over 2^k, k in [radius_k_min, radius_k_max]
radius_k_min = -10
radius_k_max = 10

# Number of log spaced points scanned to bracket sign changes of b - b_B
cmo_root_scan = 64


# Sharpness ===============================================

# Slack for the "up to a constant" upper bounds
kappa = 10.0

# Truncation eps = 2^-k for the divergence witness
truncation_k_min = 4
truncation_k_max = 12

# Relative tolerance for equality checks on the exact radial path
equality_tolerance = 1e-6

# Relative tolerance used in the same checks on the Monte Carlo path
# (multiplied by the combined standard error)
mc_sigma = 4.0


# Command line ============================================

threads_env = 'HHL_THREADS'
report_schema = 1
csv_header = ('r', 'value', 'err')
