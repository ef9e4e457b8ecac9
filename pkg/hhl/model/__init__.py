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

'''data model for hhl

Geometry
========

heisenberg ::

    HeisDim ------- n, Q, Omega_Q, omega_Q, haar_normalization
    GroupPoint ---- 2n+1 coordinates, group law, dilations, Koranyi norm
    BallSpec ------ Koranyi ball B(c, r)
    AnnulusSpec --- central shell r_in <= |x|_h < r_out

All geometric functions work on numpy arrays whose last axis holds the 2n+1
coordinates, so that they can be applied to whole Monte Carlo samples.

Fields
======

The fields module holds the ScalarField catalog (power, logarithm,
indicators, products, callables). Fields may declare a radial profile; the
integration code uses the declaration and never tries to detect structure.

Results
=======

The results module holds the objects returned by the estimators
(NormResult, TheoremConstant, VerificationReport, ...).

Buddies
=======

Output code defines buddy classes for the result classes. Then each result
object is accompanied by an object of the buddy class, which is instanciated
upon first access and cached. This is how the "report", "csvdata" and
"pandas" packages attach their formats without the model knowing about them.

'''

from . import buddy
from . import db
from . import heisenberg
from . import fields
from . import results
