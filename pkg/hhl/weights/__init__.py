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
Weights on H^n.

Two kinds are shipped:

 * ``power``: w(x) = |x|_h^alpha,
 * ``max-one``: w(x) = max(|x|_h, 1)^alpha (locally constant near the
   origin, a power weight at infinity).

Both have closed form masses on central balls. Masses of other balls are
estimated by Monte Carlo. The probes of the A_p, A_1 and reverse Hoelder
conditions live in :py:mod:`.probes`.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from hhl import defs
from hhl import quad
from hhl.model import heisenberg
from hhl.model.fields import RadialProfile
from hhl.utils.exceptions import CatalogError, DivergenceError, ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


kinds = ('power', 'max-one')


@dataclass(frozen=True)
class WeightSpec(object):
    kind: str = 'power'
    alpha: float = 0.0
    dim: heisenberg.HeisDim = field(default_factory=heisenberg.HeisDim)

    def __post_init__(self):
        if self.kind not in kinds:
            raise CatalogError(_('unknown weight "%(kind)s", choose one of '
                                 '%(kinds)s') %
                               {'kind': self.kind, 'kinds': ', '.join(kinds)})
        object.__setattr__(self, 'alpha', float(self.alpha))

    @property
    def label(self):
        return '%s(%g)' % (self.kind, self.alpha)

    @property
    def is_constant(self):
        return self.alpha == 0

    @property
    def locally_integrable(self):
        return self.kind == 'max-one' or self.alpha > -self.dim.Q

    def validate(self):
        if not self.locally_integrable:
            raise ParameterError(
                _('a power weight requires alpha > -Q = %(mQ)i, got '
                  '%(alpha)g') % {'mQ': -self.dim.Q, 'alpha': self.alpha})
        return self

    def power(self, t):
        '''The weight w^t, which is again in the catalog.'''
        return WeightSpec(self.kind, self.alpha * t, self.dim)

    def radial(self, rho):
        rho = np.asarray(rho, dtype=float)
        if self.alpha == 0:
            return np.ones(rho.shape)
        with np.errstate(divide='ignore'):
            if self.kind == 'power':
                return rho ** self.alpha
            return np.maximum(rho, 1.0) ** self.alpha

    def __call__(self, x):
        return self.radial(heisenberg.koranyi_norm(heisenberg.coordinates(x)))

    @property
    def profile(self):
        if self.kind == 'power':
            return RadialProfile(self.radial, self.alpha)
        return RadialProfile(self.radial, 0.0, (1.0,))

    @property
    def critical_q(self):
        '''q_w = inf{q : w in A_q}, closed form for the catalog.'''
        Q = self.dim.Q
        if self.alpha > 0:
            return (Q + self.alpha) / Q
        return 1.0

    @property
    def critical_rh(self):
        '''r_w, the supremal reverse Hoelder order.'''
        if self.alpha < 0:
            return self.dim.Q / abs(self.alpha)
        return math.inf

    def in_ap(self, p):
        '''Membership in A_p: -Q < alpha <= 0 for p = 1,
        -Q < alpha < Q(p - 1) for p > 1.'''
        Q = self.dim.Q
        if p < 1:
            raise ParameterError(_('A_p requires p >= 1'))
        if not self.alpha > -Q:
            return False
        if p == 1:
            return self.alpha <= 0
        return self.alpha < Q * (p - 1)

    def central_mass(self, r):
        '''w(B(0, r)) in closed form.'''
        dim = self.dim
        Q = dim.Q
        a = self.alpha
        r = float(r)
        if self.kind == 'power':
            if not a > -Q:
                raise DivergenceError(
                    _('|x|^%(alpha)g is not integrable at the origin') %
                    {'alpha': a}, partial=math.inf, witness=0.0)
            return dim.omega_Q * r ** (Q + a) / (Q + a)
        if r <= 1:
            return dim.Omega_Q * r ** Q
        if Q + a == 0:
            return dim.Omega_Q + dim.omega_Q * math.log(r)
        return dim.Omega_Q + dim.omega_Q * (r ** (Q + a) - 1) / (Q + a)

    def central_infimum(self, r):
        '''essinf of w over B(0, r).'''
        if self.alpha == 0:
            return 1.0
        if self.kind == 'power':
            return 0.0 if self.alpha > 0 else r ** self.alpha
        return 1.0 if self.alpha > 0 else max(r, 1.0) ** self.alpha


def ball_mass_estimate(w, B, cfg=None, method=None):
    '''w(B) with an error estimate.

    :param method: "closed" (central balls only), "radial" (central balls
        only) or "mc"; by default the closed form for central balls and MC
        otherwise
    :return: (value, error)
    '''
    if len(B.center) != w.dim.coords:
        raise ParameterError(_('the ball and the weight live in different '
                               'dimensions'))
    if w.kind == 'power' and not w.alpha > -w.dim.Q and B.contains_origin():
        raise DivergenceError(
            _('|x|^%(alpha)g is not integrable at the origin') %
            {'alpha': w.alpha}, partial=math.inf, witness=0.0)

    if method is None:
        method = 'closed' if B.is_central else 'mc'
    if method in ('closed', 'radial') and not B.is_central:
        raise ParameterError(_('closed forms need a central ball'))

    if method == 'closed':
        return w.central_mass(B.radius), 0.0
    if method == 'radial':
        return quad.integrate_radial(w.profile, w.dim, 0.0, B.radius)
    if method == 'mc':
        if w.is_constant:
            return B.measure(), 0.0
        return quad.integrate_mc(w, B, cfg, w.dim)
    raise ParameterError(_('unknown integration method "%s"') % method)


def ball_mass(w, B, cfg=None, method=None):
    '''w(B) = int_B w(x) dx.'''
    return ball_mass_estimate(w, B, cfg, method)[0]


from .probes import ApProbeReport, default_family, ap_probe, \
    reverse_holder_probe, power_weight_sandwich_check, doubling_probe, \
    average_domination_check
