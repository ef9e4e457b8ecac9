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

import math

import numpy as np

from hhl import defs
from hhl.model import heisenberg
from hhl.model.fields import RadialProfile
from hhl.model.heisenberg import AnnulusSpec, BallSpec
from hhl.utils.exceptions import ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


class GeneratingFunction(object):
    '''The kernel Phi of a Hausdorff operator.

    :ivar support: (a, b), Phi vanishes outside a <= |y|_h <= b
    :ivar profile: RadialProfile if Phi(y) = g(|y|_h), else None
    :ivar nonnegative: declared sign
    '''

    def __init__(self, phi, profile=None, support=(0.0, math.inf),
                 nonnegative=False, label='phi'):
        a, b = float(support[0]), float(support[1])
        if not 0 <= a <= b:
            raise ParameterError(_('a support annulus requires 0 <= a < b'))
        self.phi = phi
        self.profile = profile
        self.support = (a, b)
        self.nonnegative = nonnegative
        self.label = label

    def __call__(self, y):
        return np.asarray(self.phi(heisenberg.coordinates(y)), dtype=float)

    @property
    def support_kind(self):
        a, b = self.support
        if a >= b:
            return 'empty'
        if not math.isfinite(b):
            return 'all'
        return 'ball' if a == 0 else 'annulus'

    @property
    def is_zero(self):
        return self.support_kind == 'empty'

    def region(self, dim):
        '''The region Monte Carlo integrates over.'''
        a, b = self.support
        if a >= b:
            return AnnulusSpec(dim, 0.0, 0.0)
        if not math.isfinite(b):
            raise ParameterError(
                _('%s has unbounded support, Monte Carlo needs a bounded one '
                  '(use truncated())') % self.label)
        if a == 0:
            return BallSpec.central(dim, b)
        return AnnulusSpec(dim, a, b)

    def spot_check(self, dim, count=64, seed=0):
        '''Compare phi with its declared profile on random points.'''
        if self.profile is None:
            return True
        rng = np.random.default_rng(seed)
        b = self.support[1] if math.isfinite(self.support[1]) else 4.0
        y = rng.uniform(-b, b, (count, dim.coords))
        rho = heisenberg.koranyi_norm(y)
        return bool(np.allclose(self(y), self.profile(rho), rtol=1e-12,
                                atol=1e-300, equal_nan=True))

    def __repr__(self):
        return '<GeneratingFunction %s>' % self.label


def _radial(g, support, hint=0.0, breakpoints=(), nonnegative=True,
            label='phi'):
    a, b = support
    points = tuple(p for p in (a, b) + tuple(breakpoints)
                   if 0 < p < math.inf)
    profile = RadialProfile(g, hint, tuple(sorted(set(points))), (a, b))

    def phi(y):
        return g(heisenberg.koranyi_norm(y))

    return GeneratingFunction(phi, profile, (a, b), nonnegative, label)


def ball_indicator(b=1.0):
    '''1 on |y|_h <= b.'''
    b = float(b)
    if not b > 0:
        raise ParameterError(_('a ball indicator needs b > 0'))
    return _radial(lambda rho: (rho <= b).astype(float), (0.0, b),
                   label='ball-indicator(%g)' % b)


def annulus_indicator(a, b):
    '''1 on a <= |y|_h <= b.'''
    a, b = float(a), float(b)
    if not 0 <= a < b:
        raise ParameterError(_('a support annulus requires 0 <= a < b'))
    return _radial(lambda rho: ((rho >= a) & (rho <= b)).astype(float),
                   (a, b), label='annulus-indicator(%g,%g)' % (a, b))


def power_ball(beta, b=1.0):
    '''|y|_h^beta on |y|_h <= b.'''
    beta, b = float(beta), float(b)
    if not b > 0:
        raise ParameterError(_('a ball needs b > 0'))

    def g(rho):
        with np.errstate(divide='ignore', invalid='ignore'):
            return np.where(rho <= b, rho ** beta, 0.0)

    return _radial(g, (0.0, b), hint=beta, label='power-ball(%g)' % beta)


def log_damped_ball(beta=0.0):
    '''|y|_h^beta / (1 + |log_2 |y|_h|) on |y|_h <= 1.'''
    beta = float(beta)

    def g(rho):
        with np.errstate(divide='ignore', invalid='ignore'):
            value = rho ** beta / (1.0 + np.abs(np.log2(rho)))
        return np.where(rho <= 1.0, value, 0.0)

    return _radial(g, (0.0, 1.0), hint=beta,
                   label='log-damped-ball(%g)' % beta)


def gaussian():
    '''exp(-|y|_h^2), cut off at |y|_h = defs.gaussian_cutoff.'''
    cutoff = defs.gaussian_cutoff

    def g(rho):
        return np.where(rho <= cutoff, np.exp(-rho ** 2), 0.0)

    return _radial(g, (0.0, cutoff), label='gaussian')


def zero():
    def g(rho):
        return np.zeros(np.shape(rho))

    return _radial(g, (0.0, 0.0), label='zero')


def truncated(Phi, eps, R):
    '''Phi restricted to eps <= |y|_h <= R.'''
    if not 0 <= eps < R:
        raise ParameterError(_('truncation requires 0 <= eps < R'))
    a = max(Phi.support[0], eps)
    b = min(Phi.support[1], R)
    b = max(a, b)

    def cut(rho):
        return (rho >= eps) & (rho <= R)

    def phi(y):
        rho = heisenberg.koranyi_norm(y)
        return np.where(cut(rho), Phi(y), 0.0)

    profile = None
    if Phi.profile is not None:
        inner = Phi.profile
        points = tuple(p for p in (eps, R) if 0 < p < math.inf)
        profile = RadialProfile(
            lambda rho: np.where(cut(rho), inner(rho), 0.0),
            inner.singular_exponent_hint if eps == 0 else None,
            tuple(sorted(set(inner.breakpoints + points))), (a, b))

    return GeneratingFunction(phi, profile, (a, b), Phi.nonnegative,
                              '%s[%g,%g]' % (Phi.label, eps, R))


def from_callable(func, support, nonnegative=False, profile=None,
                  label='callable'):
    '''A kernel given as a vectorised callable of y (..., 2n+1).

    Pass profile only if func really is g(|y|_h).'''
    return GeneratingFunction(func, profile, support, nonnegative, label)
