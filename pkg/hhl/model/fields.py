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

'''
Scalar fields on H^n.

A field is evaluated on arrays of points (last axis = coordinates). Catalog
entries declare what is known about them:

 * ``profile``: a :py:class:`RadialProfile` if f(x) = g(|x|_h),
 * ``power``: ``(coef, s)`` if f(x) = coef |x|_h^s,
 * ``log``: ``coef`` if f(x) = coef ln |x|_h.

The integration and operator code only trusts these declarations; it never
inspects a callable to guess its structure.
'''

import math
from dataclasses import dataclass

import numpy as np

from hhl import defs
from hhl.utils.exceptions import ParameterError
from . import heisenberg

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


@dataclass(frozen=True)
class RadialProfile(object):
    '''g(rho) for rho > 0.

    :ivar g: vectorised callable of rho
    :ivar singular_exponent_hint: sigma if g(rho) ~ rho^sigma as rho -> 0
    :ivar breakpoints: radii where g is not smooth
    :ivar support: (lo, hi), g vanishes outside [lo, hi]
    '''
    g: object
    singular_exponent_hint: object = None
    breakpoints: tuple = ()
    support: tuple = (0.0, math.inf)

    def __call__(self, rho):
        return self.g(np.asarray(rho, dtype=float))

    def restricted(self, lo, hi):
        lo = max(lo, self.support[0])
        hi = min(hi, self.support[1])
        return lo, hi


def _merge_breakpoints(*groups):
    points = set()
    for group in groups:
        points.update(float(p) for p in group if 0 < p < math.inf)
    return tuple(sorted(points))


class ScalarField(object):
    '''Base class of the catalog. Subclasses implement evaluate().'''

    profile = None
    power = None
    log = None
    label = 'field'

    def __call__(self, x):
        return self.evaluate(heisenberg.coordinates(x))

    def evaluate(self, x):
        raise NotImplementedError

    @property
    def is_radial(self):
        return self.profile is not None

    def __mul__(self, other):
        if isinstance(other, ScalarField):
            return ProductField(self, other)
        return ScaledField(float(other), self)

    def __rmul__(self, other):
        return ScaledField(float(other), self)

    def __add__(self, other):
        if not isinstance(other, ScalarField):
            other = ConstantField(float(other))
        return SumField(self, other)

    __radd__ = __add__

    def __neg__(self):
        return ScaledField(-1.0, self)

    def __sub__(self, other):
        if not isinstance(other, ScalarField):
            other = ConstantField(float(other))
        return SumField(self, -other)

    def __repr__(self):
        return '<%s %s>' % (self.__class__.__name__, self.label)


class RadialField(ScalarField):
    '''f(x) = g(|x|_h) for a vectorised g.'''

    def __init__(self, g, breakpoints=(), support=(0.0, math.inf), hint=None,
                 label='radial'):
        self.profile = RadialProfile(g, hint, _merge_breakpoints(breakpoints),
                                     tuple(support))
        self.label = label

    def evaluate(self, x):
        rho = heisenberg.koranyi_norm(x)
        return self.profile(rho)


class PowerField(RadialField):
    '''coef |x|_h^s; the extremizer f* is PowerField((Q + alpha) lambda).'''

    def __init__(self, s, coef=1.0):
        s = float(s)
        coef = float(coef)

        def g(rho):
            with np.errstate(divide='ignore', invalid='ignore'):
                return coef * rho ** s

        RadialField.__init__(self, g, hint=s, label='power(%g)' % s)
        self.power = (coef, s)


class LogField(RadialField):
    '''coef ln|x|_h; coef = 1 gives b*, coef = -1 gives b~ = ln(1/|x|_h).'''

    def __init__(self, coef=1.0):
        coef = float(coef)

        def g(rho):
            with np.errstate(divide='ignore'):
                return coef * np.log(rho)

        RadialField.__init__(self, g, hint=0.0, label='log(%g)' % coef)
        self.log = coef


class ConstantField(RadialField):

    def __init__(self, c):
        c = float(c)

        def g(rho):
            return np.full(np.shape(rho), c)

        RadialField.__init__(self, g, hint=0.0, label='constant(%g)' % c)
        self.power = (c, 0.0)
        self.value = c


def zero_field():
    return ConstantField(0.0)


class BallIndicator(RadialField):
    '''1 on the open central ball B(0, r).'''

    def __init__(self, r=1.0):
        r = float(r)
        if not r > 0:
            raise ParameterError(_('an indicator needs a radius > 0'))

        def g(rho):
            return (rho < r).astype(float)

        RadialField.__init__(self, g, breakpoints=(r,), support=(0.0, r),
                             hint=0.0, label='ball(%g)' % r)
        self.radius = r


class AnnulusIndicator(RadialField):
    '''1 on the central shell a <= |x|_h < b.'''

    def __init__(self, a, b):
        a, b = float(a), float(b)
        if not 0 <= a < b:
            raise ParameterError(_('an annulus indicator requires 0 <= a < b'))

        def g(rho):
            return ((rho >= a) & (rho < b)).astype(float)

        RadialField.__init__(self, g, breakpoints=(a, b), support=(a, b),
                             hint=0.0, label='annulus(%g,%g)' % (a, b))


class ScaledField(ScalarField):

    def __init__(self, c, f):
        self.c = float(c)
        self.f = f
        self.label = '%g*%s' % (self.c, f.label)
        if f.profile is not None:
            inner = f.profile
            scale = self.c
            self.profile = RadialProfile(lambda rho: scale * inner(rho),
                                         inner.singular_exponent_hint,
                                         inner.breakpoints, inner.support)
        if f.power is not None:
            self.power = (self.c * f.power[0], f.power[1])
        if f.log is not None:
            self.log = self.c * f.log

    def evaluate(self, x):
        return self.c * self.f.evaluate(x)


class ProductField(ScalarField):

    def __init__(self, *factors):
        if not factors:
            raise ParameterError(_('a product needs at least one factor'))
        self.factors = factors
        self.label = '*'.join(f.label for f in factors)

        if all(f.profile is not None for f in factors):
            profiles = [f.profile for f in factors]

            def g(rho):
                res = profiles[0](rho)
                for p in profiles[1:]:
                    res = res * p(rho)
                return res

            hints = [p.singular_exponent_hint for p in profiles]
            hint = sum(hints) if all(h is not None for h in hints) else None
            lo = max(p.support[0] for p in profiles)
            hi = min(p.support[1] for p in profiles)
            self.profile = RadialProfile(
                g, hint, _merge_breakpoints(*[p.breakpoints for p in profiles]),
                (lo, max(lo, hi)))

        if all(f.power is not None for f in factors):
            coef = 1.0
            s = 0.0
            for f in factors:
                coef *= f.power[0]
                s += f.power[1]
            self.power = (coef, s)

    def evaluate(self, x):
        res = self.factors[0].evaluate(x)
        for f in self.factors[1:]:
            res = res * f.evaluate(x)
        return res


class SumField(ScalarField):

    def __init__(self, *terms):
        if not terms:
            raise ParameterError(_('a sum needs at least one term'))
        self.terms = terms
        self.label = '+'.join(t.label for t in terms)

        if all(t.profile is not None for t in terms):
            profiles = [t.profile for t in terms]

            def g(rho):
                res = profiles[0](rho)
                for p in profiles[1:]:
                    res = res + p(rho)
                return res

            hints = [p.singular_exponent_hint for p in profiles]
            hint = min(hints) if all(h is not None for h in hints) else None
            lo = min(p.support[0] for p in profiles)
            hi = max(p.support[1] for p in profiles)
            self.profile = RadialProfile(
                g, hint, _merge_breakpoints(*[p.breakpoints for p in profiles]),
                (lo, hi))

        powers = [t.power for t in terms]
        if all(p is not None for p in powers) and len(set(p[1] for p in powers)) == 1:
            self.power = (sum(p[0] for p in powers), powers[0][1])
        logs = [t.log for t in terms]
        if all(l is not None for l in logs):
            self.log = sum(logs)

    def evaluate(self, x):
        res = self.terms[0].evaluate(x)
        for t in self.terms[1:]:
            res = res + t.evaluate(x)
        return res


class CallableField(ScalarField):
    '''A user callable on coordinate arrays.

    Pass ``profile`` only if the callable really is g(|x|_h); it is trusted
    without checking.
    '''

    def __init__(self, func, profile=None, label='callable'):
        self.func = func
        self.profile = profile
        self.label = label

    def evaluate(self, x):
        return np.asarray(self.func(x), dtype=float)


def vector_field_apply(j, f, x, h=None):
    '''X_j f(x) by central differences along the curve s -> x.(s e_j).

    Right translation by s e_j differentiates exactly as the left invariant
    field X_j = d_j + 2 x_(n+j) d_t (j <= n), X_(n+j) = d_(n+j) - 2 x_j d_t,
    X_(2n+1) = d_t.
    '''
    x = heisenberg.coordinates(x)
    count = x.shape[-1]
    if not 1 <= j <= count:
        raise ParameterError(_('vector field index must be in 1..%i') % count)
    if h is None:
        h = defs.fd_step * (1.0 + heisenberg.koranyi_norm(x))
    h = np.asarray(h, dtype=float)
    if np.any(~(h > 0)):
        raise ParameterError(_('finite difference step must be > 0'))

    unit = np.zeros(count)
    unit[j - 1] = 1.0
    step = h[..., None] * unit
    forward = f(heisenberg.group_mul(x, step))
    backward = f(heisenberg.group_mul(x, -step))
    return (forward - backward) / (2 * h)


def vector_field(j, f, h=None):
    '''The field X_j f, so that brackets can be formed by composition.'''
    return CallableField(lambda x: vector_field_apply(j, f, x, h),
                         label='X%i(%s)' % (j, getattr(f, 'label', 'f')))
