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
from scipy import optimize, special

from hhl import defs
from hhl import quad
from hhl.model import fields
from hhl.model import heisenberg
from hhl.model.fields import RadialProfile
from hhl.model.heisenberg import BallSpec
from hhl.utils.exceptions import DivergenceError, ParameterError

from .morrey import _root, _table

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


# The sign change scan looks at [r * 2^-scan_depth, r]
scan_depth = 30


def ball_mean(b, r, dim, cfg=None):
    '''Unweighted mean of b over B(0, r).

    :return: (mean, error)
    '''
    B = BallSpec.central(dim, r)
    if b.profile is not None:
        value, err = quad.integrate_radial(b.profile, dim, 0.0, r)
    else:
        value, err = quad.integrate_mc(b, B, cfg, dim)
    measure = B.measure()
    return value / measure, err / measure


def _sign_changes(func, r):
    '''Radii in (0, r) where func changes sign, located by brentq.'''
    rho = np.geomspace(r * 2.0 ** -scan_depth, r, defs.cmo_root_scan)
    with np.errstate(divide='ignore', invalid='ignore'):
        values = func(rho)
    roots = list()
    for i in range(len(rho) - 1):
        a, b = values[i], values[i + 1]
        if not (np.isfinite(a) and np.isfinite(b)):
            continue
        if a == 0:
            roots.append(float(rho[i]))
        elif a * b < 0:
            roots.append(optimize.brentq(lambda t: float(func(np.array(t))),
                                         rho[i], rho[i + 1], xtol=1e-14))
    return tuple(p for p in roots if 0 < p < r)


def _oscillation_radial(b, p2, w, r):
    g = b.profile
    dim = w.dim
    mean = ball_mean(b, r, dim)[0]
    wp = w.profile

    def centred(rho):
        return g(rho) - mean

    def h(rho):
        with np.errstate(over='ignore', invalid='ignore'):
            value = np.abs(centred(rho)) ** p2
            res = value * wp(rho)
        return np.where(value == 0, 0.0, res)

    points = set(g.breakpoints) | set(wp.breakpoints) | set(_sign_changes(centred, r))
    profile = RadialProfile(h, None, tuple(sorted(points)), (0.0, math.inf))
    return quad.integrate_radial(profile, dim, 0.0, r)


def _oscillation_mc(b, p2, w, r, cfg):
    dim = w.dim
    B = BallSpec.central(dim, r)
    if cfg is None:
        cfg = quad.McConfig()
    sample = quad.sample_region(B, dim, cfg)
    values = b(sample.points)
    mean = sample.estimate(values)[0] / B.measure()
    with np.errstate(over='ignore', invalid='ignore'):
        osc = np.abs(values - mean) ** p2
        osc = np.where(osc == 0, 0.0, osc * w(sample.points))
    return sample.estimate(osc)


def cmo_norm(b, p2, w, grid=None, cfg=None):
    '''Weighted central BMO norm of b with exponent p2.

    The mean b_B is unweighted, the weight only enters the outer integral.

    :return: :py:class:`NormResult`
    '''
    from . import RadiusGrid

    if not 1 <= p2 < math.inf:
        raise ParameterError(_('requires 1 <= p2 < inf, got %g') % p2)
    w.validate()
    if grid is None:
        grid = RadiusGrid()

    def job(r):
        if isinstance(b, fields.ConstantField):
            return 0.0, 0.0, None
        try:
            if b.profile is not None:
                value, err = _oscillation_radial(b, p2, w, r)
            else:
                value, err = _oscillation_mc(b, p2, w, r, cfg)
        except DivergenceError as exc:
            return math.inf, 0.0, exc.witness
        mass = w.central_mass(r)
        value, err = _root(value / mass, err / mass, p2)
        return value, err, None

    params = dict(p2=p2, weight=w.label, b=b.label)
    return _table(job, grid, cfg, 'cmo', params, b.label)


def log_cmo_norm(alpha, p2, dim=None):
    '''CMO^p2 norm of ln|x|_h for the power weight |x|_h^alpha.

    The table is flat; its value is ((Q + alpha) c)^(1/p2) with
    c = int_0^inf |1/Q - u|^p2 exp(-(Q + alpha) u) du.
    '''
    if dim is None:
        dim = heisenberg.HeisDim()
    Q = dim.Q
    k = Q + alpha
    if not k > 0:
        raise ParameterError(_('requires alpha > -Q = %(mQ)i, got %(alpha)g') %
                             {'mQ': -Q, 'alpha': alpha})
    if not p2 >= 1:
        raise ParameterError(_('requires p2 >= 1, got %g') % p2)

    outer = special.gamma(p2 + 1) / k ** (p2 + 1)
    inner = quad.integrate_1d(lambda v: v ** p2 * np.exp(k * v), 0.0, 1.0 / Q)[0]
    c = math.exp(-k / Q) * (outer + inner)
    return (k * c) ** (1.0 / p2)
