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

from hhl import log
from hhl import quad
from hhl.model import fields
from hhl.model import heisenberg
from hhl.model.fields import RadialProfile
from hhl.model.heisenberg import BallSpec
from hhl.model.results import NormResult
from hhl.utils import parallel
from hhl.utils.exceptions import DivergenceError, ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


def weighted_power_profile(f, p, w):
    '''Radial profile of |f|^p w, None unless f is radial.'''
    g = f.profile
    if g is None:
        return None
    wp = w.profile

    def h(rho):
        with np.errstate(over='ignore', invalid='ignore'):
            value = np.abs(g(rho)) ** p
            res = value * wp(rho)
        return np.where(value == 0, 0.0, res)

    hint = None
    if g.singular_exponent_hint is not None:
        hint = g.singular_exponent_hint * p + (w.alpha if w.kind == 'power' else 0.0)
    points = tuple(sorted(set(tuple(g.breakpoints) + tuple(wp.breakpoints))))
    return RadialProfile(h, hint, points, g.support)


def _root(value, err, p):
    root = value ** (1.0 / p)
    if value > 0 and math.isfinite(value):
        return root, root * err / (p * value)
    return root, err ** (1.0 / p)


def _ball_integral(f, p, w, B, cfg):
    '''int_B |f|^p w with an error estimate.'''
    profile = weighted_power_profile(f, p, w)
    if profile is not None and B.is_central:
        return quad.integrate_radial(profile, w.dim, 0.0, B.radius)

    def integrand(x):
        with np.errstate(over='ignore', invalid='ignore'):
            value = np.abs(f(x)) ** p
            return np.where(value == 0, 0.0, value * w(x))

    return quad.integrate_mc(integrand, B, cfg, w.dim)


def lp_ball_norm(f, p, w, B, cfg=None):
    '''(int_B |f|^p w)^(1/p)

    :return: (value, error)
    :raises DivergenceError: if the integral diverges
    '''
    if not p >= 1:
        raise ParameterError(_('requires p >= 1, got %g') % p)
    w.validate()
    if len(B.center) != w.dim.coords:
        raise ParameterError(_('the ball and the weight live in different '
                               'dimensions'))
    return _root(*_ball_integral(f, p, w, B, cfg), p)


def _table(job, grid, cfg, kind, params, label):
    '''Run job(r) -> (value, err, witness) over the grid and reduce.'''
    threads = cfg.threads if cfg is not None else None
    rows = parallel.ordered_map(job, list(grid), threads)

    table = [(r, value, err) for r, (value, err, wit) in zip(grid, rows)]
    witness = None
    for r, (value, err, wit) in zip(grid, rows):
        if not math.isfinite(value):
            witness = wit if wit is not None else r
            log.warn(_('%(label)s: divergent at r = %(r)g, the %(kind)s norm '
                       'is infinite') % {'label': label, 'r': r, 'kind': kind})
            return NormResult(kind, math.inf, 0.0, r, table, witness, params)

    best = 0
    for i, row in enumerate(table):
        if row[1] > table[best][1]:
            best = i
    r, value, err = table[best]
    return NormResult(kind, value, err, r, table, witness, params)


def morrey_norm(f, prm, w, grid=None, cfg=None):
    '''Weighted central Morrey norm of f, maximised over the grid.

    :return: :py:class:`NormResult` with one (r, value, err) row per radius
    '''
    from . import RadiusGrid

    w.validate()
    prm.validate(w.dim)
    if grid is None:
        grid = RadiusGrid()
    p = prm.p
    exponent = -(1.0 + p * prm.lam)

    def job(r):
        B = BallSpec.central(w.dim, r)
        try:
            value, err = _ball_integral(f, p, w, B, cfg)
        except DivergenceError as exc:
            return math.inf, 0.0, exc.witness
        scale = w.central_mass(r) ** exponent
        value, err = _root(scale * value, scale * err, p)
        return value, err, None

    params = dict(prm.as_dict(), weight=w.label, f=f.label)
    return _table(job, grid, cfg, 'morrey', params, f.label)


def extremizer_field(alpha, lam, dim=None):
    '''f*(x) = |x|_h^((Q + alpha) lambda)'''
    if dim is None:
        dim = heisenberg.HeisDim()
    return fields.PowerField((dim.Q + alpha) * lam)


def extremizer_norm(alpha, p, lam, dim=None):
    '''Closed form Morrey norm of f*, the same at every radius:
    (Q + alpha)^lambda / (omega_Q^lambda (1 + p lambda)^(1/p)).

    +inf at the endpoint lambda = -1/p, where f* is not in L^p(w).
    '''
    if dim is None:
        dim = heisenberg.HeisDim()
    Q = dim.Q
    if not alpha > -Q:
        raise ParameterError(_('requires alpha > -Q = %(mQ)i, got %(alpha)g') %
                             {'mQ': -Q, 'alpha': alpha})
    if 1 + p * lam <= 0:
        return math.inf
    return ((Q + alpha) ** lam / (dim.omega_Q ** lam *
                                  (1 + p * lam) ** (1.0 / p)))
