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
Evaluation of

    H f(x)     = int Phi(y) / |y|_h^Q f(A(y)x) dy,
    H^b f(x)   = int Phi(y) / |y|_h^Q f(A(y)x) [b(x) - b(A(y)x)] dy,

and of the two commutator pieces, piece 1 over {||A(y)|| <= 1} and piece 2
over {||A(y)|| > 1}.

Exact path: Phi radial, A radial scaled (A(y) = D delta_(1/|y|_h)) and f, b
radial. Then f(A(y)x) = f(|Dx|_h / rho) and the y integral is a radial
integral in rho = |y|_h. Everything else is integrated by stratified Monte
Carlo over the support of Phi, with equal samples per dyadic shell.
"""

import math

import numpy as np

from hhl import defs
from hhl import quad
from hhl.model import fields
from hhl.model import heisenberg
from hhl.model.fields import RadialProfile
from hhl.model.results import OperatorEval
from hhl.utils.exceptions import ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


pieces = (None, 1, 2)

# Inner sample of Monte Carlo image fields
field_samples = 2 ** 10
field_strata = 8


def _piece_range(A, piece):
    if piece not in pieces:
        raise ParameterError(_('a commutator piece is 1 or 2, got %s') % piece)
    if piece is None:
        return 0.0, math.inf
    split = A.split_radius
    if piece == 1:
        return split, math.inf
    return 0.0, split


def _exact(Phi, A, *radial):
    return (Phi.profile is not None and A.radial_scaled and
            all(f.profile is not None for f in radial))


def _scaled_norm(A, x):
    '''|Dx|_h for a radial scaled A.'''
    return float(heisenberg.koranyi_norm(A.scale * x))


def _kernel_integral(Phi, A, F, lo=0.0, hi=math.inf, hint=None, points=()):
    '''omega_Q int_lo^hi g(rho) rho^-1 F(rho) drho.'''
    g = Phi.profile
    Q = A.dim.Q

    def h(rho):
        with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
            value = g(rho)
            res = value * F(rho)
        return np.where(value == 0, 0.0, res)

    breakpoints = tuple(sorted(set(tuple(g.breakpoints) +
                                   tuple(p for p in points if 0 < p < math.inf))))
    profile = RadialProfile(h, hint, breakpoints, g.support)
    return quad.integrate_radial(profile, A.dim, lo, hi, degree=-Q)


def _moved_breakpoints(f, r):
    '''Radii rho where |Dx|/rho crosses a breakpoint of f.'''
    if f.profile is None or r == 0:
        return ()
    return tuple(r / p for p in f.profile.breakpoints if p > 0)


def _power_hint(Phi, A, s):
    '''Exponent of g(rho) f(r / rho) at 0, without the rho^-Q of the kernel.'''
    hint = Phi.profile.singular_exponent_hint
    if hint is None:
        return None
    return hint - s


def _mc_config(cfg):
    if cfg is None:
        cfg = quad.McConfig()
    return cfg.replace(allocation='log')


def _mc_eval(Phi, A, x, cfg, integrand, piece=None):
    dim = A.dim
    sample = quad.sample_region(Phi.region(dim), dim, _mc_config(cfg))
    if sample.points.shape[0] == 0:
        return OperatorEval(0.0, 0.0, 'mc')
    y = sample.points
    rho = heisenberg.koranyi_norm(y)
    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        kernel = Phi(y) / rho ** dim.Q
        moved = A.apply(y, x)
        values = kernel * integrand(moved)
    values = np.where(kernel == 0, 0.0, values)
    if piece is not None:
        norms = A.norm(y)
        keep = norms <= 1 if piece == 1 else norms > 1
        values = np.where(keep, values, 0.0)
    value, err = sample.estimate(values)
    return OperatorEval(value, err, 'mc')


def eval_hausdorff(Phi, A, f, x, cfg=None):
    '''H_(Phi, A) f(x).

    :return: :py:class:`OperatorEval`
    :raises DivergenceError: if the y integral diverges
    '''
    x = A.dim.check(x)
    if Phi.is_zero:
        return OperatorEval(0.0, 0.0, 'radial_exact')

    if _exact(Phi, A, f):
        r = _scaled_norm(A, x)
        fr = f.profile
        hint = None
        if f.power is not None:
            hint = _power_hint(Phi, A, f.power[1])

        def F(rho):
            return fr(r / rho)

        value, err = _kernel_integral(Phi, A, F, hint=hint,
                                      points=_moved_breakpoints(f, r))
        return OperatorEval(value, err, 'radial_exact')

    return _mc_eval(Phi, A, x, cfg, f)


def _commutator(piece, Phi, A, b, f, x, cfg):
    x = A.dim.check(x)
    if Phi.is_zero:
        return OperatorEval(0.0, 0.0, 'radial_exact')
    lo, hi = _piece_range(A, piece)

    if _exact(Phi, A, f, b):
        r = _scaled_norm(A, x)
        rx = float(heisenberg.koranyi_norm(x))
        fr = f.profile
        br = b.profile
        bx = float(br(np.array(rx)))
        hint = None
        if f.power is not None and (b.log is not None or b.power is not None):
            hint = _power_hint(Phi, A, f.power[1])

        def F(rho):
            moved = r / rho
            return fr(moved) * (bx - br(moved))

        points = _moved_breakpoints(f, r) + _moved_breakpoints(b, r)
        value, err = _kernel_integral(Phi, A, F, lo, hi, hint, points)
        return OperatorEval(value, err, 'radial_exact')

    bx = float(b(x))

    def integrand(moved):
        return f(moved) * (bx - b(moved))

    return _mc_eval(Phi, A, x, cfg, integrand, piece)


def eval_commutator(Phi, A, b, f, x, cfg=None):
    '''H^b_(Phi, A) f(x) = b(x) H f(x) - H(b f)(x), as one y integral.'''
    return _commutator(None, Phi, A, b, f, x, cfg)


def eval_commutator_piece(piece, Phi, A, b, f, x, cfg=None):
    '''Piece 1 integrates over ||A(y)|| <= 1, piece 2 over ||A(y)|| > 1.'''
    if piece not in (1, 2):
        raise ParameterError(_('a commutator piece is 1 or 2, got %s') % piece)
    return _commutator(piece, Phi, A, b, f, x, cfg)


# Image fields ==========================================================


def _power_constant(Phi, A, s, lo=0.0, hi=math.inf, log=False):
    '''omega_Q int g(rho) rho^(-s-1) [ln rho] drho.'''
    if log:
        def F(rho):
            return rho ** (-s) * np.log(rho)
    else:
        def F(rho):
            return rho ** (-s)
    return _kernel_integral(Phi, A, F, lo, hi, _power_hint(Phi, A, s))[0]


def _scaled_power(A, coef, s, label):
    if A.is_dilation:
        return fields.PowerField(s, coef)
    scale = A.scale

    def func(x):
        with np.errstate(divide='ignore', invalid='ignore'):
            return coef * heisenberg.koranyi_norm(scale * x) ** s

    return fields.CallableField(func, label=label)


class _RadialImage(object):
    '''g_T(r) for an image field under a dilation, one radial integral per r.'''

    def __init__(self, value_at):
        self.value_at = value_at

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        flat = r.ravel()
        cache = dict()
        out = np.empty(flat.shape)
        for i, value in enumerate(flat):
            key = float(value)
            if key not in cache:
                cache[key] = self.value_at(key)
            out[i] = cache[key]
        return out.reshape(r.shape)


class _SampledImage(object):
    '''T f(x) on arrays of x, all points sharing one y sample.'''

    def __init__(self, Phi, A, cfg, integrand, piece=None):
        dim = A.dim
        if cfg is None:
            cfg = quad.McConfig(samples=field_samples, strata=field_strata)
        self.A = A
        self.integrand = integrand
        self.sample = quad.sample_region(Phi.region(dim), dim, _mc_config(cfg))
        y = self.sample.points
        rho = heisenberg.koranyi_norm(y)
        with np.errstate(divide='ignore', invalid='ignore'):
            kernel = Phi(y) / rho ** dim.Q
        weights = np.where(kernel == 0, 0.0, kernel * self.sample.weights)
        if piece is not None and y.shape[0]:
            norms = A.norm(y)
            keep = norms <= 1 if piece == 1 else norms > 1
            weights = np.where(keep, weights, 0.0)
        self.weights = weights
        if A.kind == 'general':
            self.matrices = A.matrices(y)
        else:
            self.diagonals = A.diagonals(y) if y.shape[0] else np.empty((0, dim.coords))

    def __call__(self, x):
        x = heisenberg.coordinates(x)
        shape = x.shape[:-1]
        xs = x.reshape(-1, x.shape[-1])
        ny = self.weights.shape[0]
        out = np.zeros(xs.shape[0])
        if ny == 0:
            return out.reshape(shape)
        chunk = max(1, defs.norm_batch_points // (ny * xs.shape[1]))
        for start in range(0, xs.shape[0], chunk):
            part = xs[start:start + chunk]
            if self.A.kind == 'general':
                moved = np.einsum('nij,mj->mni', self.matrices, part)
            else:
                moved = part[:, None, :] * self.diagonals[None, :, :]
            with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
                values = self.integrand(part, moved)
            values = np.where(self.weights[None, :] == 0, 0.0, values)
            out[start:start + chunk] = values @ self.weights
        return out.reshape(shape)


def hausdorff_field(Phi, A, f, cfg=None):
    '''H_(Phi, A) f as a ScalarField.

    Closed form for power f under radial scaled A, one radial integral per
    radius for other radial f under a dilation, a sampled field otherwise
    (cfg is the inner sample, small by default).
    '''
    if Phi.is_zero:
        return fields.ConstantField(0.0)

    if Phi.profile is not None and A.radial_scaled and f.power is not None:
        coef, s = f.power
        K = _power_constant(Phi, A, s)
        return _scaled_power(A, coef * K, s, 'H(%s)' % f.label)

    if _exact(Phi, A, f) and A.is_dilation:
        def value_at(r):
            return eval_hausdorff(Phi, A, f, _radial_point(A.dim, r)).value
        return fields.RadialField(_RadialImage(value_at), label='H(%s)' % f.label)

    def integrand(xs, moved):
        return f(moved)

    return fields.CallableField(_SampledImage(Phi, A, cfg, integrand),
                                label='H(%s)' % f.label)


def commutator_field(Phi, A, b, f, piece=None, cfg=None):
    '''H^b_(Phi, A) f (or one of its pieces) as a ScalarField.'''
    if piece not in pieces:
        raise ParameterError(_('a commutator piece is 1 or 2, got %s') % piece)
    label = 'H^b%s(%s)' % ('' if piece is None else ',%i' % piece, f.label)
    if Phi.is_zero:
        return fields.ConstantField(0.0)

    if (Phi.profile is not None and A.radial_scaled and f.power is not None
            and b.log is not None):
        coef, s = f.power
        lo, hi = _piece_range(A, piece)
        K1 = _power_constant(Phi, A, s, lo, hi, log=True)
        if A.is_dilation:
            return fields.PowerField(s, coef * b.log * K1)
        K0 = _power_constant(Phi, A, s, lo, hi)
        scale = A.scale
        cb = b.log

        def func(x):
            rx = heisenberg.koranyi_norm(x)
            rd = heisenberg.koranyi_norm(scale * x)
            with np.errstate(divide='ignore', invalid='ignore'):
                return coef * rd ** s * cb * ((np.log(rx) - np.log(rd)) * K0 + K1)

        return fields.CallableField(func, label=label)

    if _exact(Phi, A, f, b) and A.is_dilation:
        def value_at(r):
            return _commutator(piece, Phi, A, b, f,
                               _radial_point(A.dim, r), None).value
        return fields.RadialField(_RadialImage(value_at), label=label)

    def integrand(xs, moved):
        bx = b(xs)[:, None]
        return f(moved) * (bx - b(moved))

    return fields.CallableField(_SampledImage(Phi, A, cfg, integrand, piece),
                                label=label)


def _radial_point(dim, r):
    '''A point with |x|_h = r.'''
    x = np.zeros(dim.coords)
    x[0] = r
    return x
