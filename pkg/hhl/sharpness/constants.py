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
The constants of the boundedness statements and the integrals deciding
their sharpness.

Every constant is an integral over y of

    |Phi(y)| / |y|_h^Q  F(||A(y)||, ||A(y)^-1||, |det A(y)|)

split into the piece over ||A(y)|| > 1 ("norm>1") and the piece over
||A(y)|| <= 1 ("norm<=1"). For radial Phi and radial scaled A the three
quantities only depend on rho = |y|_h and the pieces are radial integrals
over (0, ||D||) and (||D||, inf). Otherwise they are sampled.
"""

import math

import numpy as np

from hhl import log
from hhl import quad
from hhl.model.fields import RadialProfile
from hhl.model.results import TheoremConstant
from hhl.utils.exceptions import DivergenceError, ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


OUTER = 'norm>1'
INNER = 'norm<=1'

ids = ('C1', 'C2', 'C3', 'C4', 'C5', 'Sharp11', 'Log-i', 'Log-ii')

# piece names of log_integrals and their descriptive aliases
log_pieces = {'i': 'i', 'ii': 'ii', 'inner': 'i', 'outer': 'ii'}


def _log2(N):
    with np.errstate(divide='ignore'):
        return np.log2(N)


def _scaled(N, D, Q):
    '''||A||^Q / |det A|'''
    return N ** Q / np.abs(D)


def _power_part(N, M, D, alpha, lam, p, Q):
    '''||A||^((Q + alpha)(lambda + 1/p)) |det A|^(-1/p) times
    ||A^-1||^(alpha/p) (alpha > 0) or ||A||^(-alpha/p) (alpha <= 0).'''
    res = N ** ((Q + alpha) * (lam + 1.0 / p)) / np.abs(D) ** (1.0 / p)
    if alpha > 0:
        return res * M ** (alpha / p)
    return res * N ** (-alpha / p)


def _switch_points(A):
    '''Radii where |log2 ||A||| meets ||A||^Q / |det A| (radial scaled A).'''
    if not A.radial_scaled:
        return ()
    c = A.scale_norm ** A.dim.Q / abs(A.scale_det)
    split = A.split_radius
    return (split * 2.0 ** -c, split * 2.0 ** c)


def _radial_piece(Phi, A, factor, piece, points):
    g = Phi.profile
    Q = A.dim.Q
    split = A.split_radius

    def h(rho):
        with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
            kernel = np.abs(g(rho))
            value = kernel * factor(A.norm_radial(rho), A.inv_norm_radial(rho),
                                    A.det_radial(rho))
        return np.where(kernel == 0, 0.0, value)

    breakpoints = tuple(sorted(set(tuple(g.breakpoints) +
                                   tuple(p for p in points if 0 < p < math.inf))))
    profile = RadialProfile(h, None, breakpoints, g.support)
    if piece == OUTER:
        return quad.integrate_radial(profile, A.dim, 0.0, split, degree=-Q)
    return quad.integrate_radial(profile, A.dim, split, math.inf, degree=-Q)


def _sampled_pieces(Phi, A, factors, cfg):
    '''All pieces from one common sample of the support of Phi.'''
    dim = A.dim
    if cfg is None:
        cfg = quad.McConfig()
    sample = quad.sample_region(Phi.region(dim), dim, cfg.replace(allocation='log'))
    res = dict()
    if sample.points.shape[0] == 0:
        return {piece: (0.0, 0.0) for piece in factors}
    y = sample.points
    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        kernel = np.abs(Phi(y)) / sample.radii ** dim.Q
    N = A.norm(y)
    M = A.inv_norm(y)
    D = A.det(y)
    for piece, factor in factors.items():
        keep = N > 1 if piece == OUTER else N <= 1
        with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
            values = kernel * factor(N, M, D)
        values = np.where(keep & (kernel != 0), values, 0.0)
        res[piece] = sample.estimate(values)
    return res


def _evaluate(id, Phi, A, factors, params, cfg, points=()):
    '''Integrate every piece; a divergent piece becomes +inf.'''
    if Phi.is_zero:
        return TheoremConstant(id, {piece: 0.0 for piece in factors}, params)

    pieces = dict()
    error = 0.0
    witness = None
    if Phi.profile is not None and A.radial_scaled:
        for piece, factor in factors.items():
            try:
                value, err = _radial_piece(Phi, A, factor, piece, points)
            except DivergenceError as exc:
                pieces[piece] = math.inf
                if witness is None:
                    witness = exc.witness
                continue
            pieces[piece] = value
            error += err
    else:
        for piece, (value, err) in _sampled_pieces(Phi, A, factors, cfg).items():
            pieces[piece] = value
            error = math.hypot(error, err)
        params = dict(params, mode='mc')

    return TheoremConstant(id, pieces, params, error, witness)


def _require(condition, message):
    if not condition:
        raise ParameterError(message)


def constant_C1(Phi, A, prm, cfg=None):
    '''The constant of the A_q weighted Hausdorff bound.

    Needs prm.p1 (source exponent), prm.q and prm.delta.
    '''
    _require(prm.p1 is not None and prm.q is not None and prm.delta is not None,
             _('C1 requires p1, q and delta'))
    Q = A.dim.Q
    lam, q, p1, delta = prm.lam, prm.q, prm.p1, prm.delta

    def outer(N, M, D):
        return _scaled(N, D, Q) ** (q / p1) * N ** (Q * lam * (delta - 1) / delta)

    def inner(N, M, D):
        return _scaled(N, D, Q) ** (q / p1) * N ** (Q * lam * q)

    return _evaluate('C1', Phi, A, {OUTER: outer, INNER: inner},
                     prm.as_dict(), cfg)


def constant_C2(Phi, A, prm, cfg=None):
    '''The constant of the A_q weighted commutator bound.'''
    _require(prm.p1 is not None and prm.q is not None and prm.delta is not None,
             _('C2 requires p1, q and delta'))
    Q = A.dim.Q
    lam, q, p1, delta = prm.lam, prm.q, prm.p1, prm.delta

    def outer(N, M, D):
        s = _scaled(N, D, Q)
        return (s ** (q / p1) * N ** (Q * lam * (delta - 1) / delta) *
                np.maximum(s, _log2(N)))

    def inner(N, M, D):
        s = _scaled(N, D, Q)
        return s ** (q / p1) * N ** (Q * lam * q) * np.maximum(s, -_log2(N))

    return _evaluate('C2', Phi, A, {OUTER: outer, INNER: inner},
                     prm.as_dict(), cfg, _switch_points(A))


def constant_C3(Phi, A, alpha, p, lam, cfg=None):
    '''The constant of the power weighted Hausdorff bound; the branch
    follows the sign of alpha.'''
    Q = A.dim.Q
    _require(alpha > -Q, _('requires alpha > -Q = %(mQ)i, got %(alpha)g') %
             {'mQ': -Q, 'alpha': alpha})

    def factor(N, M, D):
        return _power_part(N, M, D, alpha, lam, p, Q)

    return _evaluate('C3', Phi, A, {OUTER: factor, INNER: factor},
                     dict(alpha=alpha, p=p, lam=lam), cfg)


def constant_C4_C5(Phi, A, alpha, p, p1, p2, lam, cfg=None):
    '''C4 for alpha <= 0, C5 for alpha > 0.'''
    Q = A.dim.Q
    _require(math.isclose(1.0 / p, 1.0 / p1 + 1.0 / p2, rel_tol=1e-12),
             _('requires 1/p = 1/p1 + 1/p2'))
    _require(alpha > -Q, _('requires alpha > -Q = %(mQ)i, got %(alpha)g') %
             {'mQ': -Q, 'alpha': alpha})
    if alpha > 0:
        _require(p2 > (Q + alpha) / Q,
                 _('requires p2 > (Q + alpha)/Q = %g for alpha > 0') %
                 ((Q + alpha) / Q))

    def commutator_part(N, M, D):
        return (_power_part(N, M, D, alpha, lam, p1, Q) *
                np.maximum(_scaled(N, D, Q), np.abs(_log2(N))))

    if alpha <= 0:
        id = 'C4'
        factor = commutator_part
    else:
        id = 'C5'

        def factor(N, M, D):
            return _power_part(N, M, D, alpha, lam, p, Q) + commutator_part(N, M, D)

    return _evaluate(id, Phi, A, {OUTER: factor, INNER: factor},
                     dict(alpha=alpha, p=p, p1=p1, p2=p2, lam=lam), cfg,
                     _switch_points(A))


def _check_sharp(Phi, A):
    _require(Phi.nonnegative,
             _('the sharp statements require a nonnegative Phi'))
    _require(A.comparability_constant is not None,
             _('the sharp statements require ||A^-1(y)|| <= C0 ||A(y)||^-1 '
               '(declare the comparability constant C0)'))


def sharp_integral(Phi, A, alpha, lam, cfg=None):
    '''int Phi(y) / |y|_h^Q ||A(y)||^((Q + alpha) lambda) dy

    Finite iff H_(Phi, A) is bounded on the power weighted Morrey space; a
    divergent integral is a verdict, not an error.
    '''
    _check_sharp(Phi, A)
    s = (A.dim.Q + alpha) * lam

    def factor(N, M, D):
        return N ** s

    res = _evaluate('Sharp11', Phi, A, {OUTER: factor, INNER: factor},
                    dict(alpha=alpha, lam=lam), cfg)
    if not res.finite:
        log.interactive(_('sharp integral diverges (witness %s)\n') % res.witness)
    return res


def log_integrals(piece, Phi, A, alpha, lam, cfg=None):
    '''The log weighted integrals deciding the two commutator pieces.

    piece "i" (alias "inner"): over ||A(y)|| <= 1 with |log2 ||A(y)|||,
    piece "ii" (alias "outer"): over ||A(y)|| > 1 with log2 ||A(y)||.
    '''
    if piece not in log_pieces:
        raise ParameterError(_('the log integrals are "i" or "ii", got %s')
                             % piece)
    _check_sharp(Phi, A)
    s = (A.dim.Q + alpha) * lam

    def factor(N, M, D):
        return N ** s * np.abs(_log2(N))

    if log_pieces[piece] == 'i':
        return _evaluate('Log-i', Phi, A, {INNER: factor},
                         dict(alpha=alpha, lam=lam), cfg)
    return _evaluate('Log-ii', Phi, A, {OUTER: factor},
                     dict(alpha=alpha, lam=lam), cfg)


def outer_lower_bound(Phi, A, alpha, lam, cfg=None):
    '''I1 - ln(C0) I2, the pointwise lower bound factor of the outer
    commutator piece on the extremizers, with

    I1 = int_(||A|| > C0) Phi/|y|^Q ||A||^s ln(||A|| / C0),
    I2 = int_(1 < ||A|| <= C0) Phi/|y|^Q ||A||^s C0^-s.
    '''
    _check_sharp(Phi, A)
    s = (A.dim.Q + alpha) * lam
    C0 = A.comparability_constant

    def first(N, M, D):
        with np.errstate(divide='ignore', invalid='ignore'):
            return np.where(N > C0, N ** s * np.log(N / C0), 0.0)

    def second(N, M, D):
        return np.where(N <= C0, N ** s * C0 ** (-s), 0.0)

    points = (A.split_radius / C0,) if A.radial_scaled else ()
    I1 = _evaluate('Log-ii', Phi, A, {OUTER: first}, {}, cfg, points)
    I2 = _evaluate('Log-ii', Phi, A, {OUTER: second}, {}, cfg, points)
    if C0 == 1:
        return I1.value
    return I1.value - math.log(C0) * I2.value
