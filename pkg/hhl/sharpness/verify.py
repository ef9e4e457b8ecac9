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
Verification protocols.

Upper bounds: estimate ||T f|| / ||f|| (times ||b||_CMO for commutators) in
the Morrey norms of the statement and compare it with kappa times the
constant, since the bounds hold up to absolute constants.

Sharpness: evaluate T on the extremizers f* = |x|_h^((Q + alpha) lambda),
b* = ln|x|_h and b~ = ln(1/|x|_h). The pointwise lower bounds give
ratio >= integral, with equality for pure dilations. A divergent integral is
witnessed by truncating Phi to eps <= |y|_h <= 1/eps and watching the ratio
grow as eps = 2^-k decreases.
"""

import math

from hhl import defs
from hhl import log
from hhl import hausdorff
from hhl import norms
from hhl import weights
from hhl.model import fields
from hhl.model import results
from hhl.model.results import VerificationReport
from hhl.utils.exceptions import ParameterError

from . import constants
from .hypotheses import check_hypotheses, check_selector, \
    commutator_selectors, sharp_selectors, upper_bound_selectors

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


def constant_for(selector, Phi, A, prm, cfg=None):
    '''The constant (or deciding integral) of a statement.'''
    selector = check_selector(selector)
    if selector == '1.1':
        return constants.constant_C1(Phi, A, prm, cfg)
    if selector == '1.2':
        return constants.constant_C2(Phi, A, prm, cfg)
    if selector == '1.3':
        return constants.constant_C3(Phi, A, prm.alpha, prm.p, prm.lam, cfg)
    if selector == '1.4':
        return constants.constant_C4_C5(Phi, A, prm.alpha, prm.p, prm.p1,
                                        prm.p2, prm.lam, cfg)
    if selector == '1.5':
        return constants.sharp_integral(Phi, A, prm.alpha, prm.lam, cfg)
    if selector == '1.6i':
        return constants.log_integrals('i', Phi, A, prm.alpha, prm.lam, cfg)
    return constants.log_integrals('ii', Phi, A, prm.alpha, prm.lam, cfg)


def _source_exponent(selector, prm):
    if selector in ('1.3', '1.5'):
        return prm.p
    return prm.p1


def _relative(value, err):
    if value == 0 or not math.isfinite(value):
        return 0.0
    return abs(err / value)


def operator_ratio(selector, Phi, A, w, prm, f, b=None, piece=None, grid=None,
                   cfg=None):
    '''||T f||_(p, lambda) / (||f||_(p_source, lambda) ||b||_(CMO^p2)).

    :return: (ratio, error, tables, finite) where finite tells whether the
        denominator norms were finite
    '''
    selector = check_selector(selector)
    commutator = selector in commutator_selectors
    source = norms.morrey_norm(f, prm.replace(p=_source_exponent(selector, prm)),
                               w, grid, cfg)
    if commutator:
        image = hausdorff.commutator_field(Phi, A, b, f, piece)
    else:
        image = hausdorff.hausdorff_field(Phi, A, f)
    target = norms.morrey_norm(image, prm, w, grid, cfg)

    tables = {'source': source.table, 'image': target.table}
    denominator = source.value
    rel = _relative(source.value, source.error) + _relative(target.value,
                                                             target.error)
    if commutator:
        cmo = norms.cmo_norm(b, prm.p2, w, grid, cfg)
        tables['cmo'] = cmo.table
        denominator *= cmo.value
        rel += _relative(cmo.value, cmo.error)

    finite = math.isfinite(denominator)
    if not finite:
        return math.inf, 0.0, tables, False
    if denominator == 0:
        return (0.0 if target.value == 0 else math.inf), 0.0, tables, True
    ratio = target.value / denominator
    return ratio, ratio * rel, tables, True


def _weight_alpha(w):
    return w.alpha if w.kind == 'power' else 0.0


def verify_upper_bound(selector, Phi, A, w, prm, f=None, b=None, grid=None,
                       cfg=None, kappa=defs.kappa):
    '''Check ||T f|| / ||f|| <= kappa C for one of the four boundedness
    statements.

    f defaults to the extremizer of the weight, b to ln|x|_h.
    '''
    selector = check_selector(selector)
    if selector not in upper_bound_selectors:
        raise ParameterError(_('%s is a sharpness statement, use '
                               'verify_sharpness') % selector)
    prm = check_hypotheses(selector, prm, w, A, Phi)
    if f is None:
        f = norms.extremizer_field(_weight_alpha(w), prm.lam, w.dim)
    if b is None and selector in commutator_selectors:
        b = fields.LogField(1.0)

    bound = constant_for(selector, Phi, A, prm, cfg)
    ratio, err, tables, finite = operator_ratio(selector, Phi, A, w, prm, f, b,
                                                grid=grid, cfg=cfg)
    notes = list()
    if not bound.finite:
        verdict = results.DIVERGENCE_WITNESSED
        notes.append(_('the constant %s diverges, the bound is void') % bound.id)
    elif not finite:
        verdict = results.DIVERGENCE_WITNESSED
        notes.append(_('the test function is not in the source space'))
    elif ratio <= kappa * bound.value + defs.mc_sigma * err:
        verdict = results.BOUNDED_CONSISTENT
    else:
        verdict = results.BOUND_VIOLATED
        log.warn(_('%(sel)s: ratio %(ratio)g exceeds %(kappa)g x %(id)s = '
                   '%(bound)g') % {'sel': selector, 'ratio': ratio,
                                   'kappa': kappa, 'id': bound.id,
                                   'bound': bound.value})

    params = dict(prm.as_dict(), weight=w.label, phi=Phi.label, A=A.label,
                  f=f.label)
    if b is not None:
        params['b'] = b.label
    return VerificationReport(selector, ratio, bound, verdict, err,
                              tolerances=dict(kappa=kappa, sigma=defs.mc_sigma),
                              tables=tables, params=params, notes=notes)


def _sharp_setup(selector, Phi, A, alpha, prm):
    dim = A.dim
    w = weights.WeightSpec('power', alpha, dim)
    prm = check_hypotheses(selector, prm.replace(alpha=alpha), w, A, Phi)
    if not 1 + prm.p * prm.lam > 0:
        raise ParameterError(_('the extremizer check requires lambda > -1/p'))
    f = norms.extremizer_field(alpha, prm.lam, dim)
    b = None
    piece = None
    if selector == '1.6i':
        b, piece = fields.LogField(1.0), 1
    elif selector == '1.6ii':
        b, piece = fields.LogField(-1.0), 2
    return w, prm, f, b, piece


def _lower_bound(selector, Phi, A, prm, bound, cfg):
    '''The pointwise lower bound of T f* / f*, normalised like the ratio.'''
    if selector == '1.5':
        return bound.value
    dim = A.dim
    alpha = prm.alpha
    scale = (norms.extremizer_norm(alpha, prm.p, prm.lam, dim) /
             (norms.extremizer_norm(alpha, prm.p1, prm.lam, dim) *
              norms.log_cmo_norm(alpha, prm.p2, dim)))
    if selector == '1.6i':
        return math.log(2.0) * bound.value * scale
    return constants.outer_lower_bound(Phi, A, alpha, prm.lam, cfg) * scale


def _grows(values):
    '''Monotone growth whose increments do not die out.'''
    steps = [b - a for a, b in zip(values[:-1], values[1:])]
    if not steps or any(not step > 0 for step in steps):
        return False
    if len(steps) < 2:
        return True
    return steps[-1] / steps[-2] >= defs.ratio_threshold


def verify_sharpness(selector, Phi, A, alpha, prm, grid=None, cfg=None):
    '''Extremizer check of one of the sharp statements.

    Finite integral: ratio >= lower bound, and equality for pure dilations.
    Divergent integral: the truncated ratios grow without bound.
    '''
    selector = check_selector(selector)
    if selector not in sharp_selectors:
        raise ParameterError(_('%s is an upper bound statement, use '
                               'verify_upper_bound') % selector)
    w, prm, f, b, piece = _sharp_setup(selector, Phi, A, alpha, prm)
    bound = constant_for(selector, Phi, A, prm, cfg)
    params = dict(prm.as_dict(), weight=w.label, phi=Phi.label, A=A.label)
    tol = defs.equality_tolerance
    notes = list()

    if bound.finite:
        ratio, err, tables, finite = operator_ratio(selector, Phi, A, w, prm, f,
                                                    b, piece, grid, cfg)
        lower = _lower_bound(selector, Phi, A, prm, bound, cfg)
        slack = tol * abs(lower) + defs.mc_sigma * err
        verdict = results.SHARPNESS_WITNESSED
        if ratio < lower - slack:
            verdict = results.BOUND_VIOLATED
            notes.append(_('ratio below the extremizer lower bound'))
        elif A.is_dilation:
            if abs(ratio - lower) > slack:
                verdict = results.BOUND_VIOLATED
                notes.append(_('no equality for a pure dilation'))
            else:
                notes.append(_('equality'))
        return VerificationReport(selector, ratio, bound, verdict, err, lower,
                                  dict(equality=tol, sigma=defs.mc_sigma),
                                  tables, params, notes)

    eps_rows = list()
    ratios = list()
    last_tables = dict()
    for k in range(defs.truncation_k_min, defs.truncation_k_max + 1):
        eps = 2.0 ** -k
        cut = hausdorff.truncated(Phi, eps, 1.0 / eps)
        ratio, err, last_tables, finite = operator_ratio(
            selector, cut, A, w, prm, f, b, piece, grid, cfg)
        ratios.append(ratio)
        eps_rows.append((eps, ratio, err))
    tables = dict(last_tables, truncation=eps_rows)
    if _grows(ratios):
        verdict = results.SHARPNESS_WITNESSED
        notes.append(_('unbounded: the truncated ratios grow as eps -> 0'))
    else:
        verdict = results.BOUND_VIOLATED
        log.warn(_('%s: the integral diverges but the truncated ratios stay '
                   'bounded') % selector)
    return VerificationReport(selector, ratios[-1], bound, verdict, 0.0, None,
                              dict(threshold=defs.ratio_threshold),
                              tables, params, notes)
