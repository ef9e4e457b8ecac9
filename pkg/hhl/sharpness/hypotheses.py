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
Theorem selectors and the exponent relations each one assumes.

All relations that are inequalities between exponents are checked here,
before any integral is computed.
"""

import math

from hhl.model import heisenberg
from hhl.utils.exceptions import CatalogError, ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


# selector -> constant id
selectors = {
    '1.1': 'C1',
    '1.2': 'C2',
    '1.3': 'C3',
    '1.4': 'C4/C5',
    '1.5': 'Sharp11',
    '1.6i': 'Log-i',
    '1.6ii': 'Log-ii',
}

# descriptive spellings accepted for the selectors
aliases = {
    'aq-hausdorff': '1.1',
    'aq-commutator': '1.2',
    'power-hausdorff': '1.3',
    'power-commutator': '1.4',
    'sharp-hausdorff': '1.5',
    'sharp-commutator-inner': '1.6i',
    'sharp-commutator-outer': '1.6ii',
}

upper_bound_selectors = ('1.1', '1.2', '1.3', '1.4')
sharp_selectors = ('1.5', '1.6i', '1.6ii')

commutator_selectors = ('1.2', '1.4', '1.6i', '1.6ii')
aq_selectors = ('1.1', '1.2')


def check_selector(selector):
    '''The canonical selector of selector or one of its aliases.'''
    selector = aliases.get(selector, selector)
    if selector not in selectors:
        raise CatalogError(_('unknown theorem "%(sel)s", choose one of '
                             '%(all)s') %
                           {'sel': selector,
                            'all': ', '.join(list(selectors) + list(aliases))})
    return selector


def _require(condition, message):
    if not condition:
        raise ParameterError(message)


def default_delta(r_w):
    '''A reverse Hoelder order strictly between 1 and r_w.'''
    if math.isinf(r_w):
        return 2.0
    return (1.0 + r_w) / 2.0


def _holder_factor(r_w):
    '''q r_w / (r_w - 1) without q.'''
    if math.isinf(r_w):
        return 1.0
    return r_w / (r_w - 1.0)


def _check_aq(selector, prm, w):
    _require(w is not None, _('%s needs a weight') % selector)
    _require(prm.q is not None, _('%s requires q') % selector)
    _require(prm.p1 is not None, _('%s requires p1') % selector)
    q, p1 = prm.q, prm.p1
    _require(w.in_ap(q), _('requires w in A_q, %(w)s is not in A_%(q)g') %
             {'w': w.label, 'q': q})
    _require(-1.0 / p1 <= prm.lam,
             _('requires -1/p1 <= lambda < 0'))

    r_w = w.critical_rh
    delta = prm.delta if prm.delta is not None else default_delta(r_w)
    _require(1 < delta < r_w,
             _('requires 1 < delta < r_w = %(r)g, got delta = %(d)g') %
             {'r': r_w, 'd': delta})

    factor = q * _holder_factor(r_w)
    if selector == '1.1':
        _require(p1 > prm.p * factor,
                 _('requires p1 > p2 q r_w/(r_w - 1) = %g (p2 is the target '
                   'exponent p)') % (prm.p * factor))
    else:
        _require(prm.p2 is not None, _('%s requires p2') % selector)
        _require(1.0 / prm.p > (1.0 / p1 + 1.0 / prm.p2) * factor,
                 _('requires 1/p > (1/p1 + 1/p2) q r_w/(r_w - 1)'))
        _require(q <= prm.p2, _('requires q <= p2'))
    return prm.replace(delta=delta)


def _check_p2(prm, Q):
    alpha = prm.alpha
    if alpha > 0:
        _require(prm.p2 > (Q + alpha) / Q,
                 _('requires p2 > (Q + alpha)/Q = %g for alpha > 0') %
                 ((Q + alpha) / Q))


def check_hypotheses(selector, prm, w=None, A=None, Phi=None):
    '''Validate every exponent relation the selected statement assumes.

    :return: prm, with delta filled in for the A_q statements
    :raises ParameterError: naming the violated relation
    '''
    selector = check_selector(selector)
    if w is not None:
        dim = w.dim
    elif A is not None:
        dim = A.dim
    else:
        dim = heisenberg.HeisDim()
    Q = dim.Q
    prm.validate(dim)
    if w is not None:
        w.validate()
    if A is not None and w is not None and A.dim != w.dim:
        raise ParameterError(_('the weight and the matrix field live in '
                               'different dimensions'))

    if selector in aq_selectors:
        return _check_aq(selector, prm, w)

    if w is not None:
        _require(w.kind == 'power',
                 _('%s is stated for power weights') % selector)
        _require(w.alpha == prm.alpha,
                 _('the weight exponent %(w)g differs from alpha = %(a)g') %
                 {'w': w.alpha, 'a': prm.alpha})

    if selector in ('1.4', '1.6i', '1.6ii'):
        prm.check_holder()
        _check_p2(prm, Q)
        if selector == '1.4':
            _require(-1.0 / prm.p1 <= prm.lam,
                     _('requires -1/p1 <= lambda < 0'))
        else:
            _require(-1.0 / prm.p1 < prm.lam,
                     _('requires -1/p1 < lambda < 0'))

    if selector in sharp_selectors:
        if Phi is not None:
            _require(Phi.nonnegative,
                     _('the sharp statements require a nonnegative Phi'))
        if A is not None:
            _require(A.comparability_constant is not None,
                     _('the sharp statements require ||A^-1(y)|| <= C0 '
                       '||A(y)||^-1'))
    return prm
