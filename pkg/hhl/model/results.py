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

from . import buddy


# Verdicts of a VerificationReport
BOUNDED_CONSISTENT = 'bounded_consistent'
SHARPNESS_WITNESSED = 'sharpness_witnessed'
DIVERGENCE_WITNESSED = 'divergence_witnessed'
BOUND_VIOLATED = 'bound_violated'

verdicts = (BOUNDED_CONSISTENT, SHARPNESS_WITNESSED, DIVERGENCE_WITNESSED,
            BOUND_VIOLATED)


class OperatorEval(buddy.Object):
    '''Value of an operator at one point.

    mode is "radial_exact" (std_error 0) or "mc".
    '''

    _save_attrs = {'value', 'std_error', 'mode'}

    def __init__(self, value, std_error=0.0, mode='radial_exact'):
        self.value = float(value)
        self.std_error = float(std_error)
        self.mode = mode
        assert self.std_error >= 0 or math.isnan(self.std_error)

    def __float__(self):
        return self.value

    def __add__(self, other):
        mode = self.mode if self.mode == other.mode else 'mc'
        return OperatorEval(self.value + other.value,
                            math.hypot(self.std_error, other.std_error), mode)

    def __repr__(self):
        return 'OperatorEval(%g +- %g, %s)' % (self.value, self.std_error,
                                               self.mode)


class NormResult(buddy.Object):
    '''A norm estimate together with its per radius table.

    ``table`` holds (r, value, err) rows. For Morrey and CMO norms the value
    is the maximum of the table; ``argmax_r`` is where it is attained. A
    divergent entry makes the value +inf, ``witness`` is then the radius
    where divergence was declared.
    '''

    _save_attrs = {'kind', 'value', 'error', 'argmax_r', 'table', 'witness',
                   'params'}

    def __init__(self, kind, value, error=0.0, argmax_r=None, table=None,
                 witness=None, params=None):
        self.kind = kind
        self.value = float(value)
        self.error = float(error)
        self.argmax_r = argmax_r
        self.table = list(table) if table is not None else list()
        self.witness = witness
        self.params = dict(params) if params is not None else dict()

    @property
    def finite(self):
        return math.isfinite(self.value)

    def __iter__(self):
        # Allows "value, argmax_r, table = morrey_norm(...)"
        return iter((self.value, self.argmax_r, self.table))

    def __repr__(self):
        return 'NormResult(%s = %g)' % (self.kind, self.value)


class TheoremConstant(buddy.Object):
    '''One of C1 ... C5, Sharp11, Log-i, Log-ii.

    ``pieces`` maps piece names (e.g. "norm>1", "norm<=1") to their values.
    A piece that diverged is +inf and the whole constant with it.
    '''

    _save_attrs = {'id', 'value', 'error', 'pieces', 'params', 'witness'}

    def __init__(self, id, pieces, params=None, error=0.0, witness=None):
        self.id = id
        self.pieces = dict(pieces)
        self.params = dict(params) if params is not None else dict()
        self.error = float(error)
        self.witness = witness
        self.value = float(sum(self.pieces.values())) if self.pieces else 0.0

    @property
    def finite(self):
        return math.isfinite(self.value)

    def __float__(self):
        return self.value

    def __repr__(self):
        return 'TheoremConstant(%s = %g)' % (self.id, self.value)


class VerificationReport(buddy.Object):
    '''Outcome of an upper bound or sharpness check.

    :ivar operator_ratio: estimated ||Tf|| / ||f|| (times ||b|| for
        commutators)
    :ivar lower_bound: the extremizer lower bound, sharpness checks only
    :ivar tables: name -> list of (r, value, err) rows
    '''

    _save_attrs = {'theorem', 'operator_ratio', 'ratio_error', 'bound',
                   'lower_bound', 'verdict', 'tolerances', 'tables',
                   'params', 'notes'}

    def __init__(self, theorem, operator_ratio, bound, verdict,
                 ratio_error=0.0, lower_bound=None, tolerances=None,
                 tables=None, params=None, notes=None):
        assert verdict in verdicts
        self.theorem = theorem
        self.operator_ratio = float(operator_ratio)
        self.ratio_error = float(ratio_error)
        self.bound = bound
        self.lower_bound = lower_bound
        self.verdict = verdict
        self.tolerances = dict(tolerances) if tolerances is not None else dict()
        self.tables = dict(tables) if tables is not None else dict()
        self.params = dict(params) if params is not None else dict()
        self.notes = list(notes) if notes is not None else list()

    @property
    def failed(self):
        return self.verdict == BOUND_VIOLATED

    def __repr__(self):
        return 'VerificationReport(%s: %s, ratio %g)' % (
            self.theorem, self.verdict, self.operator_ratio)


class ApProbeReport(buddy.Object):
    '''Family restricted A_p (or reverse Holder) probe.

    ``ratios`` lists one value per ball in family order.
    '''

    _save_attrs = {'p', 'max_ratio', 'witness', 'balls_tested', 'ratios'}

    def __init__(self, p, max_ratio, witness, balls_tested, ratios=None):
        self.p = float(p)
        self.max_ratio = float(max_ratio)
        self.witness = witness
        self.balls_tested = int(balls_tested)
        self.ratios = list(ratios) if ratios is not None else list()

    @property
    def finite(self):
        return math.isfinite(self.max_ratio)

    def __repr__(self):
        return 'ApProbeReport(p=%g, max %g over %i balls)' % (
            self.p, self.max_ratio, self.balls_tested)


class SuiteCheck(object):

    __slots__ = ('name', 'passed', 'value', 'expected', 'detail', 'seconds')

    def __init__(self, name, passed, value=None, expected=None, detail='',
                 seconds=0.0):
        self.name = name
        self.passed = bool(passed)
        self.value = value
        self.expected = expected
        self.detail = detail
        self.seconds = float(seconds)


class SuiteResult(buddy.Object):
    '''Result of the built in acceptance suite.'''

    _save_attrs = {'checks', 'passed'}

    def __init__(self, checks=None):
        self.checks = list(checks) if checks is not None else list()

    def add(self, check):
        self.checks.append(check)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]
