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

import json

from hhl import model
from hhl.model import db

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


class State(object):

    def state(self):
        '''Plain JSON data of the result object.'''
        return json.loads(json.dumps(self.obj, default=db.toJson))


class NormResult(State, model.buddy.Buddy, metaclass=model.buddy.Register):

    name = 'report'
    obj_class = model.results.NormResult

    def summary(self):
        if not self.obj.finite:
            return _('%(kind)s norm: divergent (witness r = %(r)s)') % {
                'kind': self.obj.kind, 'r': self.obj.witness}
        return _('%(kind)s norm = %(value).10g +- %(err).2g, maximal at '
                 'r = %(r)g over %(count)i radii') % {
                     'kind': self.obj.kind, 'value': self.obj.value,
                     'err': self.obj.error, 'r': self.obj.argmax_r,
                     'count': len(self.obj.table)}


class TheoremConstant(State, model.buddy.Buddy, metaclass=model.buddy.Register):

    name = 'report'
    obj_class = model.results.TheoremConstant

    def summary(self):
        pieces = ', '.join('%s: %.10g' % (name, value)
                           for name, value in sorted(self.obj.pieces.items()))
        return '%s = %.10g (%s)' % (self.obj.id, self.obj.value, pieces)


class VerificationReport(State, model.buddy.Buddy,
                         metaclass=model.buddy.Register):

    name = 'report'
    obj_class = model.results.VerificationReport

    def summary(self):
        bound = self.obj.bound
        text = _('%(theorem)s: %(verdict)s, ratio %(ratio).10g, %(id)s = '
                 '%(bound).10g') % {
                     'theorem': self.obj.theorem, 'verdict': self.obj.verdict,
                     'ratio': self.obj.operator_ratio, 'id': bound.id,
                     'bound': bound.value}
        if self.obj.lower_bound is not None:
            text += _(', lower bound %.10g') % self.obj.lower_bound
        return text


class OperatorEval(State, model.buddy.Buddy, metaclass=model.buddy.Register):

    name = 'report'
    obj_class = model.results.OperatorEval

    def summary(self):
        return '%.12g +- %.2g (%s)' % (self.obj.value, self.obj.std_error,
                                       self.obj.mode)


class ApProbeReport(State, model.buddy.Buddy, metaclass=model.buddy.Register):

    name = 'report'
    obj_class = model.results.ApProbeReport

    def summary(self):
        return _('largest ratio %(max)g over %(count)i balls') % {
            'max': self.obj.max_ratio, 'count': self.obj.balls_tested}


class SuiteResult(State, model.buddy.Buddy, metaclass=model.buddy.Register):

    name = 'report'
    obj_class = model.results.SuiteResult

    def summary(self):
        lines = list()
        for check in self.obj.checks:
            mark = _('ok') if check.passed else _('FAILED')
            lines.append('%-28s %-6s %s' % (check.name, mark, check.detail))
        failed = len(self.obj.failures)
        lines.append(ungettext('%i check failed', '%i checks failed', failed)
                     % failed if failed else _('all checks passed'))
        return '\n'.join(lines)
