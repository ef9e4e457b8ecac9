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

from hhl import catalog
from hhl import script
from hhl import VerdictFailure
from hhl.cmdline import emit

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


parser = script.add_subparser("report",
    help=_("Run the built in acceptance suite."),
    description=_("""Run the acceptance checks (volumes, group law, matrix
    norms, extremizer norms, CMO norm, equality and divergence of the sharp
    statements, the commutator split, upper bounds and A_p probes) and
    write one report. Exits with status 1 if a check failed."""))
script.add_mc_arguments(parser)
script.add_output_arguments(parser)

parser.add_argument('--quick',
    action='store_true',
    help=_("Skip the slow checks."))


@script.connect(parser, 'report')
@script.logfile
def report(cmdline):
    from hhl import suite

    result = suite.run_suite(cmdline['quick'], catalog.mc_from(cmdline))
    emit('report', cmdline, result)
    if not result.passed:
        raise VerdictFailure(ungettext('%i check failed',
                                       '%i checks failed',
                                       len(result.failures)) %
                             len(result.failures))
    return result
