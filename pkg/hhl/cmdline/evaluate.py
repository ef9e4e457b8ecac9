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

from hhl import catalog
from hhl import hausdorff
from hhl import log
from hhl import script
from hhl.cmdline import emit, require
from hhl.model.results import OperatorEval
from hhl.utils.exceptions import DivergenceError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


operators = ('hausdorff', 'commutator', 'piece1', 'piece2')


parser = script.add_subparser("eval",
    help=_("Apply an operator to a field at one point."),
    description=_("""Evaluate H f, the commutator H^b f or one of its two
    pieces at the point --x. Radial data (dilation A, radial Phi, f and b)
    is integrated exactly on the radius; everything else goes through
    stratified Monte Carlo and carries a standard error."""))
script.add_params_arguments(parser)
script.add_operator_arguments(parser)
script.add_mc_arguments(parser)
script.add_output_arguments(parser)

parser.add_argument('--op',
    choices=operators,
    default='hausdorff',
    help=_("The operator (default: hausdorff)."))
parser.add_argument('--x',
    help=_("The point, 2n+1 comma separated coordinates."))


@script.connect(parser, 'eval')
@script.logfile
def evaluate(cmdline):
    require(cmdline, 'x')
    dim = catalog.dim_from(cmdline)
    Phi = catalog.phi_from(cmdline)
    A = catalog.matrix_field_from(cmdline, dim)
    f = catalog.field_from(cmdline, dim, 'f')
    x = catalog.make_point(cmdline['x'], dim)
    cfg = catalog.mc_from(cmdline)
    op = cmdline['op']

    try:
        if op == 'hausdorff':
            result = hausdorff.eval_hausdorff(Phi, A, f, x, cfg)
        else:
            b = catalog.field_from(cmdline, dim, 'b')
            if op == 'commutator':
                result = hausdorff.eval_commutator(Phi, A, b, f, x, cfg)
            else:
                result = hausdorff.eval_commutator_piece(int(op[-1]), Phi, A,
                                                         b, f, x, cfg)
    except DivergenceError as err:
        log.warn(_('the y integral diverges (witness %(w)s): %(msg)s') %
                 {'w': err.witness, 'msg': err})
        result = OperatorEval(math.inf, 0.0)

    emit('eval', cmdline, result)
    return result
