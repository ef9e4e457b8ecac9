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
from hhl import defs
from hhl import script
from hhl import sharpness
from hhl import VerdictFailure
from hhl.cmdline import emit

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


parser = script.add_computation_subparser("verify",
    formats=('json', 'csv'),
    help=_("Check a boundedness or sharpness statement numerically."),
    description=_("""Estimate the ratio of the Morrey norms of T f and f
    (times the CMO norm of b for commutators) over the radius grid and
    compare it with the constant of the selected statement. Upper bounds
    are accepted up to the factor --kappa. Sharp statements are checked on
    the power extremizer: equality for dilations, or unbounded growth of
    the truncated operators when the deciding integral diverges. A
    violated bound exits with status 1 after the report is written."""),
    epilog=_("CSV output writes the truncation table if there is one, "
             "else the table of the image norm."))
script.add_operator_arguments(parser)

parser.add_argument('--theorem',
    required=True,
    choices=list(sharpness.selectors) + list(sharpness.aliases),
    help=_("The statement to check, by short name or alias."))
parser.add_argument('--kappa',
    type=float,
    default=defs.kappa,
    help=_("Slack factor of the upper bounds (default: %(default)s)."))


@script.connect(parser)
@script.logfile
def verify(cmdline):
    selector = sharpness.check_selector(cmdline['theorem'])
    dim = catalog.dim_from(cmdline)
    prm = catalog.params_from(cmdline)
    Phi = catalog.phi_from(cmdline)
    A = catalog.matrix_field_from(cmdline, dim)
    grid = catalog.grid_from(cmdline)
    cfg = catalog.mc_from(cmdline)

    if selector in sharpness.sharp_selectors:
        result = sharpness.verify_sharpness(selector, Phi, A, prm.alpha, prm,
                                            grid, cfg)
    else:
        w = catalog.weight_from(cmdline, dim)
        f = None
        if cmdline['f'] != 'extremizer':
            f = catalog.field_from(cmdline, dim, 'f')
        b = None
        if selector in sharpness.commutator_selectors:
            b = catalog.field_from(cmdline, dim, 'b')
        result = sharpness.verify_upper_bound(selector, Phi, A, w, prm, f, b,
                                              grid, cfg, cmdline['kappa'])

    emit('verify', cmdline, result)
    if result.failed:
        raise VerdictFailure(result.report.summary())
    return result
