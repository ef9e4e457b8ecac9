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
from hhl import sharpness
from hhl.cmdline import emit
from hhl.utils.exceptions import ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


# constant id -> statement whose hypotheses it assumes
statements = {
    'C1': '1.1',
    'C2': '1.2',
    'C3': '1.3',
    'C4': '1.4',
    'C5': '1.4',
    'Sharp11': '1.5',
    'Log-i': '1.6i',
    'Log-ii': '1.6ii',
}

id_aliases = {
    'sharp': 'Sharp11',
    'log-inner': 'Log-i',
    'log-outer': 'Log-ii',
}


parser = script.add_computation_subparser("constant",
    help=_("Compute one of the operator constants."),
    description=_("""Compute C1 ... C5, the sharp integral or one of the two
    log integrals for the given Phi and A. The exponent relations of the
    statement the constant belongs to are checked first. A divergent
    integral is reported as inf together with the radius where divergence
    was declared."""))
script.add_operator_arguments(parser)

parser.add_argument('--id',
    required=True,
    choices=list(statements) + list(id_aliases),
    help=_("The constant to compute."))


@script.connect(parser)
@script.logfile
def constant(cmdline):
    id = id_aliases.get(cmdline['id'], cmdline['id'])
    selector = statements[id]
    dim = catalog.dim_from(cmdline)
    Phi = catalog.phi_from(cmdline)
    A = catalog.matrix_field_from(cmdline, dim)
    w = None
    if selector in sharpness.upper_bound_selectors:
        w = catalog.weight_from(cmdline, dim)
    prm = sharpness.check_hypotheses(selector, catalog.params_from(cmdline),
                                     w, A, Phi)

    if selector == '1.4':
        expected = 'C5' if prm.alpha > 0 else 'C4'
        if id != expected:
            raise ParameterError(_('%(id)s belongs to alpha %(sign)s 0, use '
                                   '--id %(expected)s') %
                                 {'id': id, 'expected': expected,
                                  'sign': '>' if id == 'C5' else '<='})

    result = sharpness.constant_for(selector, Phi, A, prm,
                                    catalog.mc_from(cmdline))
    emit('constant', cmdline, result)
    return result
