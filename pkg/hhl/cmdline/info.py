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

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


parser = script.add_subparser("info",
    help=_("Display the constants of H^n."),
    description=_("""Print the number of coordinates, the homogeneous
    dimension Q, the Haar measure Omega_Q of the Koranyi unit ball and the
    area omega_Q = Q Omega_Q of the unit sphere."""))

parser.add_argument('--n',
    type=int,
    default=defs.default_n,
    help=_("The group is H^n (default: %(default)s)."))


@script.connect(parser)
@script.logfile
def info(cmdline):
    dim = catalog.dim_from(cmdline)
    print('n        %i' % dim.n)
    print('coords   %i' % dim.coords)
    print('Q        %i' % dim.Q)
    print('Omega_Q  %.17g' % dim.Omega_Q)
    print('omega_Q  %.17g' % dim.omega_Q)
    return dim
