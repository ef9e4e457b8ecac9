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
from hhl import weights
from hhl.cmdline import emit

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


parser = script.add_subparser("probe",
    help=_("Probe the A_p or reverse Hoelder condition of a weight."),
    description=_("""Compute the A_p ratio (or the reverse Hoelder ratio of
    order --exponent) of the weight on every ball of a fixed family of
    centred and off centre balls and report the largest one. An infinite
    ratio means the weight fails the condition on the witness ball."""))
script.add_params_arguments(parser)
script.add_mc_arguments(parser)
script.add_output_arguments(parser)

parser.add_argument('--condition',
    choices=('ap', 'reverse-holder'),
    default='ap',
    help=_("The condition (default: ap)."))
parser.add_argument('--exponent',
    type=float,
    default=2.0,
    help=_("p of A_p or r of RH_r (default: 2)."))


@script.connect(parser)
@script.logfile
def probe(cmdline):
    dim = catalog.dim_from(cmdline)
    w = catalog.weight_from(cmdline, dim)
    cfg = catalog.mc_from(cmdline)
    if cmdline['condition'] == 'ap':
        result = weights.ap_probe(w, cmdline['exponent'], cfg=cfg)
    else:
        result = weights.reverse_holder_probe(w, cmdline['exponent'], cfg=cfg,
                                              report=True)
    emit('probe', cmdline, result)
    return result
