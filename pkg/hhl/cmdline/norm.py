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
from hhl import norms
from hhl import script
from hhl.cmdline import emit, require
from hhl.model import heisenberg
from hhl.model.results import NormResult

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


parser = script.add_computation_subparser("norm",
    formats=('json', 'csv'),
    help=_("Compute a weighted Morrey, CMO or L^p norm."),
    description=_("""Compute the weighted central Morrey norm of --f, the
    weighted central CMO norm of --b (with exponent --p2) or the L^p norm
    of --f on a single ball. The suprema over r > 0 are maxima over the
    dyadic radius grid 2^k_min ... 2^k_max; the table of all radii is part
    of the report."""))
script.add_field_arguments(parser)

parser.add_argument('--kind',
    choices=('morrey', 'cmo', 'lp'),
    default='morrey',
    help=_("The norm (default: morrey)."))
parser.add_argument('--center',
    help=_("Centre of the ball for --kind lp, comma separated (default: "
           "the origin)."))
parser.add_argument('--ball-radius', dest='ball_radius',
    type=float,
    default=1.0,
    help=_("Radius of the ball for --kind lp (default: 1)."))


def lp_result(f, p, w, B, cfg):
    value, err = norms.lp_ball_norm(f, p, w, B, cfg)
    params = dict(p=p, weight=w.label, f=f.label, center=list(B.center),
                  radius=B.radius)
    return NormResult('lp', value, err, B.radius, [(B.radius, value, err)],
                      None, params)


@script.connect(parser)
@script.logfile
def norm(cmdline):
    dim = catalog.dim_from(cmdline)
    w = catalog.weight_from(cmdline, dim)
    grid = catalog.grid_from(cmdline)
    cfg = catalog.mc_from(cmdline)
    kind = cmdline['kind']

    if kind == 'cmo':
        require(cmdline, 'p2')
        prm = catalog.params_from(cmdline).validate(dim)
        b = catalog.field_from(cmdline, dim, 'b')
        result = norms.cmo_norm(b, prm.p2, w, grid, cfg)
    elif kind == 'lp':
        f = catalog.field_from(cmdline, dim, 'f')
        if cmdline['center'] is None:
            center = (0.0,) * dim.coords
        else:
            center = catalog.make_point(cmdline['center'], dim)
        B = heisenberg.BallSpec(tuple(center), cmdline['ball_radius'])
        result = lp_result(f, cmdline['p'], w, B, cfg)
    else:
        prm = catalog.params_from(cmdline)
        f = catalog.field_from(cmdline, dim, 'f')
        result = norms.morrey_norm(f, prm, w, grid, cfg)

    emit('norm', cmdline, result)
    return result
