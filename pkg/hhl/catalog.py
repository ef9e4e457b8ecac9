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
String selectors for the objects the command line can build.

Generating functions, matrix fields, scalar fields and weights are chosen by
name; the few numeric options they take come from the same command line.
"""

from hhl import hausdorff
from hhl import weights
from hhl.model import fields
from hhl.utils.exceptions import CatalogError, ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


phi_ids = ('ball-indicator', 'annulus-indicator', 'power-ball',
           'log-damped-ball', 'gaussian', 'zero')
matrix_ids = ('dilation', 'diagonal-scaled')
field_ids = ('extremizer', 'power', 'log-norm', 'log-inverse', 'one',
             'ball-indicator', 'zero')
weight_ids = weights.kinds


def _unknown(kind, name, choices):
    return CatalogError(_('unknown %(kind)s "%(name)s", choose one of '
                          '%(choices)s') %
                        {'kind': kind, 'name': name,
                         'choices': ', '.join(choices)})


def make_phi(name, a=0.5, b=1.0, beta=0.0):
    if name == 'ball-indicator':
        return hausdorff.ball_indicator(b)
    if name == 'annulus-indicator':
        return hausdorff.annulus_indicator(a, b)
    if name == 'power-ball':
        return hausdorff.power_ball(beta, b)
    if name == 'log-damped-ball':
        return hausdorff.log_damped_ball(beta)
    if name == 'gaussian':
        return hausdorff.gaussian()
    if name == 'zero':
        return hausdorff.zero()
    raise _unknown(_('generating function'), name, phi_ids)


def parse_floats(text):
    '''"1,2,0.5" -> (1.0, 2.0, 0.5)'''
    if text is None:
        return None
    try:
        return tuple(float(v) for v in str(text).split(','))
    except ValueError:
        raise ParameterError(_('expected comma separated numbers, got "%s"')
                             % text)


def make_matrix_field(name, dim, scale=None):
    if name == 'dilation':
        return hausdorff.MatrixField.dilation(dim)
    if name == 'diagonal-scaled':
        if scale is None:
            raise ParameterError(_('diagonal-scaled needs --A-scale with %i '
                                   'entries') % dim.coords)
        return hausdorff.MatrixField.diagonal_scaled(dim, scale)
    raise _unknown(_('matrix field'), name, matrix_ids)


def make_field(name, dim, alpha=0.0, lam=-0.25, s=None, radius=1.0):
    '''Scalar fields; "extremizer" is |x|_h^((Q + alpha) lambda).'''
    if name == 'extremizer':
        return fields.PowerField((dim.Q + alpha) * lam)
    if name == 'power':
        if s is None:
            raise ParameterError(_('the power field needs --s'))
        return fields.PowerField(s)
    if name == 'log-norm':
        return fields.LogField(1.0)
    if name == 'log-inverse':
        return fields.LogField(-1.0)
    if name == 'one':
        return fields.ConstantField(1.0)
    if name == 'ball-indicator':
        return fields.BallIndicator(radius)
    if name == 'zero':
        return fields.zero_field()
    raise _unknown(_('field'), name, field_ids)


def make_weight(name, alpha, dim):
    if name not in weight_ids:
        raise _unknown(_('weight'), name, weight_ids)
    return weights.WeightSpec(name, alpha, dim).validate()


def make_point(text, dim):
    x = parse_floats(text)
    return dim.check(x)


# Building from a parsed command line ====================================


def dim_from(cmdline):
    from hhl.model import heisenberg

    return heisenberg.HeisDim(cmdline['n'])


def params_from(cmdline):
    from hhl import norms

    return norms.NormParams(p=cmdline['p'], lam=cmdline['lam'],
                            alpha=cmdline['alpha'], p1=cmdline.get('p1'),
                            p2=cmdline.get('p2'), q=cmdline.get('q'),
                            delta=cmdline.get('delta'))


def mc_from(cmdline):
    from hhl import quad
    from hhl.utils import parallel

    return quad.McConfig(seed=cmdline['seed'], samples=cmdline['samples'],
                         threads=parallel.resolve_threads(cmdline['threads']))


def grid_from(cmdline):
    from hhl import norms

    return norms.RadiusGrid.dyadic(cmdline['k_min'], cmdline['k_max'])


def weight_from(cmdline, dim):
    return make_weight(cmdline['weight'], cmdline['alpha'], dim)


def phi_from(cmdline):
    return make_phi(cmdline['phi'], cmdline['phi_a'], cmdline['phi_b'],
                    cmdline['beta'])


def matrix_field_from(cmdline, dim):
    return make_matrix_field(cmdline['A'], dim,
                             parse_floats(cmdline.get('A_scale')))


def field_from(cmdline, dim, key='f'):
    return make_field(cmdline[key], dim, cmdline['alpha'], cmdline['lam'],
                      cmdline.get('s'), cmdline.get('radius', 1.0))
