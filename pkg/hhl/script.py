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

'''
This module defines the argument parser and some decorators, helping to
implement hhl commands. To make a function callable from the command line,
prepare a parser with :py:func:`add_subparser` and use @connect(parser).
'''

import sys
import os
import functools
import argparse

from . import __version__
from . import defs
from . import log
from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext

# Create parser

if "sphinx" in sys.argv[0]:
    prog = "hhl"
else:
    prog = None

description = _("hhl -- Hausdorff operators on the Heisenberg group, "
                "weighted Morrey norms and sharp constants.")
epilog = _("The default worker count is read from the %s environment "
           "variable.") % defs.threads_env
parser = argparse.ArgumentParser(description=description, epilog=epilog, prog=prog)

parser.add_argument('--version',
    help=_('Display version and exit'),
    action='version',
    version="%%(prog)s %s" % __version__)

# Set required as an attribute rather than kwarg so that it works with python <3.7
subparsers = parser.add_subparsers(help=_("command list|Commands:"), dest='command')
subparsers.required = True


def add_subparser(*args, **kwargs):
    parser = subparsers.add_parser(*args, **kwargs)

    parser.add_argument('--logfile',
        help=_("Append the console output of this run to the given file."))

    return parser


def doc(docstring):
    '''decorator to add a docstring to a function.

    When using normal Python docstring syntax it cannot be generated
    dynamically. Using this one can for example add translations.

    >>> @doc(_(u'docstring'))
    >>> def function(*args, **kwargs):
    >>>    pass
    '''

    def decorator(function):
        function.__doc__ = docstring
        return function
    return decorator


def connect(parser, name=None):
    '''decorator to connect an already prepared parser to call into a function.

    This function initilizes the _func and _name properties for the parser to
    the given function, and its name. It also sets the functions docstring to
    be the parsers help. This way the help string appears in the sphinx
    documentation for the function.

    >>> @script.connect(parser)
    >>> def constant(cmdline):
    >>>     pass
    '''

    def decorator(function):
        # Use the function name as a fallback, it should be the same usually.
        if name is None:
            local_name = function.__name__
        else:
            local_name = name

        parser.set_defaults(_func=function, _name=local_name)

        function.__doc__ = parser.format_help()

        return function

    return decorator


def logfile(function):
    '''open the logfile given by --logfile while the function runs.

    >>> @logfile
    >>> def function(cmdline):
    >>>     pass
    '''
    def decorated_function(cmdline):
        filename = cmdline.get('logfile')
        if not filename:
            return function(cmdline)

        log.logfile.open(os.path.abspath(filename))
        try:
            return function(cmdline)
        finally:
            log.logfile.close()

    functools.update_wrapper(decorated_function, function)

    return decorated_function


def add_params_arguments(parser):
    '''Dimension and exponents, mirroring NormParams.'''
    parser.add_argument('--n', type=int, default=defs.default_n,
        help=_("The group is H^n (default: %(default)s)."))
    parser.add_argument('--alpha', type=float, default=0.0,
        help=_("Exponent of the power weight |x|^alpha (default: 0)."))
    parser.add_argument('--weight', default='power',
        help=_("Weight kind: power or max-one (default: power)."))
    parser.add_argument('--p', type=float, default=2.0,
        help=_("Target exponent p (default: 2)."))
    parser.add_argument('--p1', type=float,
        help=_("Source exponent p1."))
    parser.add_argument('--p2', type=float,
        help=_("CMO exponent p2."))
    parser.add_argument('--q', type=float,
        help=_("Exponent of the A_q condition."))
    parser.add_argument('--delta', type=float,
        help=_("Reverse Hoelder order, 1 < delta < r_w (default: the "
               "midpoint, or 2 if r_w is infinite)."))
    parser.add_argument('--lambda', dest='lam', type=float, default=-0.25,
        help=_("Morrey index, -1/p <= lambda < 0 (default: -0.25)."))


def add_operator_arguments(parser):
    '''Generating function, matrix field and the fields f and b.'''
    parser.add_argument('--phi', default='ball-indicator',
        help=_("Generating function: ball-indicator, annulus-indicator, "
               "power-ball, log-damped-ball, gaussian or zero."))
    parser.add_argument('--phi-a', type=float, default=0.5,
        help=_("Inner radius of annulus-indicator (default: 0.5)."))
    parser.add_argument('--phi-b', type=float, default=1.0,
        help=_("Outer radius of the support (default: 1)."))
    parser.add_argument('--beta', type=float, default=0.0,
        help=_("Exponent of power-ball and log-damped-ball (default: 0)."))
    parser.add_argument('--A', dest='A', default='dilation',
        help=_("Matrix field: dilation or diagonal-scaled."))
    parser.add_argument('--A-scale', dest='A_scale',
        help=_("Diagonal of D for diagonal-scaled, comma separated."))
    add_field_arguments(parser)


def add_field_arguments(parser):
    '''The scalar fields f and b.'''
    parser.add_argument('--f', default='extremizer',
        help=_("Field f: extremizer, power, log-norm, log-inverse, one, "
               "ball-indicator or zero (default: extremizer)."))
    parser.add_argument('--s', type=float,
        help=_("Exponent of the power field."))
    parser.add_argument('--b', default='log-norm',
        help=_("Symbol b of commutators, same catalog as --f (default: "
               "log-norm)."))
    parser.add_argument('--radius', type=float, default=1.0,
        help=_("Radius of the ball-indicator field (default: 1)."))


def add_mc_arguments(parser):
    parser.add_argument('--seed', type=int, default=defs.mc_seed,
        help=_("Monte Carlo seed (default: %(default)s)."))
    parser.add_argument('--samples', type=int, default=defs.mc_samples,
        help=_("Monte Carlo samples (default: %(default)s)."))
    parser.add_argument('--threads', type=int,
        help=_("Worker threads; results do not depend on it (default: "
               "$%s or 1).") % defs.threads_env)
    parser.add_argument('--k-min', type=int, default=defs.radius_k_min,
        help=_("Smallest radius 2^k_min of the grid (default: %(default)s)."))
    parser.add_argument('--k-max', type=int, default=defs.radius_k_max,
        help=_("Largest radius 2^k_max of the grid (default: %(default)s)."))


def add_output_arguments(parser, formats=('json',)):
    parser.add_argument('-o', '--output',
        help=_("Write the report to this file (default: stdout)."))
    parser.add_argument('--format', choices=formats, default='json',
        help=_("Report format (default: json)."))


def add_computation_subparser(*args, **kwargs):
    formats = kwargs.pop('formats', ('json',))
    parser = add_subparser(*args, **kwargs)
    add_params_arguments(parser)
    add_mc_arguments(parser)
    add_output_arguments(parser, formats)
    return parser
