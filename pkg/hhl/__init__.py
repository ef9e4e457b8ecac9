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
hhl is built in layers. The "model" package holds the geometry of the
Heisenberg group (group law, dilations, Koranyi norm), the catalog of scalar
fields and the result objects. On top of it sit

 * "quad": radial quadrature and stratified Monte Carlo over Koranyi balls,
 * "weights": power and catalog weights, A_p and reverse Hoelder probes,
 * "hausdorff": Hausdorff operators, their commutators and the two pieces,
 * "norms": weighted central Morrey, CMO and L^p norms on radius grids,
 * "sharpness": the operator constants and the verification protocols.

Result objects get their output formats ("report", "csvdata", "pandas")
through buddies, see the documentation of :py:mod:`hhl.model.buddy`.
"""

__version__ = '0.3.0'

import sys
import os

from . import paths

from .utils.ugettext import ugettext, ungettext
_ = ugettext


class VerdictFailure(Exception):
    '''Raised by commands whose numerical verdict failed (exit status 1).'''
    pass


def init(local_run=False):
    paths.init(local_run, __path__[0])


def main(local_run=False, argv=None):
    """The main hhl interface routine. It initilizes all modules, parses
    the command line and passes control over to the selected function."""
    init(local_run)

    from . import log
    from . import script
    from .utils.exceptions import ParameterError, DimensionError

    log.activate_redirects()

    from . import cmdline

    cmdline = script.parser.parse_args(argv)
    cmdline = vars(cmdline)

    log.interactive('-'*78 + '\n')
    log.interactive(('- hhl -- %s' % cmdline['_name']) + '\n')
    log.interactive('-'*78 + '\n')

    try:
        cmdline['_func'](cmdline)
    except (ParameterError, DimensionError) as err:
        log.error(str(err))
        return 2
    except VerdictFailure as err:
        log.error(str(err))
        return 1
    except:
        import traceback
        string = traceback.format_exc()
        sys.stderr.write(string)
        return 1
    return 0


# Guess whether documentation is generated, if it is
# setup for local run.
if 'sphinx' in sys.argv[0]:
    paths.init(True, os.path.join(sys.path[0], 'hhl'))
