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
The hhl commands. Every module registers one subcommand on
:py:data:`hhl.script.subparsers`; :py:func:`emit` writes the result the way
the user asked for.
"""

import io

from hhl import log
from hhl import report
from hhl import script
from hhl.utils.exceptions import ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


def emit(command, cmdline, result, table=None):
    '''Write result as a JSON document or, with --format csv, as the table
    of (r, value, err) rows.'''
    log.interactive(result.report.summary() + '\n')
    filename = cmdline.get('output')
    if cmdline.get('format', 'json') == 'csv':
        from hhl import csvdata

        buf = io.StringIO()
        csvdata.write_table(result, buf, table)
        if filename is None or filename == '-':
            print(buf.getvalue(), end='')
        else:
            report.write_atomic(filename, buf.getvalue())
        return
    report.write(report.document(command, cmdline, result), filename)


def require(cmdline, *names):
    for name in names:
        if cmdline.get(name) is None:
            raise ParameterError(_('the %(cmd)s command needs --%(opt)s') %
                                 {'cmd': cmdline['_name'],
                                  'opt': name.replace('_', '-')})


from . import constant
from . import evaluate
from . import info
from . import norm
from . import probe
from . import suite
from . import verify
