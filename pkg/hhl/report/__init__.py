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
JSON reports.

A report document is

    {"schema": 1, "command": ..., "config": {...}, "timestamp": ...,
     "result": {...}}

where "result" is the state of a result object, produced by its "report"
buddy. Documents are written atomically, or to stdout.
"""

import datetime
import json
import os
import sys

from hhl import defs
from hhl.model import db

from . import buddies

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


def resolved_config(cmdline):
    '''The command line dictionary without private entries.'''
    return {key: value for key, value in cmdline.items()
            if not key.startswith('_')}


def document(command, cmdline, result):
    return {
        'schema': defs.report_schema,
        'command': command,
        'config': db.jsonClean(resolved_config(cmdline)),
        'timestamp': datetime.datetime.now(datetime.timezone.utc).isoformat(),
        'result': result.report.state(),
    }


def dumps(doc):
    return json.dumps(db.jsonClean(doc), default=db.toJson, sort_keys=True,
                      indent=2)


def payload(doc):
    '''The document without its timestamp, for determinism checks.'''
    doc = dict(doc)
    doc.pop('timestamp', None)
    return dumps(doc)


def write_atomic(filename, text):
    '''Write text to filename through a temporary file in the same
    directory.'''
    directory, name = os.path.split(os.path.abspath(filename))
    tmp = os.path.join(directory, '.%s.tmp' % name)
    with open(tmp, 'w', encoding='utf-8') as f:
        f.write(text)
        f.flush()
        os.fsync(f.fileno())
    os.replace(tmp, filename)


def write(doc, filename=None):
    text = dumps(doc) + '\n'
    if filename is None or filename == '-':
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        write_atomic(filename, text)
