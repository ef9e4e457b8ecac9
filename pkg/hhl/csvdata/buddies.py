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

import csv

from hhl import defs
from hhl import model
from hhl.utils.exceptions import ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


class Table(object):

    def rows(self, table=None):
        raise NotImplementedError

    def write(self, csvfile, table=None, delimiter=','):
        writer = csv.writer(csvfile, delimiter=delimiter, lineterminator='\n')
        writer.writerow(defs.csv_header)
        for r, value, err in self.rows(table):
            writer.writerow([repr(float(r)), repr(float(value)),
                             repr(float(err))])
        csvfile.flush()


class NormResult(Table, model.buddy.Buddy, metaclass=model.buddy.Register):

    name = 'csvdata'
    obj_class = model.results.NormResult

    def rows(self, table=None):
        return list(self.obj.table)


class VerificationReport(Table, model.buddy.Buddy,
                         metaclass=model.buddy.Register):

    name = 'csvdata'
    obj_class = model.results.VerificationReport

    def rows(self, table=None):
        tables = self.obj.tables
        if table is None:
            table = 'truncation' if 'truncation' in tables else 'image'
        if table not in tables:
            raise ParameterError(_('the report has no table "%(table)s" '
                                   '(available: %(names)s)') %
                                 {'table': table,
                                  'names': ', '.join(sorted(tables))})
        return list(tables[table])
