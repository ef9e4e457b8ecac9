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

import numpy as np
import pandas

from hhl import csvdata
from hhl import defs
from hhl import model


class Table(object):

    def get_dataframe(self, table=None):
        rows = self.obj.csvdata.rows(table)
        data = np.array(rows, dtype=float).reshape(-1, len(defs.csv_header))
        return pandas.DataFrame(data, columns=list(defs.csv_header))


class NormResult(Table, model.buddy.Buddy, metaclass=model.buddy.Register):

    name = 'pandas'
    obj_class = model.results.NormResult


class VerificationReport(Table, model.buddy.Buddy,
                         metaclass=model.buddy.Register):

    name = 'pandas'
    obj_class = model.results.VerificationReport
