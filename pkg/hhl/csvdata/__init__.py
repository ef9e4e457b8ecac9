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
CSV export of per radius tables. Every table has the header r,value,err.
"""

import csv

from . import buddies


def write_table(result, csvfile, table=None, delimiter=','):
    '''Write the rows of a NormResult or VerificationReport to an open
    file.'''
    result.csvdata.write(csvfile, table, delimiter)


def read_table(csvfile):
    '''Read back (r, value, err) rows; non finite values come back as
    floats.'''
    reader = csv.DictReader(csvfile)
    return [(float(row['r']), float(row['value']), float(row['err']))
            for row in reader]
