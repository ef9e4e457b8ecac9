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
Thread pool helpers. Results always come back in input order so that every
reduction done by the callers happens in a fixed order, whatever the number
of workers.
"""

import os
from concurrent.futures import ThreadPoolExecutor

from hhl import defs
from hhl.utils.exceptions import ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


def default_threads():
    value = os.environ.get(defs.threads_env)
    if value is None or value == '':
        return 1
    try:
        threads = int(value)
    except ValueError:
        threads = 0
    if threads < 1:
        raise ParameterError(
            _('%(env)s must be a positive integer, got "%(value)s"') %
            {'env': defs.threads_env, 'value': value})
    return threads


def resolve_threads(threads=None):
    if threads is None:
        return default_threads()
    if threads < 1:
        raise ParameterError(_('requires threads >= 1'))
    return int(threads)


def ordered_map(func, items, threads=None):
    items = list(items)
    threads = resolve_threads(threads)
    if threads == 1 or len(items) < 2:
        return [func(item) for item in items]

    with ThreadPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(func, items))
