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
JSON conversion of model objects.

:py:func:`toJson` is meant as the ``default`` hook of :py:func:`json.dumps`.
Objects are converted through ``__slots__``, ``_save_attrs`` or their
``__dict__`` (private and ``_save_skip`` attributes dropped), and may adjust
the result in ``__to_json_state__``. Non finite floats are written as
strings, since JSON has no representation for them.
"""

import math
import enum

import numpy as np


def jsonFloat(value):
    value = float(value)
    if math.isnan(value):
        return 'nan'
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return value


def jsonClean(value):
    '''Recursively replace non finite floats and numpy containers.'''
    if isinstance(value, dict):
        return {str(k): jsonClean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonClean(v) for v in value]
    if isinstance(value, np.ndarray):
        return jsonClean(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return jsonFloat(value)
    if isinstance(value, enum.Enum):
        return value.value
    return value


def toJson(obj):
    if isinstance(obj, np.ndarray):
        return jsonClean(obj)
    if isinstance(obj, (np.integer, np.floating, np.bool_)):
        return jsonClean(obj)

    if hasattr(obj, '__slots__'):
        res = dict()
        for slot in getattr(obj, '__slots__'):
            res[slot] = getattr(obj, slot)

    else:
        if hasattr(obj, '_save_attrs'):
            attrs = getattr(obj, '_save_attrs')
            res = dict()
            for attr in attrs:
                res[attr] = getattr(obj, attr)
        else:
            if hasattr(obj, '_save_skip'):
                skip = getattr(obj, '_save_skip')
            else:
                skip = set()

            res = obj.__dict__.copy()
            keys = list(res.keys())
            for key in keys:
               if key.startswith('_') or key in skip:
                   del res[key]

    if hasattr(obj, '__to_json_state__'):
        obj.__to_json_state__(res)

    res = jsonClean(res)
    res['_class'] = obj.__class__.__name__
    return res
