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

import pytest

from hhl import quad
from hhl import suite


CFG = quad.McConfig(samples=2 ** 14)


@pytest.mark.parametrize('check', [suite.check_group,
                                   suite.check_matrix_norm,
                                   suite.check_ball_mass,
                                   suite.check_cmo,
                                   suite.check_sharp_equality])
def test_check(check):
    passed, value, expected, detail = check(CFG)
    assert passed, detail


def test_check_names_are_unique():
    names = [name for name, func, slow in suite.checks]
    assert len(names) == len(set(names))


def test_failing_check_is_reported(monkeypatch):
    def broken(cfg):
        raise ArithmeticError('boom')

    monkeypatch.setattr(suite, 'checks', (('broken', broken, False),
                                          ('matrix-norm',
                                           suite.check_matrix_norm, False)))
    res = suite.run_suite(cfg=CFG)
    assert not res.passed
    assert [c.name for c in res.failures] == ['broken']
    assert 'ArithmeticError: boom' in res.failures[0].detail


@pytest.mark.slow
def test_quick_suite():
    res = suite.run_suite(quick=True, cfg=CFG)
    assert res.passed, [(c.name, c.detail) for c in res.failures]
    assert 'iff-flip' not in [c.name for c in res.checks]


@pytest.mark.slow
def test_full_suite():
    res = suite.run_suite(cfg=CFG)
    assert res.passed, [(c.name, c.detail) for c in res.failures]
