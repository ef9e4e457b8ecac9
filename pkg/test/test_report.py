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

import io
import json
import math

import pytest

from hhl import csvdata
from hhl import report
from hhl.model import db
from hhl.model import results
from hhl.utils.exceptions import ParameterError


TABLE = [(0.5, 2.0, 0.0), (1.0, 3.0, 0.1), (2.0, math.inf, 0.0)]


@pytest.fixture
def norm_result():
    return results.NormResult('morrey', math.inf, table=TABLE, witness=2.0,
                              params={'p': 2.0})


@pytest.fixture
def constant():
    return results.TheoremConstant('C3', {'norm>1': 1.5, 'norm<=1': 0.5},
                                   dict(alpha=0.0, p=2.0, lam=-0.25))


def test_json_clean():
    assert db.jsonClean({'a': math.inf, 'b': [1, -math.inf]}) == \
        {'a': 'inf', 'b': [1, '-inf']}
    assert db.jsonClean(math.nan) == 'nan'


def test_document(constant):
    cmdline = {'id': 'C3', 'p': 2.0, '_func': print, '_name': 'constant'}
    doc = report.document('constant', cmdline, constant)
    assert doc['schema'] == 1
    assert doc['command'] == 'constant'
    assert doc['config'] == {'id': 'C3', 'p': 2.0}
    assert 'timestamp' in doc
    assert doc['result']['id'] == 'C3'
    assert doc['result']['value'] == 2.0
    assert doc['result']['_class'] == 'TheoremConstant'


def test_payload_is_deterministic(constant):
    cmdline = {'id': 'C3'}
    one = report.document('constant', cmdline, constant)
    two = report.document('constant', cmdline, constant)
    two['timestamp'] = 'later'
    assert report.payload(one) == report.payload(two)
    assert 'timestamp' not in json.loads(report.payload(one))


def test_non_finite_values(norm_result):
    doc = report.document('norm', {}, norm_result)
    data = json.loads(report.dumps(doc))
    assert data['result']['value'] == 'inf'
    assert data['result']['table'][2][1] == 'inf'


def test_write_atomic(tmp_path, constant):
    filename = tmp_path / 'out.json'
    report.write(report.document('constant', {}, constant), str(filename))
    data = json.loads(filename.read_text())
    assert data['result']['pieces'] == {'norm<=1': 0.5, 'norm>1': 1.5}
    assert [p.name for p in tmp_path.iterdir()] == ['out.json']


def test_summaries(norm_result, constant):
    assert 'divergent' in norm_result.report.summary()
    assert constant.report.summary().startswith('C3 = 2')


def test_csv(norm_result):
    buf = io.StringIO()
    csvdata.write_table(norm_result, buf)
    text = buf.getvalue()
    assert text.splitlines()[0] == 'r,value,err'
    buf.seek(0)
    assert csvdata.read_table(buf) == TABLE


def test_csv_verification_tables(constant):
    rep = results.VerificationReport(
        'power-hausdorff', 1.0, constant, results.BOUNDED_CONSISTENT,
        tables={'source': TABLE[:1], 'image': TABLE[:2]})
    buf = io.StringIO()
    csvdata.write_table(rep, buf)
    buf.seek(0)
    assert csvdata.read_table(buf) == TABLE[:2]

    buf = io.StringIO()
    csvdata.write_table(rep, buf, table='source', delimiter=';')
    assert buf.getvalue().splitlines()[1] == '0.5;2.0;0.0'

    with pytest.raises(ParameterError, match='no table'):
        csvdata.write_table(rep, io.StringIO(), table='truncation')


def test_verification_report_failed(constant):
    rep = results.VerificationReport('power-hausdorff', 100.0, constant,
                                     results.BOUND_VIOLATED)
    assert rep.failed
    assert 'bound_violated' in rep.report.summary()


def test_dataframe(norm_result):
    pytest.importorskip('pandas')
    import hhl.pandas
    frame = hhl.pandas.to_dataframe(norm_result)
    assert list(frame.columns) == ['r', 'value', 'err']
    assert len(frame) == 3
    assert frame['value'].iloc[1] == 3.0
