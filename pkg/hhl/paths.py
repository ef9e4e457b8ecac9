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

'''Some path values, used to find the translations.
'''

import os
import sys

import gettext
import locale


local_run = False

# set if local_run == True
source_dir = str()

# set if local_run == False
prefix = str()


def init(local_run_value, package_path):
    '''Initialize path values for hhl
    '''
    global local_run, source_dir, prefix

    local_run = bool(local_run_value)

    base_dir = os.path.split(os.path.abspath(package_path))[0]

    if local_run:
        source_dir = base_dir
        init_gettext(os.path.join(source_dir, 'po'))
    else:
        # Installed copies keep their catalogs below sys.prefix; a missing
        # directory simply leaves the messages untranslated.
        prefix = sys.prefix
        init_gettext(os.path.join(prefix, 'share', 'locale'))


def init_gettext(locale_dir):
    '''Initialize gettext using the given directory containing the l10n data.
    '''
    gettext.bindtextdomain('hhl', locale_dir)
    gettext.textdomain('hhl')
    try:
        locale.textdomain('hhl')
    except AttributeError:
        # not available on every platform
        pass
