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

'''
Console output for hhl.

sys.stdout and sys.stderr are wrapped so that everything printed during a
run can also be copied into a logfile (see :py:meth:`Logfile.open`). When
stdout is not a terminal, the progress bar and the messages written through
:py:func:`interactive` are suppressed, so that a JSON or CSV report printed
to stdout stays machine readable.
'''

import io
import sys
import threading
import time

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


_warn_lock = threading.Lock()


def warn(msg):
    with _warn_lock:
        sys.stderr.write(_('Warning: ') + msg + '\n')


def error(msg):
    sys.stderr.write(_('Error: ') + msg + '\n')


def interactive(msg):
    """Only forward the message to stdout if it is a terminal."""
    if hasattr(sys.stdout, 'interactive'):
        sys.stdout.interactive(msg)
    elif sys.stdout.isatty():
        sys.stdout.write(msg)


class Stream(object):
    '''A console stream that clears the progress bar before it is written
    to and copies everything into the session log.'''

    def __init__(self, pipe, session, bar):
        self.pipe = pipe
        self.session = session
        self.bar = bar

    def _forward(self, data):
        self.bar.clear()
        self.pipe.write(data)

    def write(self, data):
        self._forward(data)
        self.session.write(data)

    def interactive(self, data):
        if self.pipe.isatty():
            self._forward(data)
        self.session.write(data)

    def isatty(self):
        return self.pipe.isatty()

    def flush(self):
        self.pipe.flush()
        self.session.flush()

    def fileno(self):
        return self.pipe.fileno()


class Logfile(object):
    '''Collects the session in memory until a file is opened.'''

    def __init__(self):
        self.buffer = io.StringIO()
        self.filename = None

    def write(self, data):
        self.buffer.write(data)
        self.buffer.flush()

    def open(self, filename):
        target = open(filename, 'a', encoding='utf-8')
        target.write(self.buffer.getvalue())
        self.buffer = target
        self.filename = filename

    def close(self):
        self.buffer.close()
        self.buffer = io.StringIO()
        self.filename = None

    def isatty(self):
        return False

    def flush(self):
        self.buffer.flush()


class ProgressBar(object):
    '''One line bar with the remaining (or, when done, elapsed) time.'''

    width = 50

    def __init__(self, pipe):
        self.pipe = pipe
        self.visible = False
        self.label = ''
        self.max_value = 1
        self.start_time = time.time()
        self.elapsed_time = 0.0

    def start(self, max_value, label=''):
        self.max_value = max(1, max_value)
        self.label = label
        self.start_time = time.time()
        self.update(0)

    def clear(self):
        if self.visible:
            self.pipe.write(' ' * 80 + '\r')
            self.visible = False

    def _clock(self, progress):
        if progress <= 0:
            return '--:--:--'
        if progress >= 1:
            seconds = self.elapsed_time
        else:
            seconds = self.elapsed_time * (1 / progress - 1)
        return time.strftime('%H:%M:%S', time.gmtime(seconds))

    def update(self, value):
        self.elapsed_time = time.time() - self.start_time
        if not self.pipe.isatty():
            return

        progress = min(1.0, float(value) / self.max_value)
        bar = ('#' * int(round(progress * self.width))).ljust(self.width)
        line = '%s|%s| %s %s' % (self.label[:12].ljust(13) if self.label else '',
                                 bar, ('%i%%' % round(progress * 100)).rjust(4),
                                 self._clock(progress))
        self.pipe.write(line + ('\n' if progress >= 1 else '\r'))
        self.pipe.flush()
        self.visible = progress < 1

    def isatty(self):
        return self.pipe.isatty()

    def flush(self):
        self.pipe.flush()


progressbar = ProgressBar(sys.stdout)
logfile = Logfile()

redirects_activated = False


def activate_redirects():
    global redirects_activated

    if redirects_activated:
        return
    redirects_activated = True

    # The bar draws on the real stdout, underneath the wrappers
    progressbar.pipe = sys.stdout
    sys.stdout = Stream(sys.stdout, logfile, progressbar)
    sys.stderr = Stream(sys.stderr, logfile, progressbar)
