# -*- Mode:Python; indent-tabs-mode:nil; tab-width:4 -*-
#
# Copyright (C) 2020 Canonical Ltd
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License version 3 as
# published by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import contextlib
import os
from typing import Callable, Iterator

from progressbar import Bar, Counter, Percentage, ProgressBar


def _init_progress_bar(total: int, message: str) -> ProgressBar:
    if is_dumb_terminal():
        widgets = [message, " ", Percentage()]
    else:
        widgets = [
            message,
            " ",
            Bar(marker="=", left="[", right="]"),
            " ",
            Percentage(),
            " (",
            Counter(),
            " replicates)",
        ]
    return ProgressBar(widgets=widgets, maxval=total)


@contextlib.contextmanager
def replicate_progress(total: int, message: str) -> Iterator[Callable[[int], None]]:
    """Show a bar while replicates complete; yields the update callback.

    The callback takes the number of replicates done so far.
    """
    progress_bar = _init_progress_bar(total, message)
    progress_bar.start()

    def update(done: int) -> None:
        if not is_dumb_terminal():
            progress_bar.update(min(done, total))

    try:
        yield update
    finally:
        progress_bar.finish()


def is_dumb_terminal():
    """Return True if on a dumb terminal."""
    is_stdout_tty = os.isatty(1)
    is_term_dumb = os.environ.get("TERM", "") == "dumb"
    return not is_stdout_tty or is_term_dumb
