# -*- coding: utf-8 -*-

"""This file is part of the ICNC library.

ICNC is free software: you can redistribute it and/or modify
it under the terms of the GNU Lesser General Public License as
published by the Free Software Foundation, either version 3 of
the License, or (at your option) any later version.

ICNC is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public
License along with ICNC. If not, see <http://www.gnu.org/licenses/>.

"""

from functools import wraps

from stopit import threading_timeoutable, TimeoutException


TIMEOUT = 'Timeout'


def _time_limited(func):
    """Give func an optional wall-clock cap.

    The wrapped function accepts a `timeout` keyword in seconds (None for no
    cap) and returns TIMEOUT instead of a result when the cap is hit.

    Parameters
    ----------
    func: function
        The decorated function.

    Returns
    -------
    limited_call: function
    """
    timed_call = threading_timeoutable(default=TIMEOUT)(func)

    @wraps(func)
    def limited_call(*args, **kwargs):
        try:
            return timed_call(*args, **kwargs)
        except TimeoutException:
            return TIMEOUT

    return limited_call
