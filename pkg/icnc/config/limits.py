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

# Caps shared by every exhaustive search in ICNC. Instances of interest are
# desk scale (n <= 12) but path and cycle counts grow exponentially.
DEFAULT_LIMITS = {
    'path_limit': 100000,
    'cycle_limit': 1000000,
    'mais_max_n': 20,
    'minrank_max_n': 8,
    'search_max_subpaths': 20,
    'search_max_nodes': 1000000,
    'crosspath_combinations': 100000,
}


def merge_limits(limits=None, **overrides):
    """Return a copy of DEFAULT_LIMITS updated with user supplied caps.

    Parameters
    ----------
    limits: dict or None
        Caps to apply on top of the defaults.
    overrides: keyword arguments
        Single caps; a value of None keeps the default.

    Returns
    -------
    merged: dict
        The effective caps.
    """
    merged = dict(DEFAULT_LIMITS)
    for source in (limits or {}), overrides:
        for key, value in source.items():
            if key not in DEFAULT_LIMITS:
                raise ValueError('Unknown limit: \'{}\''.format(key))
            if value is None:
                continue
            if not isinstance(value, int) or value <= 0:
                raise ValueError('Limit {} must be a positive integer, got {}'.format(key, value))
            merged[key] = value
    return merged
