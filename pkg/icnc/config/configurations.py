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

# Crosspath type trees of the two skeleton styles. A configuration id maps to
# the crosspath types (1, 2 or 3) of the pairs listed in STYLE_*_PAIRS, in
# that order. Role pairs that are absent are always of type 1.
STYLE_A_PAIRS = ((1, 3), (2, 3), (3, 1), (3, 2))

style_a_config_dict = {
    1: (1, 1, 1, 1),
    2: (1, 1, 1, 2),
    3: (1, 3, 1, 1),
    4: (1, 3, 1, 2),
    5: (1, 1, 2, 1),
    6: (1, 1, 2, 2),
    7: (1, 3, 2, 1),
    8: (1, 3, 2, 2),
    9: (3, 1, 1, 1),
    10: (3, 1, 1, 2),
    11: (3, 3, 1, 1),
    12: (3, 3, 1, 2),
    13: (3, 1, 2, 1),
    14: (3, 1, 2, 2),
    15: (3, 3, 2, 1),
    16: (3, 3, 2, 2),
}

STYLE_B_PAIRS = ((2, 1), (1, 3), (2, 3))

style_b_config_dict = {
    1: (1, 1, 2),
    2: (1, 1, 1),
    3: (1, 1, 3),
    4: (1, 3, 2),
    5: (1, 3, 1),
    6: (1, 3, 3),
    7: (2, 1, 2),
    8: (2, 1, 1),
    9: (2, 1, 3),
    10: (2, 3, 2),
    11: (2, 3, 1),
    12: (2, 3, 3),
}

# Types a crosspath may take in each style, by role pair.
allowed_types_dict = {
    'A': {
        (1, 2): (1,),
        (2, 1): (1,),
        (1, 3): (1, 3),
        (2, 3): (1, 3),
        (3, 1): (1, 2),
        (3, 2): (1, 2),
    },
    'B': {
        (1, 2): (1,),
        (3, 1): (1,),
        (3, 2): (1,),
        (2, 1): (1, 2),
        (1, 3): (1, 3),
        (2, 3): (1, 2, 3),
    },
}

# Style B configurations whose instances cannot have three sources in a
# minimal feedback vertex set.
illegitimate_configurations = {
    'A': (),
    'B': (10, 12),
}

# Stage-I reductions. 'delete' lists the role pairs whose crosspaths are dropped
# from the subgraph H, 'identify' maps a crosspath role of the final template
# onto the instance crosspath that plays it, and 'final' names the template.
stage_one_reductions = {
    'A': {
        'S11': {'configurations': (1,), 'delete': (), 'identify': {}, 'final': 'S21'},
        'S12': {'configurations': (3, 11), 'delete': ((1, 3),),
                'identify': {(1, 3): (2, 3)}, 'final': 'S22'},
        'S13': {'configurations': (9,), 'delete': ((2, 3),), 'identify': {}, 'final': 'S22'},
        'S14': {'configurations': (2, 6), 'delete': ((3, 1),),
                'identify': {(3, 1): (3, 2)}, 'final': 'S23'},
        'S15': {'configurations': (5,), 'delete': ((3, 2),), 'identify': {}, 'final': 'S23'},
        'S16': {'configurations': (4,), 'delete': ((1, 3), (3, 1)),
                'identify': {(1, 3): (2, 3), (3, 1): (3, 2)}, 'final': 'S24'},
        'S17': {'configurations': (7, 8, 15, 16), 'delete': ((1, 3), (3, 2)),
                'identify': {(1, 3): (2, 3)}, 'final': 'S24'},
        'S18': {'configurations': (10, 12, 14), 'delete': ((3, 1), (2, 3)),
                'identify': {(3, 1): (3, 2)}, 'final': 'S24'},
        'S19': {'configurations': (13,), 'delete': ((2, 3), (3, 2)), 'identify': {}, 'final': 'S24'},
    },
    'B': {
        'S11': {'configurations': (1,), 'delete': ((2, 1),),
                'identify': {(2, 1): (2, 3)}, 'final': 'S21'},
        'S12': {'configurations': (2,), 'delete': (), 'identify': {}, 'final': 'S22'},
        'S13': {'configurations': (3,), 'delete': ((1, 3),),
                'identify': {(1, 3): (2, 3)}, 'final': 'S23'},
        'S14': {'configurations': (4, 5, 6), 'delete': ((2, 3),), 'identify': {}, 'final': 'S23'},
        'S15': {'configurations': (7, 8, 9), 'delete': ((2, 3),), 'identify': {}, 'final': 'S21'},
        'S16': {'configurations': (11,), 'delete': (), 'identify': {}, 'final': 'S24'},
    },
}
