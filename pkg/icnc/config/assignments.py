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

# Global encoding vectors of the eight final configurations, written in role
# space: bit r of a vector belongs to the source playing role r. 'trunk' rules
# cover the stretch of the role-1 unipath between two junctions, 'cross' rules
# cover the segment u'_ij -> t_ij of the ij-crosspath. Every other edge of the
# reduced subgraph carries the sum of its incoming vectors.
assignment_tables = {
    ('A', 'S21'): {
        'trunk': (('v12', 'v13', '110'), ('v13', "w'12", '111')),
        'cross': {(1, 2): '100', (1, 3): '100', (2, 1): '010',
                  (2, 3): '010', (3, 1): '001', (3, 2): '001'},
    },
    ('A', 'S22'): {
        'trunk': (('v12', 'v13', '110'), ('v13', "w'12", '111')),
        'cross': {(3, 1): '001', (3, 2): '001', (1, 2): '100',
                  (2, 1): '010', (1, 3): '110'},
    },
    ('A', 'S23'): {
        'trunk': (('v12', 'v13', '110'), ('v13', 't31', '111'), ('t31', "w'12", '110')),
        'cross': {(1, 2): '100', (1, 3): '100', (2, 1): '010',
                  (2, 3): '010', (3, 1): '001'},
    },
    ('A', 'S24'): {
        'trunk': (('v12', 'v13', '110'), ('v13', 't31', '111'), ('t31', "w'12", '110')),
        'cross': {(1, 2): '100', (2, 1): '010', (1, 3): '110', (3, 1): '001'},
    },
    ('B', 'S21'): {
        'trunk': (('v12', 'v13', '110'), ('v13', 't21', '111'), ('t21', "w'13", '101')),
        'cross': {(3, 1): '001', (3, 2): '001', (1, 2): '100',
                  (1, 3): '100', (2, 1): '010'},
    },
    ('B', 'S22'): {
        'trunk': (('v12', 'v13', '110'), ('v13', "w'13", '111')),
        'cross': {(1, 2): '100', (1, 3): '100', (2, 1): '010',
                  (2, 3): '010', (3, 1): '001', (3, 2): '001'},
    },
    ('B', 'S23'): {
        'trunk': (('v12', 'v13', '110'), ('v13', "w'13", '111')),
        'cross': {(3, 1): '001', (3, 2): '001', (1, 2): '100',
                  (2, 1): '010', (1, 3): '110'},
    },
    ('B', 'S24'): {
        'trunk': (('v12', 'v13', '110'), ('v13', 't21', '111'), ('t21', "w'13", '101')),
        'cross': {(1, 2): '100', (3, 1): '001', (3, 2): '001',
                  (2, 1): '010', (2, 3): '010', (1, 3): '110'},
    },
}
