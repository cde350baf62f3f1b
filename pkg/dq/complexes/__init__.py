''' 
Date: 2026-09-05 09:00:12
LastEditTime: 2026-10-15 17:31:40
Description: 
    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

from dq.complexes.base_dgla import BaseDGLA
from dq.complexes.multidiff import GerstenhaberDGLA
from dq.complexes.polyvector import SchoutenDGLA

DGLA_LIST = {
    'schouten': SchoutenDGLA,
    'gerstenhaber': GerstenhaberDGLA,
}
