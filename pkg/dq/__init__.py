''' 
Date: 2026-09-02 10:05:51
LastEditTime: 2026-10-16 09:12:30
Description: 
    dq: exact computer algebra for deformation quantization on R^n.

    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

__version__ = '1.0.0'
