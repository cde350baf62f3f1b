''' 
Date: 2026-09-24 15:40:12
LastEditTime: 2026-10-16 18:41:30
Description: 
    Launcher for the dq command line when the package is used from a source checkout.

    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

import sys
import os.path as osp

ROOT_DIR = osp.abspath(osp.dirname(osp.dirname(osp.realpath(__file__))))
if ROOT_DIR not in sys.path:
    sys.path.insert(0, ROOT_DIR)

from dq.cli import main


if __name__ == '__main__':
    sys.exit(main())
