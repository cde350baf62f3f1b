''' 
Date: 2026-09-18 14:02:51
LastEditTime: 2026-10-11 22:35:40
Description: 
    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

import os.path as osp

import yaml


CONFIG_DIR = osp.join(osp.dirname(osp.dirname(osp.abspath(__file__))), 'config')


def load_config(config_path="default.yaml") -> dict:
    """ Load a YAML config; bare file names are looked up in the packaged config directory. """
    if not osp.exists(config_path) and osp.dirname(config_path) == '':
        config_path = osp.join(CONFIG_DIR, config_path)
    with open(config_path, 'r') as f:
        return yaml.safe_load(f) or {}


def merge_config(config, args_dict):
    """ Command-line values override config keys; unset flags (None) keep the config value. """
    merged = dict(config)
    merged.update({k: v for k, v in args_dict.items() if v is not None})
    return merged
