''' 
Date: 2026-09-18 14:20:33
LastEditTime: 2026-10-15 19:12:06
Description: 
    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

import json
import os
import os.path as osp
import sys
import time

import joblib
import yaml


# Whether to automatically insert a date and time stamp into the names of run directories
FORCE_DATESTAMP = False


def setup_logger_kwargs(exp_name, output_dir, seed=None, datestamp=False):
    datestamp = datestamp or FORCE_DATESTAMP
    ymd_time = time.strftime("%Y-%m-%d_") if datestamp else ''
    relpath = ''.join([ymd_time, exp_name])
    if seed is not None:
        relpath = osp.join(relpath, ''.join([exp_name, '_seed_', str(seed)]))
    return dict(output_dir=osp.join(output_dir, relpath), exp_name=exp_name)


def is_json_serializable(v):
    try:
        json.dumps(v)
        return True
    except (TypeError, ValueError):
        return False


def convert_json(obj):
    """ Convert obj to a version which can be serialized with JSON. """
    if is_json_serializable(obj):
        return obj
    if isinstance(obj, dict):
        return {str(convert_json(k)): convert_json(v) for k, v in obj.items()}
    if isinstance(obj, (tuple, list)):
        return [convert_json(x) for x in obj]
    return str(obj)


color2num = dict(
    gray=30,
    red=31,
    green=32,
    yellow=33,
    blue=34,
    magenta=35,
    cyan=36,
    white=37,
    crimson=38
)


def colorize(string, color, bold=False, highlight=False):
    attr = []
    num = color2num[color]
    if highlight:
        num += 10
    attr.append(str(num))
    if bold:
        attr.append('1')
    return '\x1b[%sm%s\x1b[0m' % (';'.join(attr), string)


class Logger:
    """
        Diagnostics logger for a single dq run.

        Messages go to standard error, which keeps standard output free for the JSON result. When
        `output_dir` is given the run configuration and results are also stored there.
    """
    def __init__(self, output_dir=None, exp_name=None, verbose=False, stream=None):
        self.exp_name = exp_name
        self.verbose = verbose
        self.stream = stream
        self.log_print_history = []
        self.eval_results = {}
        self.eval_records = {}

        self.output_dir = output_dir
        if self.output_dir is not None:
            if osp.exists(self.output_dir):
                self.log(">> Log path %s already exists! Storing info there anyway." % self.output_dir, 'yellow')
            else:
                os.makedirs(self.output_dir)
            self.log(">> Logging data to %s" % self.output_dir, 'green')

    def log(self, msg, color='green'):
        self.log_print_history.append(msg)
        # errors are always shown, the rest only in verbose runs
        if self.verbose or color == 'red':
            stream = self.stream or sys.stderr
            text = colorize(msg, color, bold=True) if stream.isatty() else msg
            print(text, file=stream)

    def log_dict(self, dict_msg, color='green'):
        for key, value in dict_msg.items():
            self.log("{}: {}".format(key, value), color)

    def save_config(self, config):
        if self.output_dir is None:
            return
        if self.exp_name is not None:
            config['exp_name'] = self.exp_name
        config_json = convert_json(config)
        output = json.dumps(config_json, separators=(',', ':\t'), indent=4, sort_keys=True)
        with open(osp.join(self.output_dir, "config.json"), 'w') as out:
            out.write(output)
        with open(osp.join(self.output_dir, "config.yaml"), 'w') as out:
            yaml.dump(config_json, out, default_flow_style=False, indent=4, sort_keys=False)

    def add_eval_results(self, results, records=None):
        self.eval_results.update(results)
        if records is not None:
            self.eval_records = records

    def save_eval_results(self):
        if self.output_dir is None:
            return
        result_file = osp.join(self.output_dir, 'results.json')
        record_file = osp.join(self.output_dir, 'records.pkl')
        self.log(f'>> Saving results to {result_file}')
        with open(result_file, 'w') as out:
            json.dump(convert_json(self.eval_results), out, indent=4, sort_keys=True)
        self.log(f'>> Saving raw records to {record_file}')
        joblib.dump(self.eval_records, record_file)
