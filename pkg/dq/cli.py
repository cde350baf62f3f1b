''' 
Date: 2026-09-24 15:21:09
LastEditTime: 2026-10-17 10:48:12
Description: 
    Command-line front end. Each subcommand parses its inputs, runs one library operation and
    prints a JSON object on standard output. Exit codes: 0 success, 1 parse error, 2 domain or
    usage error, 3 a *-check whose property is false.

    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

import argparse
import json
import sys

import yaml

from dq.complexes import DGLA_LIST
from dq.complexes.multidiff import (
    gerst_bracket,
    gerst_product,
    hochschild_d,
    hochschild_d_alternating,
    identity,
)
from dq.complexes.polyvector import (
    hamiltonian_vf,
    is_poisson,
    jacobiator,
    poisson_bracket,
    schouten_bracket,
    sharp,
)
from dq.parser.expression import max_index, parse, parse_series, parse_value
from dq.parser.printer import series_text, to_text
from dq.quantization.formality import (
    LINFTY_FAMILY_LIST,
    hkr_bracket_defect,
    hkr_chain_check,
    hkr_formal,
    hkr_map,
    linfty_check,
)
from dq.quantization.gauge import (
    bch,
    formal_bivector,
    formal_vector_field,
    gauge_act_dgla,
    gauge_apply_bivector,
    mc_residual_poisson,
    operator_log,
)
from dq.quantization.star import (
    EquivalenceOp,
    StarProduct,
    alpha_from_matrix,
    associator_residual,
    equivalence_apply,
    first_order_skew,
    formal_function,
    mc_residual_star,
    moyal_star,
    star_apply,
    star_commutator,
    symplectic_alpha,
)
from dq.util.errors import DQError, ParseError, UsageError
from dq.util.logger import Logger, setup_logger_kwargs
from dq.util.random_util import random_multivector, set_seed
from dq.util.run_util import load_config, merge_config
from dq.util.serialize import dumps, operator_terms_json, to_json


EXIT_OK = 0
EXIT_CHECK_FAILED = 3

# flags that carry math text; their largest index fixes the dimension when --dim is absent
EXPRESSION_FLAGS = (
    'bivector', 'covector', 'a', 'b', 'f', 'g', 'h', 'op', 'op2', 'multivector', 'vf', 'vf2',
    'formal_bivector', 'star_series', 'deformation', 'T', 'generator', 'element', 'expr',
)


class Inputs:
    """ Merged configuration plus helpers that read the math flags on a shared dimension. """

    def __init__(self, cfg):
        self.cfg = cfg
        self.order = cfg['order']
        self.dim = cfg.get('dim')
        if self.dim is None:
            texts = [cfg[k] for k in EXPRESSION_FLAGS if isinstance(cfg.get(k), str)]
            self.dim = max([max_index(t) for t in texts] + [self._alpha_size()])

    def _alpha_size(self):
        alpha = self.cfg.get('alpha')
        if isinstance(alpha, str) and alpha.strip().startswith('['):
            try:
                return len(json.loads(alpha))
            except json.JSONDecodeError:
                # reported with its position once alpha() parses it
                return 0
        if isinstance(alpha, list):
            return len(alpha)
        return 0

    def require(self, key):
        value = self.cfg.get(key)
        if value is None:
            raise UsageError(f"missing required input --{key}")
        return value

    def has(self, key):
        return self.cfg.get(key) is not None

    def value(self, key, kind):
        text = self.require(key)
        try:
            return parse_value(text, kind, self.dim)
        except ParseError as e:
            e.msg = f"--{key}: {e.msg}"
            raise

    def series(self, key, element, degree=None):
        text = self.require(key)
        try:
            return parse_series(text, element, self.order, self.dim, degree)
        except ParseError as e:
            e.msg = f"--{key}: {e.msg}"
            raise

    def alpha(self):
        alpha = self.require('alpha')
        if alpha == 'symplectic':
            if not self.dim or self.dim % 2:
                raise UsageError(f"the symplectic preset needs a positive even dimension, got {self.dim}")
            return symplectic_alpha(self.dim // 2)
        if isinstance(alpha, str):
            try:
                alpha = json.loads(alpha)
            except json.JSONDecodeError as e:
                raise ParseError(f"--alpha is not a JSON matrix: {e.msg}", alpha, e.pos) from e
        return alpha_from_matrix(alpha)

    def star(self):
        if self.has('star_series'):
            return StarProduct(self.series('star_series', 'operator', degree=2))
        if (self.cfg.get('star') or 'moyal') != 'moyal':
            raise UsageError(f"unknown star product preset '{self.cfg['star']}'")
        return moyal_star(self.alpha(), self.order, n_jobs=self.cfg.get('n_jobs', 1))


def run_poisson_check(inputs, logger):
    ok, witness = is_poisson(inputs.value('bivector', 'multivector'))
    return {'poisson': ok, 'witness': to_text(witness)}, ok


def run_schouten(inputs, logger):
    bracket = schouten_bracket(inputs.value('a', 'multivector'), inputs.value('b', 'multivector'))
    return {'bracket': to_text(bracket), 'degree': bracket.degree}, None


def run_sharp(inputs, logger):
    V = sharp(inputs.value('bivector', 'multivector'), inputs.value('covector', 'covector'))
    return {'vector_field': to_text(V)}, None


def run_pbracket(inputs, logger):
    pi = inputs.value('bivector', 'multivector')
    f, g = inputs.value('f', 'polynomial'), inputs.value('g', 'polynomial')
    payload = {'bracket': to_text(poisson_bracket(pi, f, g)), 'hamiltonian_vf': to_text(hamiltonian_vf(pi, f))}
    return payload, None


def run_jacobiator(inputs, logger):
    pi = inputs.value('bivector', 'multivector')
    f, g, h = (inputs.value(k, 'polynomial') for k in ('f', 'g', 'h'))
    return {'jacobiator': to_text(jacobiator(pi, f, g, h))}, None


def _series_out(inputs, series):
    return to_json(series, exact=True) if inputs.cfg.get('json_values') else series_text(series)


def run_moyal(inputs, logger):
    S = inputs.star()
    if inputs.has('f') and inputs.has('g'):
        F, G = (formal_function(inputs.value(k, 'polynomial'), S.order) for k in ('f', 'g'))
        return {'order': S.order, 'product': _series_out(inputs, star_apply(S, F, G))}, None
    return {'order': S.order, 'star': _series_out(inputs, S.terms)}, None


def run_star_apply(inputs, logger):
    S = inputs.star()
    F, G = inputs.series('f', 'polynomial'), inputs.series('g', 'polynomial')
    payload = {
        'product': series_text(star_apply(S, F, G)),
        'commutator': series_text(star_commutator(S, F, G)),
    }
    return payload, None


def run_assoc_check(inputs, logger):
    S = inputs.star()
    f, g, h = (inputs.value(k, 'polynomial') for k in ('f', 'g', 'h'))
    residual = associator_residual(S, f, g, h)
    return {'residual': series_text(residual)}, residual.is_zero()


def run_skew_p1(inputs, logger):
    return {'bivector': to_text(first_order_skew(inputs.star()))}, None


def run_mc_check(inputs, logger):
    if inputs.has('formal_bivector'):
        residual = mc_residual_poisson(formal_bivector(inputs.series('formal_bivector', 'multivector', 2)))
    elif inputs.has('deformation'):
        residual = mc_residual_star(inputs.series('deformation', 'operator', 2))
    else:
        residual = mc_residual_star(inputs.star().deformation())
    return {'residual': series_text(residual)}, residual.is_zero()


def run_equiv_apply(inputs, logger):
    S = inputs.star()
    terms = inputs.series('T', 'operator', 1)
    if not terms[0]:
        terms = terms.with_coeff(0, identity(inputs.dim))
    T = EquivalenceOp(terms)
    return {'star': series_text(equivalence_apply(T, S).terms), 'log': series_text(operator_log(T))}, None


def run_gauge(inputs, logger):
    dgla_name = inputs.cfg.get('dgla')
    if dgla_name is None:
        X = formal_vector_field(inputs.series('vf', 'multivector', 1))
        P = formal_bivector(inputs.series('formal_bivector', 'multivector', 2))
        return {'bivector': series_text(gauge_apply_bivector(X, P))}, None
    if dgla_name not in DGLA_LIST:
        raise UsageError(f"unknown DGLA '{dgla_name}', choose from {sorted(DGLA_LIST)}")
    dgla = DGLA_LIST[dgla_name](inputs.dim)
    element = 'multivector' if dgla_name == 'schouten' else 'operator'
    # shifted degree 0 is geometric degree 1 and arity 1 alike
    g = inputs.series('generator', element, 1)
    a = inputs.series('element', element, 2)
    return {'element': series_text(gauge_act_dgla(g, a, dgla))}, None


def run_bch(inputs, logger):
    X = formal_vector_field(inputs.series('vf', 'multivector', 1))
    Y = formal_vector_field(inputs.series('vf2', 'multivector', 1))
    return {'bch': series_text(bch(X, Y))}, None


def run_hochschild_d(inputs, logger):
    D = inputs.value('op', 'operator')
    dD = hochschild_d_alternating(D) if inputs.cfg.get('alternating') else hochschild_d(D)
    return {'differential': to_text(dD), 'arity': D.arity + 1}, None


def run_gerst(inputs, logger):
    D, E = inputs.value('op', 'operator'), inputs.value('op2', 'operator')
    return {'product': to_text(gerst_product(D, E)), 'bracket': to_text(gerst_bracket(D, E))}, None


def run_hkr(inputs, logger):
    if inputs.has('formal_bivector'):
        P = formal_bivector(inputs.series('formal_bivector', 'multivector', 2))
        return {'operator': series_text(hkr_formal(P))}, None
    X = inputs.value('multivector', 'multivector')
    D = hkr_map(X)
    payload = {
        'operator': to_text(D),
        'terms': operator_terms_json(D),
        'chain_check': to_text(hkr_chain_check(X)),
    }
    return payload, None


def run_hkr_defect(inputs, logger):
    defect, closed = hkr_bracket_defect(inputs.value('a', 'multivector'), inputs.value('b', 'multivector'))
    return {'defect': to_text(defect), 'closed': closed}, None


def run_linfty_check(inputs, logger):
    family_name = inputs.cfg.get('family') or 'hkr'
    if family_name not in LINFTY_FAMILY_LIST:
        raise UsageError(f"unknown family '{family_name}', choose from {sorted(LINFTY_FAMILY_LIST)}")
    fam = LINFTY_FAMILY_LIST[family_name]()
    if inputs.has('a') or inputs.has('b'):
        samples = [(inputs.value('a', 'multivector'), inputs.value('b', 'multivector'))]
    else:
        rng = set_seed(inputs.cfg['seed'])
        dim = max(inputs.dim, 3)
        samples = []
        for _ in range(inputs.cfg['num_samples']):
            degrees = [int(d) for d in rng.integers(1, 3, size=2)]
            samples.append(tuple(
                random_multivector(rng, dim, d, inputs.cfg['max_coeff_degree']) for d in degrees
            ))
        logger.log(f">> Drew {len(samples)} random sample pairs on R^{dim}")
    report = linfty_check(fam, samples, progress=inputs.cfg.get('verbose', False))
    return report, report['passed']


def run_parse(inputs, logger):
    kind = inputs.require('kind')
    if kind == 'series':
        element = inputs.cfg.get('element') or 'polynomial'
        value = parse(inputs.require('expr'), 'series', inputs.dim, order=inputs.order, element=element)
    else:
        value = parse(inputs.require('expr'), kind, inputs.dim)
    if inputs.cfg.get('json_values'):
        return {'kind': kind, 'value': to_json(value, exact=True), 'dim': inputs.dim}, None
    return {'kind': kind, 'value': to_text(value), 'dim': inputs.dim}, None


COMMAND_LIST = {
    'poisson-check': run_poisson_check,
    'schouten': run_schouten,
    'sharp': run_sharp,
    'pbracket': run_pbracket,
    'jacobiator': run_jacobiator,
    'moyal': run_moyal,
    'star-apply': run_star_apply,
    'assoc-check': run_assoc_check,
    'skew-p1': run_skew_p1,
    'mc-check': run_mc_check,
    'equiv-apply': run_equiv_apply,
    'gauge': run_gauge,
    'bch': run_bch,
    'hochschild-d': run_hochschild_d,
    'gerst': run_gerst,
    'hkr': run_hkr,
    'hkr-defect': run_hkr_defect,
    'linfty-check': run_linfty_check,
    'parse': run_parse,
}

# library operations owned by each subcommand; shared builders such as moyal_star are listed once
COMMAND_OPERATIONS = {
    'poisson-check': [is_poisson],
    'schouten': [schouten_bracket],
    'sharp': [sharp],
    'pbracket': [poisson_bracket, hamiltonian_vf],
    'jacobiator': [jacobiator],
    'moyal': [moyal_star, symplectic_alpha],
    'star-apply': [star_apply, star_commutator],
    'assoc-check': [associator_residual],
    'skew-p1': [first_order_skew],
    'mc-check': [mc_residual_star, mc_residual_poisson],
    'equiv-apply': [equivalence_apply, operator_log],
    'gauge': [gauge_apply_bivector, gauge_act_dgla],
    'bch': [bch],
    'hochschild-d': [hochschild_d, hochschild_d_alternating],
    'gerst': [gerst_product, gerst_bracket],
    'hkr': [hkr_map, hkr_chain_check, hkr_formal],
    'hkr-defect': [hkr_bracket_defect],
    'linfty-check': [linfty_check],
    'parse': [parse],
}

COMMAND_FLAGS = {
    'poisson-check': ['bivector'],
    'schouten': ['a', 'b'],
    'sharp': ['bivector', 'covector'],
    'pbracket': ['bivector', 'f', 'g'],
    'jacobiator': ['bivector', 'f', 'g', 'h'],
    'moyal': ['star', 'alpha', 'star_series', 'f', 'g'],
    'star-apply': ['star', 'alpha', 'star_series', 'f', 'g'],
    'assoc-check': ['star', 'alpha', 'star_series', 'f', 'g', 'h'],
    'skew-p1': ['star', 'alpha', 'star_series'],
    'mc-check': ['star', 'alpha', 'star_series', 'formal_bivector', 'deformation'],
    'equiv-apply': ['star', 'alpha', 'star_series', 'T'],
    'gauge': ['vf', 'formal_bivector', 'dgla', 'generator', 'element'],
    'bch': ['vf', 'vf2'],
    'hochschild-d': ['op'],
    'gerst': ['op', 'op2'],
    'hkr': ['multivector', 'formal_bivector'],
    'hkr-defect': ['a', 'b'],
    'linfty-check': ['family', 'a', 'b'],
    'parse': ['kind', 'expr', 'element'],
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--cfg', type=str, default='default.yaml', help='YAML run configuration')
    common.add_argument('--file', type=str, default=None, help='JSON file with one value per flag name')
    common.add_argument('--dim', type=int, default=None)
    common.add_argument('--order', '-N', type=int, default=None, help='truncation order in hbar')
    common.add_argument('--seed', '-s', type=int, default=None)
    common.add_argument('--n_jobs', type=int, default=None)
    common.add_argument('--num_samples', '-ns', type=int, default=None)
    common.add_argument('--max_coeff_degree', type=int, default=None)
    common.add_argument('--output_dir', type=str, default=None)
    common.add_argument('--exp_name', type=str, default=None)
    common.add_argument('--verbose', '-v', action='store_true', default=None)

    parser = argparse.ArgumentParser(prog='dq', description='Exact deformation quantization toolkit.')
    subparsers = parser.add_subparsers(dest='command', required=True)
    for name in COMMAND_LIST:
        sub = subparsers.add_parser(name, parents=[common])
        for flag in COMMAND_FLAGS[name]:
            if flag == 'family':
                sub.add_argument('--family', type=str, default=None, choices=sorted(LINFTY_FAMILY_LIST))
            elif flag == 'dgla':
                sub.add_argument('--dgla', type=str, default=None, choices=sorted(DGLA_LIST))
            elif flag == 'star':
                sub.add_argument('--star', type=str, default=None, choices=['moyal'])
            elif flag == 'kind':
                sub.add_argument('--kind', type=str, default=None,
                                 choices=['polynomial', 'multivector', 'covector', 'operator', 'series'])
            else:
                sub.add_argument(f"--{flag}", type=str, default=None)
        if name == 'hochschild-d':
            sub.add_argument('--alternating', action='store_true', default=None)
        if name in ('moyal', 'parse'):
            sub.add_argument('--json_values', action='store_true', default=None,
                             help='write values as exact JSON term lists instead of text')
    return parser


def load_inputs(args):
    args_dict = vars(args)
    try:
        config = load_config(args_dict['cfg'])
    except OSError as e:
        raise UsageError(f"cannot read --cfg {args_dict['cfg']}: {e.strerror}") from e
    except yaml.YAMLError as e:
        raise ParseError(f"--cfg {args_dict['cfg']} is not valid YAML: {e}") from e
    if args_dict.get('file'):
        try:
            with open(args_dict['file'], 'r') as f:
                values = json.load(f)
        except OSError as e:
            raise UsageError(f"cannot read --file {args_dict['file']}: {e.strerror}") from e
        except json.JSONDecodeError as e:
            raise ParseError(f"--file {args_dict['file']} is not valid JSON: {e.msg}", e.doc, e.pos) from e
        if not isinstance(values, dict):
            raise UsageError(f"--file {args_dict['file']} must hold a JSON object of flag values")
        config = merge_config(config, values)
    return merge_config(config, args_dict)


def main(argv=None):
    args = build_parser().parse_args(argv)
    logger = Logger(verbose=bool(args.verbose))
    try:
        cfg = load_inputs(args)
        logger_kwargs = {}
        if cfg.get('output_dir'):
            logger_kwargs = setup_logger_kwargs(cfg['exp_name'], cfg['output_dir'], cfg.get('seed'))
        logger = Logger(verbose=bool(cfg.get('verbose')), **logger_kwargs)
        logger.log(f">> Running {cfg['command']}")
        logger.save_config(cfg)
        inputs = Inputs(cfg)
        logger.log_dict({'order': inputs.order, 'dim': inputs.dim}, 'cyan')
        payload, passed = COMMAND_LIST[cfg['command']](inputs, logger)
    except ParseError as e:
        logger.log(f">> Parse error: {e}", 'red')
        return e.exit_code
    except DQError as e:
        logger.log(f">> {type(e).__name__}: {e}", 'red')
        return e.exit_code

    print(dumps(payload))
    logger.add_eval_results({'command': cfg['command'], 'passed': passed}, records=payload)
    logger.save_eval_results()
    if passed is False:
        logger.log(f">> {cfg['command']} failed", 'yellow')
        return EXIT_CHECK_FAILED
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
