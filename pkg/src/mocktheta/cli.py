# mocktheta
#
# Copyright (C) 2026 The mocktheta authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import argparse
import csv
import enum
import json
import logging
import math
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, NoReturn, Optional, Sequence, TextIO

import numpy as np

from . import asymptotics, jets, verify
from .errors import DomainError, MockThetaError, NonConvergence, QuadratureFailure
from .euler import euler_numbers
from .qseries import AlphaPoint, Form, RootOfUnity, SeriesId, eval_at_root, eval_G, eval_phi, eval_psi
from .quadrature import QuadratureConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3
EXIT_VERIFICATION = 4

SERIES_TOLERANCE = 1e-10
MAX_COEFFICIENT_INDEX = 16
VALUE_OPTIONS = ('--A', '--root', '--alpha')


class Status(enum.Enum):
    OK = 'OK'
    NONCONVERGENT = 'NONCONVERGENT'
    DOMAIN_ERROR = 'DOMAIN_ERROR'
    FAILED = 'FAILED'


class RecordEncoder(json.JSONEncoder):
    def default(self, obj: Any) -> Any:
        if isinstance(obj, enum.Enum):
            return obj.value
        elif isinstance(obj, Fraction):
            return str(obj)
        elif isinstance(obj, complex):
            return [_decimal(obj.real), _decimal(obj.imag)]
        else:
            return super().default(obj)


def _decimal(x: float) -> str:
    return format(x, '.17g')


FIELDS = ('command', 'inputs', 'value_re', 'value_im', 'exact', 'error_estimate', 'status')


@dataclass
class OutputRecord:
    """One line of output

    The value fields are None whenever status is not OK, apart from FAILED
    verification checks, which keep the measured value.
    """
    command: str
    inputs: Dict[str, str] = field(default_factory=dict)
    value_re: Optional[str] = None
    value_im: Optional[str] = None
    exact: Optional[str] = None
    error_estimate: Optional[str] = None
    status: Status = Status.OK

    @classmethod
    def of_value(cls, command: str, inputs: Dict[str, object], value: complex, error_estimate: float = 0.0,
                 exact: Optional[object] = None, status: Status = Status.OK) -> 'OutputRecord':
        value = complex(value)
        return cls(command, {k: str(v) for k, v in inputs.items()}, _decimal(value.real), _decimal(value.imag),
                   None if exact is None else str(exact), _decimal(error_estimate), status)

    @classmethod
    def of_error(cls, command: str, inputs: Dict[str, object], status: Status) -> 'OutputRecord':
        return cls(command, {k: str(v) for k, v in inputs.items()}, status=status)

    def as_dict(self) -> Dict[str, Any]:
        return {name: getattr(self, name) for name in FIELDS}


class RecordWriter:
    """Writes records as JSON lines or as CSV with a single header"""
    def __init__(self, stream: TextIO, fmt: str):
        self.stream = stream
        self.fmt = fmt
        self.csv_writer: Optional[csv.DictWriter] = None

    def write(self, record: OutputRecord) -> None:
        if self.fmt == 'json':
            self.stream.write(json.dumps(record.as_dict(), cls=RecordEncoder, sort_keys=False) + '\n')
            return

        if self.csv_writer is None:
            self.csv_writer = csv.DictWriter(self.stream, FIELDS, lineterminator='\n')
            self.csv_writer.writeheader()
        row = record.as_dict()
        row['inputs'] = ';'.join(f'{k}={v}' for k, v in record.inputs.items())
        row['status'] = record.status.value
        self.csv_writer.writerow({k: '' if v is None else v for k, v in row.items()})


class ArgumentParser(argparse.ArgumentParser):
    # usage errors exit with 1, leaving 2 for domain errors
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')


def parse_rational(text: str) -> Fraction:
    """Parse 'a/b' or 'a' exactly"""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f'not a rational number: {text!r}') from exc


def parse_root(text: str) -> RootOfUnity:
    match = re.fullmatch(r'\s*(-?\d+)\s*/\s*(\d+)\s*', text)
    if match is None:
        raise argparse.ArgumentTypeError(f'a root of unity is written l/N, not {text!r}')
    numerator, denominator = int(match.group(1)), int(match.group(2))
    if denominator == 0:
        raise argparse.ArgumentTypeError('a root of unity needs a positive order')
    return RootOfUnity(numerator, denominator)


def parse_complex(text: str) -> complex:
    """Parse a decimal complex number written like 1.5, 0.3-2i or 2i"""
    try:
        return complex(text.strip().replace(' ', '').replace('i', 'j'))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f'not a complex number: {text!r}') from exc


def parse_k_range(text: str) -> range:
    match = re.fullmatch(r'\s*(\d+)\s*:\s*(\d+)\s*', text)
    if match is None:
        raise argparse.ArgumentTypeError(f'a k range is written a:b, not {text!r}')
    first, last = int(match.group(1)), int(match.group(2))
    if first < 1 or last < first:
        raise argparse.ArgumentTypeError(f'empty or non-positive k range {text!r}')
    return range(first, last + 1)


def parse_series(text: str) -> SeriesId:
    try:
        return SeriesId[text.upper()]
    except KeyError as exc:
        raise argparse.ArgumentTypeError(f'unknown series {text!r}') from exc


def cmd_eval(args: argparse.Namespace, writer: RecordWriter) -> int:
    series: SeriesId = args.series
    form = Form(args.form)
    tol = SERIES_TOLERANCE if args.tol is None else args.tol
    if args.root is not None:
        inputs: Dict[str, object] = {'series': series.value, 'root': args.root}
        value = eval_at_root(series, args.root)
        writer.write(OutputRecord.of_value('eval', inputs, value))
        return EXIT_OK

    inputs = {'series': series.value, 'alpha': args.alpha, 'form': form.value, 'tol': tol}
    p = AlphaPoint(args.alpha)
    if series is SeriesId.F:
        raise DomainError('F is evaluated only at roots of unity')
    elif series is SeriesId.G:
        value = eval_G(p, tol)
    elif series is SeriesId.PHI:
        value = eval_phi(p, form, tol)
    else:
        value = eval_psi(p, form, tol)
    writer.write(OutputRecord.of_value('eval', inputs, value, tol))
    return EXIT_OK


def cmd_coeffs(args: argparse.Namespace, writer: RecordWriter) -> int:
    table = euler_numbers(max(args.n_max, 1))
    for n in range(args.n_max + 1):
        inputs: Dict[str, object] = {'kind': args.kind, 'n': n}
        if args.kind == 'a':
            exact: object = asymptotics.coeff_a(n, table)
            value = complex(float(exact))
        else:
            A = {'b': -1, 'c': -5}.get(args.kind, args.A)
            if args.kind == 'aA':
                inputs['A'] = A
            exact = asymptotics.coeff_aA(n, A, table)
            value = complex(exact)
        writer.write(OutputRecord.of_value('coeffs', inputs, value, exact=exact))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, writer: RecordWriter) -> int:
    cfg = None if args.tol is None else QuadratureConfig(tolerance=args.tol)
    checks = verify.run_suite(args.suite, k_max=args.k_max, n_max=args.n_max, samples=args.samples, seed=args.seed,
                              cfg=cfg)
    for check in checks:
        inputs = {'suite': check.suite, 'check': check.name, **check.inputs, 'bound': check.bound}
        status = Status.OK if check.passed else Status.FAILED
        writer.write(OutputRecord.of_value('verify', inputs, check.value, status=status))

    passed = sum(check.passed for check in checks)
    verdict = 'PASS' if passed == len(checks) else 'FAIL'
    summary = f'{verdict} {passed}/{len(checks)}'
    if writer.fmt == 'json':
        writer.stream.write(summary + '\n')
    else:
        sys.stderr.write(summary + '\n')
    return EXIT_OK if verdict == 'PASS' else EXIT_VERIFICATION


def _asymptotic_rows(args: argparse.Namespace, writer: RecordWriter) -> int:
    if args.series is SeriesId.PHI:
        exact_of, expansion_of, modulus = asymptotics.phi_root_normalized, asymptotics.phi_root_asymptotic, 2
    elif args.series is SeriesId.PSI:
        exact_of, expansion_of, modulus = asymptotics.psi_root_normalized, asymptotics.psi_root_asymptotic, 4
    else:
        raise DomainError(f'no expansion at roots of unity for {args.series.value}')

    ms: List[int] = []
    errors: List[float] = []
    for k in args.k_range:
        m = modulus * k + (1 if args.series is SeriesId.PHI else 0)
        inputs: Dict[str, object] = {'series': args.series.value, 'k': k, 'm': m, 'order': args.order}
        expansion = expansion_of(k, args.order)
        if args.compare:
            error = abs(exact_of(k) - expansion)
            ms.append(m)
            errors.append(error)
            writer.write(OutputRecord.of_value('expand', inputs, expansion, error))
        else:
            writer.write(OutputRecord.of_value('expand', inputs, expansion))

    if args.compare and len(ms) >= 2 and all(e > 0 for e in errors):
        slope = -float(np.polyfit(np.log(ms), np.log(errors), 1)[0])
        inputs = {'series': args.series.value, 'fit': 'decay exponent', 'order': args.order}
        writer.write(OutputRecord.of_value('expand', inputs, slope))
    return EXIT_OK


def cmd_expand(args: argparse.Namespace, writer: RecordWriter) -> int:
    if args.order < 0:
        raise DomainError(f'expansion order must be non-negative, not {args.order}')
    if args.asymptotic:
        return _asymptotic_rows(args, writer)

    expansion = jets.radial_expansion(args.series, args.root, args.order)
    for n, coefficient in enumerate(expansion.coeffs):
        inputs = {'series': args.series.value, 'root': args.root, 'n': n}
        exact = None
        if args.series is SeriesId.PHI and args.root.denominator == 1:
            exact = asymptotics.coeff_a(n) / math.factorial(n)
        writer.write(OutputRecord.of_value('expand', inputs, coefficient, exact=exact))
    return EXIT_OK


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='mocktheta', description='Mock theta functions φ and ψ near the unit circle')
    parser.add_argument('--format', choices=('json', 'csv'), default='json', help='output format')
    parser.add_argument('--debug', action='store_true', help='log debugging information to stderr')
    subparsers = parser.add_subparsers(dest='command', required=True)

    def common(sub: argparse.ArgumentParser) -> None:
        # accepted after the subcommand as well
        sub.add_argument('--format', choices=('json', 'csv'), default=argparse.SUPPRESS, help='output format')
        sub.add_argument('--tol', type=float, default=None, help='tolerance')
        sub.add_argument('--debug', action='store_true', default=argparse.SUPPRESS)

    sub = subparsers.add_parser('eval', help='evaluate a series')
    common(sub)
    sub.add_argument('--series', type=parse_series, required=True, help='F, G, phi or psi')
    where = sub.add_mutually_exclusive_group(required=True)
    where.add_argument('--alpha', type=parse_complex, help='q = e^{-α}, Re α > 0')
    where.add_argument('--root', type=parse_root, help='a root of unity l/N')
    sub.add_argument('--form', choices=[f.value for f in Form], default=Form.EULERIAN.value)
    sub.set_defaults(handler=cmd_eval)

    sub = subparsers.add_parser('coeffs', help='tabulate expansion coefficients')
    common(sub)
    sub.add_argument('--kind', choices=('a', 'b', 'c', 'aA'), required=True)
    sub.add_argument('--n-max', type=int, required=True, choices=range(MAX_COEFFICIENT_INDEX + 1), metavar='N')
    sub.add_argument('--A', type=parse_rational, default=None, help='rational A for --kind aA')
    sub.set_defaults(handler=cmd_coeffs)

    sub = subparsers.add_parser('verify', help='run a verification suite')
    common(sub)
    sub.add_argument('--suite', choices=sorted(verify.SUITES), required=True)
    sub.add_argument('--k-max', type=int, default=None)
    sub.add_argument('--n-max', type=int, default=None)
    sub.add_argument('--samples', type=int, default=None)
    sub.add_argument('--seed', type=int, default=None)
    sub.set_defaults(handler=cmd_verify)

    sub = subparsers.add_parser('expand', help='radial and asymptotic expansions')
    common(sub)
    sub.add_argument('--series', type=parse_series, required=True, help='G, phi or psi')
    sub.add_argument('--root', type=parse_root, default=None)
    sub.add_argument('--order', type=int, required=True)
    sub.add_argument('--asymptotic', action='store_true', help='expand at ζ_m as m grows')
    sub.add_argument('--k-range', type=parse_k_range, default=None)
    sub.add_argument('--compare', action='store_true', help='also report the error against the exact value')
    sub.set_defaults(handler=cmd_expand)

    return parser


def _status_for(exc: MockThetaError) -> Status:
    if isinstance(exc, (NonConvergence, QuadratureFailure)):
        return Status.NONCONVERGENT
    return Status.DOMAIN_ERROR


def _inputs_of(args: argparse.Namespace) -> Dict[str, object]:
    skip = {'handler', 'command', 'format', 'debug'}
    inputs: Dict[str, object] = {}
    for key, value in sorted(vars(args).items()):
        if key in skip or value is None or value is False:
            continue
        inputs[key] = value.value if isinstance(value, enum.Enum) else value
    return inputs


def _check_combinations(parser: ArgumentParser, args: argparse.Namespace) -> None:
    if args.command == 'coeffs' and args.kind == 'aA' and args.A is None:
        parser.error('--kind aA needs --A')
    if args.command == 'expand':
        if args.asymptotic and args.k_range is None:
            parser.error('--asymptotic needs --k-range')
        if not args.asymptotic and args.root is None:
            parser.error('expand needs --root or --asymptotic')


def _attach_values(argv: Sequence[str]) -> List[str]:
    # argparse reads '--A -5/1' or '--root -1/4' as two options
    attached: List[str] = []
    for arg in argv:
        if attached and attached[-1] in VALUE_OPTIONS and arg.startswith('-') and arg[1:2].isdigit():
            attached[-1] = f'{attached[-1]}={arg}'
        else:
            attached.append(arg)
    return attached


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_attach_values(sys.argv[1:] if argv is None else argv))
    _check_combinations(parser, args)
    logging.basicConfig(stream=sys.stderr, format='%(name)s: %(message)s',
                        level=logging.DEBUG if args.debug else logging.WARNING)
    writer = RecordWriter(sys.stdout, args.format)

    try:
        return args.handler(args, writer)
    except MockThetaError as exc:
        status = _status_for(exc)
        logger.warning('%s: %s', args.command, exc)
        writer.write(OutputRecord.of_error(args.command, _inputs_of(args), status))
        return EXIT_CONVERGENCE if status is Status.NONCONVERGENT else EXIT_DOMAIN

