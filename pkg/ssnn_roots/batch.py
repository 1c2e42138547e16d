"""
Batch runs: read records, run one command per record, collect reports.

Records are processed by a worker pool and reassembled in input order.
Errors in one record are embedded in its report and never stop the batch.
"""
import csv
import io
import json
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Optional

from rest_framework.exceptions import ValidationError

from ssnn_roots import __version__
from ssnn_roots.analysis import (
    BOUND_SQUARED,
    dim45_containment,
    norm_check,
    norm_radius,
    quartic_analysis,
    quartic_delta,
    real_strip_check,
    strip_check,
)
from ssnn_roots.catalog import ssnn_root_set_contains
from ssnn_roots.certify import certify_real_strip
from ssnn_roots.exceptions import ParseError, SsnnRootsError
from ssnn_roots.logging import logging_batch_step
from ssnn_roots.poly_core import check_functional_equation, from_delta, validate_delta
from ssnn_roots.radicals import ExactQuadraticRoots
from ssnn_roots.realize import construct, solve_parameter, verify_factorization
from ssnn_roots.roots import SolverConfig, classify_roots, find_roots
from ssnn_roots.serializers import (
    DeltaRecordSerializer,
    QuarticAnalysisSerializer,
    RealizationPlanSerializer,
    RunReportSerializer,
)
from ssnn_roots.utils import parse_rational, rational_to_str, utc_now, working_context
from ssnn_roots.verdicts import HALF_STRIP, STRIP_KINDS, strip_bounds

LOG = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
ERROR = "error"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

CHECK_STRIP = "strip"
CHECK_NORM = "norm"
CHECK_FUNCTIONAL_EQUATION = "functional-equation"
CHECK_REAL_STRIP = "real-strip"
CHECKS = (CHECK_STRIP, CHECK_NORM, CHECK_FUNCTIONAL_EQUATION, CHECK_REAL_STRIP)

PUBLISHED_TOLERANCE = 1e-6

# (b, c) = (0, 41) in degree 5 meets the real-part bound with equality.
AGREEMENT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class BatchOptions:
    solver: SolverConfig = field(default_factory=SolverConfig)
    checks: tuple = (CHECK_STRIP,)
    strip: str = HALF_STRIP
    jobs: int = 1


@dataclass(frozen=True)
class BatchRecord:
    """
    One unit of work. `payload` is what the command reads; `error` is set when
    the input line could not be read.
    """
    seq: int
    payload: dict
    line: Optional[int] = None
    error: Optional[Exception] = None

    @property
    def delta(self):
        return self.payload['delta']


@dataclass
class RunReport:
    seq: int
    command: str
    status: str
    descriptor: dict
    polynomial: object = None
    precision: Optional[int] = None
    backend: str = ""
    root_set: object = None
    checks: list = field(default_factory=list)
    results: dict = field(default_factory=dict)
    error: Optional[dict] = None
    elapsed_seconds: float = 0.0
    started: object = None
    version: str = __version__

    @property
    def label(self):
        return self.descriptor.get('label', '')


def _jsonable(value):
    if isinstance(value, Fraction):
        return rational_to_str(value)
    if isinstance(value, dict):
        return {key: _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)) or hasattr(value, 'entries'):
        return [_jsonable(item) for item in value]
    return value


def _read_line(text):
    if text.startswith('{'):
        try:
            return json.loads(text)
        except ValueError as error:
            raise ParseError("invalid JSON: {}".format(error))
    return {'delta': next(csv.reader([text]))}


def parse_records(lines):
    """
    Records from JSON-lines ({"delta": ["1", "0", "14", ...]}) or bare CSV lines.

    Blank lines and lines starting with # are skipped.
    """
    seq = 0
    for number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith('#'):
            continue
        seq += 1
        try:
            data = _read_line(text)
            serializer = DeltaRecordSerializer(data=data)
            if not serializer.is_valid():
                raise ParseError(serializer.errors)
            payload = dict(serializer.validated_data)
            yield BatchRecord(seq=seq, payload=payload, line=number)
        except ParseError as error:
            error.line = number
            yield BatchRecord(seq=seq, payload={'raw': text}, line=number, error=error)


def make_records(payloads):
    return [BatchRecord(seq=seq, payload=payload) for seq, payload in enumerate(payloads, start=1)]


def _solve(p, options):
    return classify_roots(find_roots(p, options.solver))


def _delta_checks(delta, root_set, options):
    checks, results, passed = [], {}, True
    for check in options.checks:
        if check == CHECK_STRIP:
            checks.append(strip_check(root_set, delta.degree, options.strip))
        elif check == CHECK_NORM:
            checks.append(norm_check(root_set, delta.degree))
        elif check == CHECK_REAL_STRIP:
            checks.append(certify_real_strip(delta) if delta.symmetric else real_strip_check(root_set))
        elif check == CHECK_FUNCTIONAL_EQUATION:
            holds = check_functional_equation(root_set.polynomial)
            results['functional_equation'] = holds
            passed = passed and holds
    return checks, results, passed


def roots_action(record, options):
    root_set = _solve(from_delta(record.delta), options)
    results = {
        'real_roots': len(root_set.real_roots()),
        'conjugate_closed': root_set.is_conjugate_closed(),
    }
    return root_set, [], results, True


def verify_action(record, options):
    root_set = _solve(from_delta(record.delta), options)
    checks, results, passed = _delta_checks(record.delta, root_set, options)
    return root_set, checks, results, passed


def _closed_form_deviation(closed_form_roots, root_set):
    ctx = working_context(root_set.precision)
    expected = []
    for item in closed_form_roots:
        if isinstance(item, ExactQuadraticRoots):
            expected.extend(complex(z) for z in item.numeric(ctx))
        else:
            expected.append(complex(float(item)))
    return max(min(abs(root.value - z) for root in root_set.roots) for z in expected)


def catalog_action(record, options):
    root_set, checks, results, passed = verify_action(record, options)
    entry = record.payload['entry']
    if entry.closed_form_roots:
        results['closed_form_deviation'] = _closed_form_deviation(entry.closed_form_roots, root_set)
    if entry.degree in (2, 3):
        results['in_ssnn_root_set'] = all(ssnn_root_set_contains(entry.degree, root.value) for root in root_set)
    results['ehrhart_obstructions'] = list(entry.ehrhart_obstructions)
    return root_set, checks, results, passed


def counterexample_action(record, options):
    root_set, checks, results, passed = catalog_action(record, options)
    entry = record.payload['entry']
    distances = [min(abs(root.value - z) for root in root_set) for z in entry.published_roots]
    results['published_max_distance'] = max(distances)
    results['published_match'] = max(distances) <= PUBLISHED_TOLERANCE
    results['notes'] = list(entry.notes)
    return root_set, checks, results, passed


def realize_action(record, options):
    d = record.payload['d']
    solution = solve_parameter(d, record.payload['target'])
    results = {'target': _jsonable(solution.target), 'approximate': solution.approximate}
    delta = solution.delta
    if solution.a is None:
        results['boundary'] = solution.boundary
        passed = True
    else:
        plan = construct(d, solution.a)
        factorization = verify_factorization(plan)
        results.update(RealizationPlanSerializer(plan).data)
        results['factorization'] = factorization
        passed = factorization
    root_set = _solve(from_delta(delta), options)
    target = float(parse_rational(record.payload['target'])) if not solution.approximate else record.payload['target']
    distance = min(abs(root.value - target) for root in root_set)
    results['delta'] = [rational_to_str(entry) for entry in delta]
    results['numeric_distance'] = distance
    return root_set, [], results, passed and distance <= 1e-9


def quartic_action(record, options):
    payload = record.payload
    analysis = quartic_analysis(payload['b'], payload['c'], payload['d'])
    results = dict(QuarticAnalysisSerializer(analysis, context={'precision': 64}).data)
    if analysis.region == 'inadmissible':
        return None, [], results, False
    root_set = _solve(from_delta(quartic_delta(analysis.b, analysis.c, analysis.d)), options)
    containment = dim45_containment(root_set)
    bound = math.sqrt(float(BOUND_SQUARED[analysis.d]))
    worst = max((abs(float(root.re) + 0.5) - root.error_radius for root in root_set.nonreal_roots()), default=0.0)
    agrees = (worst <= bound + AGREEMENT_TOLERANCE) == analysis.passed
    results['find_roots_agrees'] = agrees
    return root_set, [containment], results, analysis.passed and agrees


ACTIONS = {
    'roots': roots_action,
    'verify': verify_action,
    'catalog': catalog_action,
    'counterexample': counterexample_action,
    'realize': realize_action,
    'quartic': quartic_action,
}


def _descriptor(record):
    payload = {key: value for key, value in record.payload.items() if key != 'entry'}
    if 'entry' in record.payload:
        payload['label'] = record.payload['entry'].label
    return _jsonable(payload)


def run_record(record, command, options):
    """
    Run one record, turning every failure into an error report.
    """
    started = utc_now()
    clock = time.monotonic()
    config = options.solver
    report = RunReport(seq=record.seq, command=command, status=ERROR, descriptor=_descriptor(record),
                       started=started, backend=config.backend)
    try:
        if record.error is not None:
            raise record.error
        root_set, checks, results, passed = ACTIONS[command](record, options)
        report.root_set = root_set
        report.checks = list(checks)
        report.results = _jsonable(results)
        if root_set is not None:
            report.polynomial = root_set.polynomial
            report.precision = root_set.precision
        report.status = PASS if passed and all(check.passed for check in checks) else FAIL
        logging_batch_step("info", "finished with status {}".format(report.status), **locals())
    except (ValidationError, SsnnRootsError, ArithmeticError, ValueError) as error:
        report.error = {
            'type': type(error).__name__,
            'detail': _jsonable(getattr(error, 'detail', None) or str(error)),
            'line': getattr(error, 'line', None) or record.line,
        }
        logging_batch_step("error", "record failed: {}".format(error), **locals())
    report.elapsed_seconds = time.monotonic() - clock
    return report


def run_batch(records, command, options=None):
    """
    Reports for `records`, in input order.
    """
    options = options or BatchOptions()
    if command not in ACTIONS:
        raise ValueError("unknown command {!r}".format(command))
    worker = partial(run_record, command=command, options=options)
    if options.jobs <= 1:
        return [worker(record) for record in records]
    with ThreadPoolExecutor(max_workers=options.jobs) as pool:
        return list(pool.map(worker, records))


def exit_code(reports):
    statuses = {report.status for report in reports}
    if ERROR in statuses:
        return EXIT_ERROR
    if FAIL in statuses:
        return EXIT_FAIL
    return EXIT_OK


def write_reports(reports, stream, fmt='jsonl'):
    """
    JSON-lines (one serialized report per line) or a flat CSV table.
    """
    if fmt == 'jsonl':
        for report in reports:
            stream.write(json.dumps(RunReportSerializer(report).data, default=str) + "\n")
        return
    writer = csv.writer(stream)
    writer.writerow(['seq', 'command', 'status', 'label', 'input', 'precision', 'roots', 'checks', 'error'])
    for report in reports:
        writer.writerow([
            report.seq,
            report.command,
            report.status,
            report.label,
            json.dumps(report.descriptor, default=str),
            report.precision or '',
            len(report.root_set) if report.root_set is not None else '',
            ";".join("{}:{}".format(check.kind, PASS if check.passed else FAIL) for check in report.checks),
            report.error['type'] if report.error else '',
        ])


def _boundary_rows(d, kinds, height):
    rows = []
    for kind in kinds:
        for name, value in zip(('lower', 'upper'), strip_bounds(d, kind)):
            for im in (-height, height):
                rows.append(("{}_{}".format(kind, name), "", float(value), im))
    radius = float(norm_radius(d))
    for step in range(65):
        angle = 2 * math.pi * step / 64
        rows.append(("norm_disk", "", -0.5 + radius * math.cos(angle), radius * math.sin(angle)))
    return rows


def emit_plot_data(reports, stream, d=None, kinds=(HALF_STRIP,)):
    """
    Tab separated scatter data: one row per root, then strip lines and the
    norm disk for degree d (taken from the reports when not given).
    """
    stream.write("series\tlabel\tre\tim\n")
    solved = [report for report in reports if report.root_set is not None]
    rows = []
    for report in solved:
        label = report.label or str(report.seq)
        rows.extend(("root", label, float(root.re), float(root.im)) for root in report.root_set)
    if d is None and solved:
        d = max(report.root_set.degree for report in solved)
    if d:
        height = max([abs(row[3]) for row in rows] + [1.0]) + 1
        rows.extend(_boundary_rows(d, [kind for kind in kinds if kind in STRIP_KINDS], height))
    for series, label, re, im in rows:
        stream.write("{}\t{}\t{!r}\t{!r}\n".format(series, label, re, im))
    return len(rows)


def random_symmetric_delta(rng, max_degree, allow_zero_head=False, bound=20):
    """
    Symmetric delta with entries p/q, 0 <= p <= bound, 1 <= q <= bound; delta_0 = 1
    unless allow_zero_head.
    """
    d = rng.randint(1, max_degree)
    while True:
        half = [Fraction(rng.randint(0, bound), rng.randint(1, bound)) for _ in range(d // 2 + 1)]
        if not allow_zero_head:
            half[0] = Fraction(1)
        if any(half):
            break
    entries = [half[min(i, d - i)] for i in range(d + 1)]
    return validate_delta(entries)


def reports_to_text(reports, fmt='jsonl'):
    buffer = io.StringIO()
    write_reports(reports, buffer, fmt)
    return buffer.getvalue()
