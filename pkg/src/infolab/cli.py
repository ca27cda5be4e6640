"""Command-line front end.

Subcommands: ``measure {shannon|bz}``, ``qubit info-vector``, ``evolve``,
``efficiency {sweep|thresholds|figures}``, ``entangle {icorr|check}`` and
``verify``.

Conventions:

* primary results go to stdout, one line; diagnostics (n/k, per-direction
  detail, drift) go to stderr;
* exit code 0 on success, 2 on usage errors (unknown subcommand, malformed
  vectors or probabilities, out-of-range efficiency), 1 on computation or
  I/O errors; every error is a single stderr line starting with ``error:``;
* values are printed as ``round(value, precision)`` (``--precision``,
  default 6); CSV files use 12-significant-digit formatting and are byte
  stable for identical invocations;
* single-qubit states are Bloch triples ``rx,ry,rz`` or named states
  (``plus-x`` ... ``minus-z``, ``mixed``); two-qubit states are
  ``bell:{phi+,phi-,psi+,psi-}``, ``werner:W`` or ``product:S1;S2``;
* direction vectors are rescaled to unit length, so ``--d1 1,1,0`` works;
* ``INFOLAB_SEED`` overrides the default seed (42) wherever randomness is
  used; ``--seed`` overrides both.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _svg
from . import efficiency as eff
from .entanglement import (
    TwoQubitState,
    bell_state,
    i_corr,
    info_condition_entangled,
    product_state,
    werner_state,
)
from .infospace import (
    Hamiltonian,
    conservation_check,
    evolve,
    info_vector,
    total_information,
)
from .measures import evaluate_measure
from .states import (
    CANONICAL_TRIAD,
    Direction,
    MeasurementTriad,
    QubitState,
    density_from_bloch,
    named_state,
)
from .verify import DEFAULT_SEED, run_all

PROG = "infolab"


class UsageError(Exception):
    """Bad invocation: unknown command or malformed user input (exit 2)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse errors through our exit scheme
        raise UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation: subcommand name, parsed flags, output, seed,
    display precision (>= 1)."""

    subcommand: str
    args: argparse.Namespace
    out: str | None
    seed: int
    precision: int

    def __post_init__(self):
        if self.precision < 1:
            raise UsageError(f"precision must be >= 1, got {self.precision}")


def _fmt(value: float, precision: int) -> str:
    return str(round(float(value), precision) + 0.0)  # + 0.0 folds -0.0 into 0.0


def _fmt_vector(values, precision: int) -> str:
    return ",".join(_fmt(v, precision) for v in values)


def _csv_cell(value: float) -> str:
    return f"{value:.12g}"


def _parse_floats(text: str, count: int | None, what: str) -> np.ndarray:
    try:
        values = np.array([float(part) for part in text.split(",")])
    except ValueError:
        raise UsageError(f"malformed {what} {text!r}: expected comma-separated numbers")
    if count is not None and values.size != count:
        raise UsageError(f"{what} {text!r} must have {count} components")
    return values


def _parse_state(text: str) -> QubitState:
    if "," not in text:
        try:
            return named_state(text)
        except ValueError as err:
            raise UsageError(str(err))
    try:
        return density_from_bloch(_parse_floats(text, 3, "state"))
    except ValueError as err:
        raise UsageError(str(err))


def _parse_two_qubit_state(text: str) -> TwoQubitState:
    kind, _, rest = text.partition(":")
    try:
        if kind == "bell":
            return bell_state(rest)
        if kind == "werner":
            try:
                weight = float(rest)
            except ValueError:
                raise UsageError(f"malformed Werner weight {rest!r}")
            return werner_state(weight)
        if kind == "product":
            first, sep, second = rest.partition(";")
            if not sep:
                raise UsageError("product state needs two parts: product:S1;S2")
            return product_state(_parse_state(first), _parse_state(second))
    except ValueError as err:
        raise UsageError(str(err))
    raise UsageError(
        f"unknown two-qubit state {text!r} (use bell:KIND, werner:W or product:S1;S2)"
    )


def _parse_direction(text: str, what: str) -> Direction:
    try:
        return Direction.normalized(_parse_floats(text, 3, what))
    except ValueError as err:
        raise UsageError(str(err))


def _parse_triad(text: str) -> MeasurementTriad:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError("triad must be three colon-separated vectors, e.g. 1,0,0:0,1,0:0,0,1")
    try:
        return MeasurementTriad(*(_parse_direction(part, "triad direction") for part in parts))
    except ValueError as err:
        raise UsageError(str(err))


def _parse_times(text: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError("times must be start:stop:step, e.g. 0:10:0.1")
    try:
        start, stop, step = (float(part) for part in parts)
    except ValueError:
        raise UsageError(f"malformed times {text!r}")
    if step <= 0.0 or stop < start:
        raise UsageError(f"times {text!r} must have stop >= start and step > 0")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(count)


def _write_text(path: str | None, content: str) -> None:
    if path is None:
        sys.stdout.write(content)
    else:
        Path(path).write_text(content, encoding="utf-8", newline="")


def _csv(header, columns) -> str:
    lines = [",".join(header)]
    for row in zip(*columns):
        lines.append(",".join(_csv_cell(v) for v in row))
    return "\n".join(lines) + "\n"


# -- subcommand handlers -----------------------------------------------------


def _cmd_measure(config: RunConfig) -> int:
    probs = _parse_floats(config.args.probs, None, "probabilities")
    try:
        result = evaluate_measure(config.args.kind, probs)
    except ValueError as err:
        raise UsageError(str(err))
    print(_fmt(result.value, config.precision))
    print(f"n={result.n} k={_fmt(result.k, config.precision)}", file=sys.stderr)
    return 0


def _cmd_info_vector(config: RunConfig) -> int:
    state = _parse_state(config.args.state)
    triad = _parse_triad(config.args.triad) if config.args.triad else CANONICAL_TRIAD
    iv = info_vector(state, triad)
    print(_fmt_vector((iv.i1, iv.i2, iv.i3), config.precision))
    print(f"I_total={_fmt(total_information(iv), config.precision)}", file=sys.stderr)
    return 0


def _cmd_evolve(config: RunConfig) -> int:
    args = config.args
    state = _parse_state(args.state)
    try:
        h = Hamiltonian.from_pauli_coefficients(
            _parse_floats(args.hamiltonian, 3, "hamiltonian")
        )
    except ValueError as err:
        raise UsageError(str(err))
    triad = _parse_triad(args.triad) if args.triad else CANONICAL_TRIAD
    evolved = evolve(state, h, args.t)

    if not args.report_conservation:
        print(_fmt_vector(evolved.bloch, config.precision))
        return 0

    if args.times is None:
        raise UsageError("--report-conservation requires --times start:stop:step")
    report = conservation_check(state, h, triad, _parse_times(args.times))
    vectors = [info_vector(evolve(state, h, t), triad) for t in report.times]
    i1 = np.array([v.i1 for v in vectors])
    i2 = np.array([v.i2 for v in vectors])
    i3 = np.array([v.i3 for v in vectors])
    totals = report.i_total_values
    if float(np.max(np.abs(i1 * i1 + i2 * i2 + i3 * i3 - totals))) > 1e-12:
        raise ValueError("conservation CSV failed self-validation")
    content = _csv(("t", "i1", "i2", "i3", "I_total"), (report.times, i1, i2, i3, totals))
    _write_text(args.out, content)
    if args.out is not None:
        print(_fmt_vector(evolved.bloch, config.precision))
    print(f"max_drift={report.max_drift:.3e}", file=sys.stderr)
    return 0


def _sweep_or_usage(eta_min: float, eta_max: float, steps: int) -> eff.SweepTable:
    try:
        table = eff.ratio_sweep(eta_min, eta_max, steps)
    except ValueError as err:
        raise UsageError(str(err))
    table.validate()  # never emit a CSV that violates its own row identities
    return table


def _cmd_efficiency_sweep(config: RunConfig) -> int:
    args = config.args
    table = _sweep_or_usage(args.min, args.max, args.steps)
    _write_text(args.out, _csv(eff.SweepTable.HEADER, table.columns()))
    return 0


def _cmd_efficiency_thresholds(config: RunConfig) -> int:
    lo, hi = eff.thresholds()
    print(f"{_fmt(lo, config.precision)} {_fmt(hi, config.precision)}")
    return 0


def reproduce_figures(out_dir: str | Path) -> list[Path]:
    """Write fig1.csv/fig1.svg (ratio vs eta) and fig2.csv/fig2.svg (Shannon
    uncertainties vs eta) into ``out_dir``; returns the four paths.

    Both CSVs are derived from a validated 201-point sweep of [0, 1]; output
    is byte stable for fixed inputs.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    table = _sweep_or_usage(0.0, 1.0, 201)
    lo, hi = eff.thresholds()

    fig1_csv = out / "fig1.csv"
    fig1_svg = out / "fig1.svg"
    fig2_csv = out / "fig2.csv"
    fig2_svg = out / "fig2.svg"

    fig1_csv.write_text(_csv(("eta", "ratio"), (table.eta, table.ratio)), encoding="utf-8", newline="")
    fig1_svg.write_text(
        _svg.line_chart(
            title="Quadratic information total over capacity",
            x_label="eta",
            y_label="I_total / k",
            series=[("I_total / k", table.eta, table.ratio)],
            h_lines=(1.0,),
            v_lines=(lo, hi),
            points=((lo, 1.0, f"{lo:.2f}"), (hi, 1.0, f"{hi:.2f}")),
        ),
        encoding="utf-8",
        newline="",
    )
    fig2_csv.write_text(
        _csv(("eta", "Hx", "Hy"), (table.eta, table.hx, table.hy)), encoding="utf-8", newline=""
    )
    fig2_svg.write_text(
        _svg.line_chart(
            title="Shannon uncertainty per direction",
            x_label="eta",
            y_label="bits",
            series=[("Hx", table.eta, table.hx), ("Hy = Hz", table.eta, table.hy)],
            points=(
                (0.5, 1.0, "(1/2, 1)"),
                (2.0 / 3.0, float(np.log2(3.0)), "(2/3, log2 3)"),
            ),
        ),
        encoding="utf-8",
        newline="",
    )
    return [fig1_csv, fig1_svg, fig2_csv, fig2_svg]


def _cmd_efficiency_figures(config: RunConfig) -> int:
    for path in reproduce_figures(config.args.out_dir):
        print(f"wrote {path}", file=sys.stderr)
    return 0


def _cmd_entangle_icorr(config: RunConfig) -> int:
    args = config.args
    state = _parse_two_qubit_state(args.state)
    result = i_corr(state, _parse_direction(args.d1, "d1"), _parse_direction(args.d2, "d2"))
    print(_fmt(result.total_bits, config.precision))
    print(
        f"E1={_fmt(result.correlations[0], config.precision)} "
        f"E2={_fmt(result.correlations[1], config.precision)} "
        f"I1={_fmt(result.info_bits[0], config.precision)} "
        f"I2={_fmt(result.info_bits[1], config.precision)}",
        file=sys.stderr,
    )
    return 0


def _cmd_entangle_check(config: RunConfig) -> int:
    state = _parse_two_qubit_state(config.args.state)
    entangled, result = info_condition_entangled(state)
    print(f"{str(entangled).lower()} {_fmt(result.total_bits, config.precision)}")
    print(
        f"d1={_fmt_vector(result.d1.vec, config.precision)} "
        f"d2={_fmt_vector(result.d2.vec, config.precision)}",
        file=sys.stderr,
    )
    return 0


def _cmd_verify(config: RunConfig) -> int:
    results = run_all(config.seed)
    failures = 0
    for check in results:
        if check.passed:
            print(f"PASS {check.name}: {check.detail}")
        else:
            failures += 1
            print(f"FAIL {check.name}: {check.detail}")
    print(f"{len(results) - failures}/{len(results)} properties passed (seed {config.seed})")
    return 0 if failures == 0 else 1


# -- parser ------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog=PROG, description="Information measures for qubit experiments")
    parser.add_argument("--seed", type=int, default=None, help="override INFOLAB_SEED")
    parser.add_argument(
        "--precision", type=int, default=6, help="decimal places for printed values"
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    measure = sub.add_parser("measure", help="evaluate an information measure")
    measure.add_argument("kind", choices=("shannon", "bz"))
    measure.add_argument("--probs", required=True, help="comma-separated probabilities")
    measure.set_defaults(handler=_cmd_measure)

    qubit = sub.add_parser("qubit", help="single-qubit utilities")
    qubit_sub = qubit.add_subparsers(dest="qubit_command", required=True)
    ivec = qubit_sub.add_parser("info-vector", help="information vector of a state")
    ivec.add_argument("--state", required=True)
    ivec.add_argument("--triad", default=None, help="three colon-separated directions")
    ivec.set_defaults(handler=_cmd_info_vector)

    ev = sub.add_parser("evolve", help="unitary evolution under h.sigma")
    ev.add_argument("--state", required=True)
    ev.add_argument("--hamiltonian", required=True, help="Pauli coefficients hx,hy,hz")
    ev.add_argument("--t", type=float, required=True, help="evolution time (hbar = 1)")
    ev.add_argument("--triad", default=None)
    ev.add_argument("--report-conservation", action="store_true")
    ev.add_argument("--times", default=None, help="start:stop:step grid for the report")
    ev.add_argument("--out", default=None, help="CSV destination (default stdout)")
    ev.set_defaults(handler=_cmd_evolve)

    effp = sub.add_parser("efficiency", help="non-ideal detection model")
    eff_sub = effp.add_subparsers(dest="efficiency_command", required=True)
    sweep = eff_sub.add_parser("sweep", help="tabulate the model over an eta grid")
    sweep.add_argument("--min", type=float, default=0.0)
    sweep.add_argument("--max", type=float, default=1.0)
    sweep.add_argument("--steps", type=int, default=201)
    sweep.add_argument("--out", default=None, help="CSV destination (default stdout)")
    sweep.set_defaults(handler=_cmd_efficiency_sweep)
    thresh = eff_sub.add_parser("thresholds", help="where I_total/k crosses 1")
    thresh.set_defaults(handler=_cmd_efficiency_thresholds)
    figures = eff_sub.add_parser("figures", help="write the two reference charts")
    figures.add_argument("--out-dir", required=True)
    figures.set_defaults(handler=_cmd_efficiency_figures)

    entangle = sub.add_parser("entangle", help="two-qubit correlation information")
    ent_sub = entangle.add_subparsers(dest="entangle_command", required=True)
    icorr = ent_sub.add_parser("icorr", help="i_corr for a direction pair")
    icorr.add_argument("--state", required=True)
    icorr.add_argument("--d1", required=True)
    icorr.add_argument("--d2", required=True)
    icorr.set_defaults(handler=_cmd_entangle_icorr)
    check = ent_sub.add_parser("check", help="information condition for entanglement")
    check.add_argument("--state", required=True)
    check.set_defaults(handler=_cmd_entangle_check)

    verify = sub.add_parser("verify", help="run the full invariant suite")
    verify.set_defaults(handler=_cmd_verify)

    return parser


# flags whose single value may start with "-" (negative vector components);
# folded into --flag=value form so argparse does not mistake them for options
_VALUE_FLAGS = frozenset(
    {"--probs", "--state", "--d1", "--d2", "--hamiltonian", "--triad", "--times"}
)


def _merge_value_flags(argv) -> list[str]:
    merged = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_FLAGS and i + 1 < len(argv):
            merged.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            merged.append(token)
            i += 1
    return merged


def _resolve_seed(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get("INFOLAB_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"INFOLAB_SEED must be an integer, got {env!r}")
    return DEFAULT_SEED


def parse_and_dispatch(argv) -> int:
    """Parse argv and run the selected subcommand, mapping errors to exit codes."""
    parser = build_parser()
    try:
        args = parser.parse_args(_merge_value_flags(argv))
        config = RunConfig(
            subcommand=args.subcommand,
            args=args,
            out=getattr(args, "out", None),
            seed=_resolve_seed(args.seed),
            precision=args.precision,
        )
        return args.handler(config)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(parse_and_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
