"""Command-line interface.

Subcommands
-----------
scatter   single-cell pmf after one or more diffusers, as CSV
gn        correlation report (exact, law-predicted, deep-cascade limit), as JSON
plimit    N-photon single-diffuser pmf vs. deep-cascade limit, CSV + JSON
mc        Monte Carlo run with jackknife error bars, CSV + JSON
figure    canned parameter recipes reproducing the standard plots

Settings come from an INI-style config file (``--config``, sections listed
below) with command-line flags taking precedence key by key.  Every output
file embeds the fully resolved configuration and the engine version, and
rerunning a command with the same resolved configuration reproduces the
output byte for byte (no timestamps, no machine identifiers).

Exit codes: 0 success, 2 configuration error, 3 numeric failure,
4 I/O failure.
"""

from __future__ import annotations

import argparse
import configparser
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .core import (
    Coherent,
    Custom,
    DimTooSmall,
    Fock,
    InputStateSpec,
    InvalidPmf,
    OutOfRange,
    Pmf,
    SqueezedCoherent,
    TailTooHeavy,
    Thermal,
    ZeroMass,
    ZeroMean,
    pmf_mean,
    total_variation,
)
from .combinatorics import approx_scatter_pmf, fock_scatter_pmf
from .inputs import input_pmf, thermal_pmf
from .montecarlo import MCConfig, empirical_report, run_mc
from .plimit import fock_pn_limit_pmf, gn_limit
from .transform import (
    cascade_pmf,
    correlation_report,
    g2_out_predicted,
    g3_out_predicted,
    scatter_pmf,
)

__all__ = ["ConfigError", "main"]

_ENGINE = {"name": "rggstats", "version": __version__}

FIGURES = ("fig2", "fig3a", "fig3b", "fig3c", "fig3d", "fig5a", "fig5b")


class ConfigError(Exception):
    """Bad or missing configuration; maps to exit code 2."""


_REQUIRED = object()


def _parse_bool(raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {raw!r}")


def _parse_int(raw: str) -> int:
    return int(raw.strip(), 10)


def _load_config(path: str | None) -> configparser.ConfigParser | None:
    if path is None:
        return None
    file = Path(path)
    if not file.is_file():
        raise ConfigError(f"config file not found: {path}")
    parser = configparser.ConfigParser()
    try:
        with file.open(encoding="utf-8") as handle:
            parser.read_file(handle)
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse config file {path}: {exc}") from exc
    return parser


_KNOWN_KEYS = {
    "input": {
        "kind", "n", "mean", "alpha_mag", "alpha_phase", "r", "theta",
        "pmf_csv", "tail_mass",
    },
    "scatter": {"m", "stages", "approx", "approx_nmax"},
    "gn": {"order"},
    "plimit": {"n", "m"},
    "mc": {"frames", "seed", "order", "record_configurations"},
    "figure": {"m", "nbar", "n", "r", "alpha_phase", "m_max", "n_sweep_max"},
}


def _check_section(cp: configparser.ConfigParser | None, section: str) -> None:
    if cp is None or not cp.has_section(section):
        return
    unknown = sorted(set(cp[section]) - _KNOWN_KEYS[section])
    if unknown:
        raise ConfigError(f"unknown key(s) in [{section}]: {', '.join(unknown)}")


def _resolve(cp, flag_value, section, key, parse, default=_REQUIRED):
    """Flag beats config beats default; missing required settings are errors."""
    if flag_value is not None:
        return flag_value
    if cp is not None and cp.has_section(section) and key in cp[section]:
        raw = cp[section][key]
        try:
            return parse(raw)
        except ValueError as exc:
            raise ConfigError(f"[{section}] {key} = {raw!r}: {exc}") from exc
    if default is _REQUIRED:
        raise ConfigError(f"missing required setting [{section}] {key} (or its flag)")
    return default


def _load_custom_pmf(path: str, tail_mass: float) -> Pmf:
    file = Path(path)
    if not file.is_file():
        raise ConfigError(f"custom pmf file not found: {path}")
    probs: list[float] = []
    with file.open(encoding="utf-8") as handle:
        header: list[str] | None = None
        for line in handle:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            cells = line.split(",")
            if header is None:
                header = [c.strip().lower() for c in cells]
                if "n" not in header or "p" not in header:
                    raise ConfigError(f"{path}: need columns 'n' and 'p', got {header}")
                continue
            row = dict(zip(header, cells))
            try:
                n, p = int(row["n"]), float(row["p"])
            except (KeyError, ValueError) as exc:
                raise ConfigError(f"{path}: bad row {line!r}: {exc}") from exc
            if n != len(probs):
                raise ConfigError(f"{path}: rows must cover n = 0,1,2,... got n={n}")
            probs.append(p)
    if not probs:
        raise ConfigError(f"{path}: no pmf rows found")
    try:
        return Pmf(tuple(probs), tail_mass)
    except InvalidPmf as exc:
        raise ConfigError(f"{path}: {exc}") from exc


def _resolve_input(cp, args) -> tuple[InputStateSpec, dict]:
    _check_section(cp, "input")
    kind = _resolve(cp, getattr(args, "kind", None), "input", "kind", str.strip)
    kind = kind.lower()
    resolved: dict = {"kind": kind}
    try:
        if kind == "fock":
            n = _resolve(cp, args.n, "input", "n", _parse_int)
            resolved["n"] = n
            return Fock(n), resolved
        if kind == "coherent":
            mean = _resolve(cp, args.mean, "input", "mean", float)
            resolved["mean"] = mean
            return Coherent(mean), resolved
        if kind == "thermal":
            mean = _resolve(cp, args.mean, "input", "mean", float)
            resolved["mean"] = mean
            return Thermal(mean), resolved
        if kind == "squeezed":
            alpha_mag = _resolve(cp, args.alpha_mag, "input", "alpha_mag", float, 0.0)
            alpha_phase = _resolve(cp, args.alpha_phase, "input", "alpha_phase", float, 0.0)
            r = _resolve(cp, args.r, "input", "r", float, 0.0)
            theta = _resolve(cp, args.theta, "input", "theta", float, 0.0)
            resolved.update(
                alpha_mag=alpha_mag, alpha_phase=alpha_phase, r=r, theta=theta
            )
            return SqueezedCoherent(alpha_mag, alpha_phase, r, theta), resolved
        if kind == "custom":
            path = _resolve(cp, args.pmf_csv, "input", "pmf_csv", str.strip)
            tail = _resolve(cp, args.tail_mass, "input", "tail_mass", float, 0.0)
            resolved.update(pmf_csv=path, tail_mass=tail)
            return Custom(_load_custom_pmf(path, tail)), resolved
    except ValueError as exc:
        raise ConfigError(f"invalid input state: {exc}") from exc
    raise ConfigError(
        f"unknown input kind {kind!r}; expected fock, coherent, thermal, squeezed or custom"
    )


# --- deterministic output helpers ----------------------------------------------


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _flatten_config(resolved: dict) -> list[tuple[str, object]]:
    flat: list[tuple[str, object]] = []
    for section in sorted(resolved):
        for key in sorted(resolved[section]):
            flat.append((f"{section}.{key}", resolved[section][key]))
    return flat


def _write_csv(path: Path, resolved: dict, header: list[str], rows) -> None:
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write(f"# engine = {_ENGINE['name']} {_ENGINE['version']}\n")
        for key, value in _flatten_config(resolved):
            handle.write(f"# {key} = {_cell(value)}\n")
        handle.write(",".join(header) + "\n")
        for row in rows:
            handle.write(",".join(_cell(x) for x in row) + "\n")


def _write_json(path: Path, resolved: dict, payload: dict) -> None:
    document = {"engine": _ENGINE, "config": resolved, **payload}
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        json.dump(document, handle, sort_keys=True, indent=2)
        handle.write("\n")


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _columns_to_rows(columns: list[list]) -> list[list]:
    """Zip ragged columns into rows, padding the short ones with blanks."""
    length = max(len(c) for c in columns)
    return [
        [col[i] if i < len(col) else None for col in columns] for i in range(length)
    ]


# --- subcommands ----------------------------------------------------------------


def cmd_scatter(args) -> None:
    cp = _load_config(args.config)
    _check_section(cp, "scatter")
    spec, input_resolved = _resolve_input(cp, args)
    M = _resolve(cp, args.M, "scatter", "m", _parse_int)
    stages = _resolve(cp, args.stages, "scatter", "stages", _parse_int, 1)
    approx = _resolve(cp, args.approx, "scatter", "approx", _parse_bool, False)
    approx_nmax = _resolve(cp, args.approx_nmax, "scatter", "approx_nmax", _parse_int, None)

    resolved = {
        "input": input_resolved,
        "scatter": {"m": M, "stages": stages, "approx": approx},
    }
    if approx_nmax is not None:
        resolved["scatter"]["approx_nmax"] = approx_nmax

    source = input_pmf(spec)
    out = cascade_pmf(source, M, stages)
    thermal_ref = thermal_pmf(pmf_mean(out))

    columns = [
        list(range(len(out))),
        list(out.probs),
        list(thermal_ref.probs),
    ]
    header = ["n", "p_exact", "p_thermal_ref"]
    if approx:
        if stages != 1:
            raise ConfigError("the small-n approximation applies to a single stage only")
        n_eff = spec.n if isinstance(spec, Fock) else round(pmf_mean(source))
        n_top = n_eff if approx_nmax is None else min(approx_nmax, n_eff)
        approx_pmf = approx_scatter_pmf(n_eff, M, n_top)
        columns.append(list(approx_pmf.probs))
        header.append("p_approx")
        resolved["scatter"]["approx_n"] = n_eff
        resolved["scatter"]["approx_nmax"] = n_top

    _write_csv(_out_dir(args) / "scatter.csv", resolved, header, _columns_to_rows(columns))


def _report_as_dict(report) -> dict:
    return {
        "mean": report.mean,
        "factorial_moments": {
            str(i + 1): x for i, x in enumerate(report.factorial_moments)
        },
        "g": {str(i + 2): x for i, x in enumerate(report.g)},
    }


def cmd_gn(args) -> None:
    cp = _load_config(args.config)
    _check_section(cp, "scatter")
    _check_section(cp, "gn")
    spec, input_resolved = _resolve_input(cp, args)
    M = _resolve(cp, args.M, "scatter", "m", _parse_int)
    stages = _resolve(cp, args.stages, "scatter", "stages", _parse_int, 1)
    order = _resolve(cp, args.order, "gn", "order", _parse_int, 3)

    resolved = {
        "input": input_resolved,
        "scatter": {"m": M, "stages": stages},
        "gn": {"order": order},
    }

    source = input_pmf(spec)
    incoming = correlation_report(source, order)
    outgoing = correlation_report(cascade_pmf(source, M, stages), order)

    g2_pred = incoming.g2
    for _ in range(stages):
        g2_pred = g2_out_predicted(g2_pred, M)
    predicted = {"2": g2_pred}
    if order >= 3:
        g3_pred = incoming.g3
        for _ in range(stages):
            g3_pred = g3_out_predicted(g3_pred, M)
        predicted["3"] = g3_pred

    payload = {
        "input": _report_as_dict(incoming),
        "output": _report_as_dict(outgoing),
        "predicted": predicted,
        "difference": {
            k: outgoing.g_at(int(k)) - v for k, v in predicted.items()
        },
        "deep_cascade_limit": {
            str(k): gn_limit(incoming.g_at(k), k, stages) for k in range(2, order + 1)
        },
    }
    _write_json(_out_dir(args) / "gn.json", resolved, payload)


def cmd_plimit(args) -> None:
    cp = _load_config(args.config)
    _check_section(cp, "plimit")
    n_photons = _resolve(cp, args.n, "plimit", "n", _parse_int)
    M = _resolve(cp, args.M, "plimit", "m", _parse_int)
    resolved = {"plimit": {"n": n_photons, "m": M}}

    one_stage = fock_scatter_pmf(n_photons, M)
    limit = fock_pn_limit_pmf(n_photons, M)
    tv = total_variation(one_stage, limit)

    rows = _columns_to_rows(
        [list(range(len(one_stage))), list(one_stage.probs), list(limit.probs)]
    )
    out = _out_dir(args)
    _write_csv(out / "plimit.csv", resolved, ["n", "p_single_stage", "p_limit"], rows)
    _write_json(
        out / "plimit.json",
        resolved,
        {
            "total_variation": tv,
            "mean_single_stage": pmf_mean(one_stage),
            "mean_limit": pmf_mean(limit),
        },
    )


def cmd_mc(args) -> None:
    cp = _load_config(args.config)
    _check_section(cp, "scatter")
    _check_section(cp, "mc")
    spec, input_resolved = _resolve_input(cp, args)
    M = _resolve(cp, args.M, "scatter", "m", _parse_int)
    frames = _resolve(cp, args.frames, "mc", "frames", _parse_int, 100_000)
    seed = _resolve(cp, args.seed, "mc", "seed", _parse_int, 0)
    order = _resolve(cp, args.order, "mc", "order", _parse_int, 2)
    record = _resolve(
        cp, args.record_configurations, "mc", "record_configurations", _parse_bool, False
    )

    resolved = {
        "input": input_resolved,
        "scatter": {"m": M},
        "mc": {
            "frames": frames,
            "seed": seed,
            "order": order,
            "record_configurations": record,
        },
    }

    result = run_mc(MCConfig(spec, M, frames, seed, record_configurations=record))
    empirical = empirical_report(result, order)
    exact_pmf = scatter_pmf(input_pmf(spec), M)
    exact = correlation_report(exact_pmf, order)

    counts = np.asarray(result.histogram)
    exact_probs = exact_pmf.probs
    rows = _columns_to_rows(
        [
            list(range(len(counts))),
            [int(c) for c in counts],
            [c / frames for c in counts.tolist()],
            list(exact_probs),
        ]
    )
    out = _out_dir(args)
    _write_csv(out / "mc.csv", resolved, ["n", "count", "p_empirical", "p_exact"], rows)

    z_scores = {}
    for k in range(2, order + 1):
        se = empirical.g_se[k - 2]
        gap = empirical.report.g_at(k) - exact.g_at(k)
        z_scores[str(k)] = gap / se if se > 0 else None
    payload = {
        "empirical": _report_as_dict(empirical.report),
        "standard_errors": {
            "mean": empirical.mean_se,
            "g": {str(k): empirical.g_se[k - 2] for k in range(2, order + 1)},
        },
        "exact": _report_as_dict(exact),
        "z": z_scores,
        "blocks": empirical.blocks,
    }
    _write_json(out / "mc.json", resolved, payload)


# --- figure recipes ---------------------------------------------------------------


def _figure_fig2(cp, args, out: Path) -> None:
    M = _resolve(cp, args.M, "figure", "m", _parse_int)  # deliberately no default
    nbar = _resolve(cp, args.nbar, "figure", "nbar", _parse_int, 200)
    resolved = {"figure": {"name": "fig2", "m": M, "nbar": nbar}}

    fock_out = fock_scatter_pmf(nbar, M)
    poisson_out = scatter_pmf(input_pmf(Coherent(float(nbar))), M)
    thermal_ref = thermal_pmf(nbar / M)
    columns = [
        list(range(max(len(fock_out), len(poisson_out), len(thermal_ref)))),
        list(fock_out.probs),
        list(poisson_out.probs),
        list(thermal_ref.probs),
    ]
    header = ["n", "p_fock", "p_poisson", "p_thermal_ref"]
    if M >= 3:
        columns.append(list(approx_scatter_pmf(nbar, M, nbar).probs))
        header.append("p_fock_approx")
    _write_csv(out / "fig2.csv", resolved, header, _columns_to_rows(columns))


def _figure_fig3a(cp, args, out: Path) -> None:
    M = _resolve(cp, args.M, "figure", "m", _parse_int, 8)
    nbar = _resolve(cp, args.nbar, "figure", "nbar", _parse_int, 8)
    resolved = {"figure": {"name": "fig3a", "m": M, "nbar": nbar}}
    fock_out = fock_scatter_pmf(nbar, M)
    poisson_out = scatter_pmf(input_pmf(Coherent(float(nbar))), M)
    thermal_out = scatter_pmf(input_pmf(Thermal(float(nbar))), M)
    columns = [
        list(range(max(len(fock_out), len(poisson_out), len(thermal_out)))),
        list(fock_out.probs),
        list(poisson_out.probs),
        list(thermal_out.probs),
    ]
    _write_csv(
        out / "fig3a.csv",
        resolved,
        ["n", "p_fock", "p_poisson", "p_thermal"],
        _columns_to_rows(columns),
    )


def _figure_fig3b(cp, args, out: Path) -> None:
    m_max = _resolve(cp, None, "figure", "m_max", _parse_int, 64)
    resolved = {"figure": {"name": "fig3b", "m_max": m_max}}
    rows = []
    for M in range(1, m_max + 1):
        row = [M]
        for n_in in (2, 5, 10):
            row.append(g2_out_predicted(1.0 - 1.0 / n_in, M))
        row.append(g2_out_predicted(1.0, M))  # Poissonian input, any mean
        rows.append(row)
    _write_csv(
        out / "fig3b.csv",
        resolved,
        ["M", "g2_fock2", "g2_fock5", "g2_fock10", "g2_poisson"],
        rows,
    )


def _figure_fig3c(cp, args, out: Path) -> None:
    M = _resolve(cp, args.M, "figure", "m", _parse_int, 200)
    n_sweep_max = _resolve(cp, None, "figure", "n_sweep_max", _parse_int, 50)
    resolved = {"figure": {"name": "fig3c", "m": M, "n_sweep_max": n_sweep_max}}
    rows = []
    for n_in in range(1, n_sweep_max + 1):
        g2_in = 1.0 - 1.0 / n_in
        rows.append([n_in, g2_in, g2_out_predicted(g2_in, M)])
    _write_csv(out / "fig3c.csv", resolved, ["N", "g2_in", "g2_out"], rows)


def _figure_fig3d(cp, args, out: Path) -> None:
    M = _resolve(cp, args.M, "figure", "m", _parse_int, 200)
    nbar = _resolve(cp, args.nbar, "figure", "nbar", _parse_int, 8)
    r = _resolve(cp, args.r, "figure", "r", float, 1.0)
    alpha_phase = _resolve(cp, args.alpha_phase, "figure", "alpha_phase", float, 0.0)
    if math.sinh(r) ** 2 > nbar:
        raise ConfigError(
            f"squeezing r={r} alone already exceeds the target mean {nbar}"
        )
    alpha_mag = math.sqrt(nbar - math.sinh(r) ** 2)
    resolved = {
        "figure": {
            "name": "fig3d",
            "m": M,
            "nbar": nbar,
            "r": r,
            "alpha_phase": alpha_phase,
            "alpha_mag": alpha_mag,
        }
    }
    rows = []
    for theta in np.linspace(0.0, 2.0 * math.pi, 65):
        state = SqueezedCoherent(alpha_mag, alpha_phase, r, float(theta))
        source = input_pmf(state)
        g2_in = correlation_report(source, 2).g2
        g2_out = correlation_report(scatter_pmf(source, M), 2).g2
        rows.append([float(theta), g2_in, g2_out, g2_out_predicted(g2_in, M)])
    _write_csv(
        out / "fig3d.csv",
        resolved,
        ["theta", "g2_in", "g2_out", "g2_out_law"],
        rows,
    )


def _figure_fig5(name: str, default_M: int, cp, args, out: Path) -> None:
    n_photons = _resolve(cp, args.n, "figure", "n", _parse_int, 60)
    M = _resolve(cp, args.M, "figure", "m", _parse_int, default_M)
    resolved = {"figure": {"name": name, "n": n_photons, "m": M}}
    one_stage = fock_scatter_pmf(n_photons, M)
    limit = fock_pn_limit_pmf(n_photons, M)
    rows = _columns_to_rows(
        [list(range(len(one_stage))), list(one_stage.probs), list(limit.probs)]
    )
    _write_csv(out / f"{name}.csv", resolved, ["n", "p_single_stage", "p_limit"], rows)
    _write_json(
        out / f"{name}.json",
        resolved,
        {"total_variation": total_variation(one_stage, limit)},
    )


def cmd_figure(args) -> None:
    cp = _load_config(args.config)
    _check_section(cp, "figure")
    out = _out_dir(args)
    if args.name == "fig2":
        _figure_fig2(cp, args, out)
    elif args.name == "fig3a":
        _figure_fig3a(cp, args, out)
    elif args.name == "fig3b":
        _figure_fig3b(cp, args, out)
    elif args.name == "fig3c":
        _figure_fig3c(cp, args, out)
    elif args.name == "fig3d":
        _figure_fig3d(cp, args, out)
    elif args.name == "fig5a":
        _figure_fig5("fig5a", 60, cp, args, out)
    else:
        _figure_fig5("fig5b", 200, cp, args, out)


# --- argument parsing ---------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="INI config file; flags override it")
    parser.add_argument("--out", default=".", help="output directory (default: .)")


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("input state")
    group.add_argument(
        "--kind", choices=["fock", "coherent", "thermal", "squeezed", "custom"]
    )
    group.add_argument("--n", type=int, help="photon number (fock)")
    group.add_argument("--mean", type=float, help="mean photon number (coherent/thermal)")
    group.add_argument("--alpha-mag", type=float, help="displacement magnitude (squeezed)")
    group.add_argument("--alpha-phase", type=float, help="displacement phase (squeezed)")
    group.add_argument("--r", type=float, help="squeezing magnitude (squeezed)")
    group.add_argument("--theta", type=float, help="squeezing phase (squeezed)")
    group.add_argument("--pmf-csv", help="CSV with columns n,p (custom)")
    group.add_argument("--tail-mass", type=float, help="tail mass of the custom pmf")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rggstats",
        description="Photon statistics of light scattered by a rotating ground glass.",
    )
    parser.add_argument("--version", action="version", version=f"rggstats {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_scatter = sub.add_parser("scatter", help="single-cell pmf after scattering")
    _add_common(p_scatter)
    _add_input_flags(p_scatter)
    p_scatter.add_argument("--M", type=int, help="number of speckle cells")
    p_scatter.add_argument("--stages", type=int, help="diffusers in series (default 1)")
    p_scatter.add_argument(
        "--approx", action=argparse.BooleanOptionalAction,
        help="also emit the small-n approximation column",
    )
    p_scatter.add_argument("--approx-nmax", type=int, help="support cap for the approximation")
    p_scatter.set_defaults(func=cmd_scatter)

    p_gn = sub.add_parser("gn", help="correlation report: exact vs. law vs. limit")
    _add_common(p_gn)
    _add_input_flags(p_gn)
    p_gn.add_argument("--M", type=int, help="number of speckle cells")
    p_gn.add_argument("--stages", type=int, help="diffusers in series (default 1)")
    p_gn.add_argument("--order", type=int, help="highest correlation order (default 3)")
    p_gn.set_defaults(func=cmd_gn)

    p_plimit = sub.add_parser("plimit", help="single stage vs. deep-cascade limit")
    _add_common(p_plimit)
    p_plimit.add_argument("--n", type=int, help="input photon number")
    p_plimit.add_argument("--M", type=int, help="number of speckle cells")
    p_plimit.set_defaults(func=cmd_plimit)

    p_mc = sub.add_parser("mc", help="Monte Carlo sampler with jackknife errors")
    _add_common(p_mc)
    _add_input_flags(p_mc)
    p_mc.add_argument("--M", type=int, help="number of speckle cells")
    p_mc.add_argument("--frames", type=int, help="number of frames (default 100000)")
    p_mc.add_argument("--seed", type=int, help="base seed (default 0)")
    p_mc.add_argument("--order", type=int, help="highest correlation order (default 2)")
    p_mc.add_argument(
        "--record-configurations", action=argparse.BooleanOptionalAction,
        help="tally complete occupation patterns (memory-hungry)",
    )
    p_mc.set_defaults(func=cmd_mc)

    p_figure = sub.add_parser("figure", help="canned parameter recipes")
    _add_common(p_figure)
    p_figure.add_argument("name", choices=list(FIGURES))
    p_figure.add_argument(
        "--M", type=int, help="speckle cells (required for fig2; recipes vary)"
    )
    p_figure.add_argument("--nbar", type=int, help="input mean photon number")
    p_figure.add_argument("--n", type=int, help="input photon number (fig5a/fig5b)")
    p_figure.add_argument("--r", type=float, help="squeezing magnitude (fig3d)")
    p_figure.add_argument("--alpha-phase", type=float, help="displacement phase (fig3d)")
    p_figure.set_defaults(func=cmd_figure)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except (
        TailTooHeavy,
        ZeroMass,
        ZeroMean,
        OutOfRange,
        DimTooSmall,
        InvalidPmf,
        ArithmeticError,
    ) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
