"""Named experiment presets.

Every preset produces one :class:`ResultTable` with the shared schema

    problem, preset, base, method, level, quantity, entry, tau, time,
    value, slope, coefficient, residual, status

and writes ``<name>.csv`` plus a JSON metadata sidecar (and, for the PDE
problems, a final-field snapshot per the deepest method).  Singularities
in a single (method, tau) cell mark that row as failed instead of aborting
the preset.
"""

import math
import os
from dataclasses import asdict

import numpy as np

from .. import __version__
from ..composition import coefficient_arguments, recursive_family
from ..diagnostics import (
    energy_error_series, envelope_growth, integrate, power_law_fit,
    slope_with_floor, symmetry_defect, symplecticity_defect,
    truncation_matrix_fit,
)
from ..errors import SingularityError
from ..problems import (
    CGLParams, cgl_linear_map, cgl_nonlinear_map, cgl_strang_flow,
    fisher_diffusion_map, fisher_reaction_map, fisher_strang_flow,
    ho_drift_flow, ho_energy, ho_exact, ho_kick_flow, ho_strang_flow,
    kepler_drift_flow, kepler_energy, kepler_initial_conditions,
    kepler_kick_flow, kepler_strang_flow, pulse_pair_profile, s4sim,
)
from ..problems.kepler import KeplerState
from ..spectral import SpectralField, SpectralGrid, write_snapshot
from .config import apply_overrides, preset_config
from .emit import ResultTable, emit

SCHEMA = [
    "problem", "preset", "base", "method", "level", "quantity", "entry",
    "tau", "time", "value", "slope", "coefficient", "residual", "status",
]

#: Error floors below which order-fit samples count as roundoff; the CGL
#: runs accumulate more FFT roundoff per step than the others.
ORDER_FIT_FLOORS = {"harmonic": 1e-13, "kepler": 1e-13, "fisher": 1e-13,
                    "cgl": 5e-13}


def _problem_setup(config):
    """Base flow map, grid (PDE only), and initial state for a config."""
    params = config.problem_params
    if config.problem == "harmonic":
        x0 = np.array([params.get("q0", 2.5), params.get("p0", 0.0)], dtype=complex)
        if config.base_method == "strang":
            return ho_strang_flow(), None, x0
        return s4sim(ho_drift_flow(), ho_kick_flow()), None, x0
    if config.problem == "kepler":
        x0 = kepler_initial_conditions(params.get("e", 0.6)).as_vector()
        if config.base_method == "strang":
            return kepler_strang_flow(), None, x0
        return s4sim(kepler_drift_flow(), kepler_kick_flow()), None, x0
    if config.problem == "fisher":
        grid = SpectralGrid(0.0, 1.0, config.grid_points or 128)
        x0 = np.asarray(np.sin(2.0 * np.pi * grid.nodes), dtype=complex)
        if config.base_method == "strang":
            return fisher_strang_flow(grid), grid, x0
        return s4sim(fisher_diffusion_map(grid), fisher_reaction_map()), grid, x0
    # cgl
    cgl_params = CGLParams(
        c1=params.get("c1", 1.0), c3=params.get("c3", -2.0),
        eps=params.get("eps", 1.0),
    )
    grid = SpectralGrid(-100.0, 200.0, config.grid_points or 512)
    x0 = np.array([pulse_pair_profile(grid), np.zeros(grid.n_points)], dtype=complex)
    if config.base_method == "strang":
        return cgl_strang_flow(cgl_params, grid), grid, x0
    return s4sim(cgl_linear_map(cgl_params, grid),
                 cgl_nonlinear_map(cgl_params)), grid, x0


def _methods(config, base):
    """Ordered (name, level, flow) triples: the base plus family levels."""
    out = [(config.base_method, 0, base)]
    family = recursive_family(base, config.levels)
    for i, level in enumerate(family.levels, start=1):
        out.append((f"level{i}", i, level))
    return out


def _new_table(name, config):
    table = ResultTable(schema=SCHEMA)
    table.metadata = {
        "preset": name,
        "config": _config_dict(config),
        "artifact": "pscomp",
        "version": __version__,
        "precision": "f64",
        "schema": SCHEMA,
        "row_semantics": (
            "the quantity column names what the value column holds "
            "(successive_error/energy_error rows carry E_tau per step size; "
            "*_fit rows carry slope/coefficient/residual of the power-law fit)"
        ),
        "failures": [],
    }
    return table


def _config_dict(config):
    data = asdict(config)
    data["tau_list"] = list(data["tau_list"])
    return data


def _common(name, config, **extra):
    cells = {"problem": config.problem, "preset": name,
             "base": config.base_method}
    cells.update(extra)
    return cells


def _final_states_pair(method, x0, tau, n_steps):
    """Final states of the tau and tau/2 runs from the same data."""
    coarse = np.asarray(x0, dtype=complex)
    for _ in range(n_steps):
        coarse = method(coarse, tau)
    fine = np.asarray(x0, dtype=complex)
    half = tau / 2.0
    for _ in range(2 * n_steps):
        fine = method(fine, half)
    return coarse, fine


def _run_order(name, config, out_base):
    base, grid, x0 = _problem_setup(config)
    table = _new_table(name, config)
    floor = ORDER_FIT_FLOORS[config.problem]
    is_kepler = config.problem == "kepler"
    quantity = "energy_error" if is_kepler else "successive_error"
    snapshots = []
    last_field = None
    if is_kepler:
        state0 = KeplerState.from_vector(x0)
        h0 = kepler_energy(state0)
    for method_name, level, method in _methods(config, base):
        errors = []
        for tau in config.tau_list:
            n = round(config.t_final / tau)
            try:
                if is_kepler:
                    final = np.asarray(x0, dtype=complex)
                    for _ in range(n):
                        final = method(final, tau)
                    h = kepler_energy(KeplerState.from_vector(final))
                    value = abs(h - h0) / abs(h0)
                else:
                    coarse, fine = _final_states_pair(method, x0, tau, n)
                    value = float(np.max(np.abs(coarse - fine)))
                    last_field = fine
                status = "ok"
            except SingularityError as exc:
                value = math.nan
                status = f"singular: {exc}"
                table.metadata["failures"].append(
                    {"method": method_name, "tau": tau, "error": str(exc)}
                )
            errors.append(value)
            table.add_row(**_common(name, config, method=method_name,
                                    level=level, quantity=quantity, tau=tau,
                                    value=value, status=status))
        valid = np.array([e for e in errors if not math.isnan(e)])
        valid_taus = np.array([t for t, e in zip(config.tau_list, errors)
                               if not math.isnan(e)])
        slope = slope_with_floor(valid_taus, valid, floor=floor) if len(valid) else None
        table.add_row(**_common(
            name, config, method=method_name, level=level,
            quantity="order_fit",
            slope=slope if slope is not None else math.nan,
            status="ok" if slope is not None else "insufficient_samples",
        ))
        if grid is not None and last_field is not None:
            path = f"{out_base}_{method_name}_field.txt"
            if config.problem == "cgl":
                field = SpectralField(grid, last_field[0] + 1j * last_field[1])
            else:
                field = SpectralField(grid, last_field)
            write_snapshot(field, path)
            snapshots.append(path)
            last_field = None
    return table, snapshots


def _run_ho_table1(name, config):
    base, _, _ = _problem_setup(config)
    table = _new_table(name, config)
    taus = np.asarray(config.tau_list)
    family = recursive_family(base, config.levels)
    for level, method in enumerate(family.levels, start=1):
        method_name = f"level{level}"
        fits = truncation_matrix_fit(method, taus, reference=ho_exact)
        for i in range(2):
            for j in range(2):
                fit = fits[i][j]
                cells = _common(name, config, method=method_name, level=level,
                                quantity="truncation", entry=f"{i}{j}")
                if fit is None:
                    table.add_row(status="below_floor", **cells)
                else:
                    table.add_row(slope=fit.exponent, coefficient=fit.coefficient,
                                  residual=fit.residual, status="ok", **cells)
        sym = symmetry_defect(method, None, taus, matrix_dim=2)
        det = symplecticity_defect(method, None, taus, matrix_dim=2)
        for quantity, report, series, fit in (
            ("symmetry_defect", sym, sym.symmetry_defect, sym.fits["symmetry"]),
            ("determinant_defect", det, det.symplecticity_defect,
             det.fits["symplecticity"]),
        ):
            for tau, value in zip(taus, series):
                table.add_row(**_common(name, config, method=method_name,
                                        level=level, quantity=quantity,
                                        tau=float(tau), value=float(value),
                                        status="ok"))
            cells = _common(name, config, method=method_name, level=level,
                            quantity=f"{quantity}_fit")
            if fit is None:
                table.add_row(status="below_floor", **cells)
            else:
                table.add_row(slope=fit.exponent, coefficient=fit.coefficient,
                              residual=fit.residual, status="ok", **cells)
    return table, []


def _run_ho_energy(name, config):
    base, _, x0 = _problem_setup(config)
    table = _new_table(name, config)
    family = recursive_family(base, config.levels)
    method = family.levels[-1]
    method_name = f"level{config.levels}"
    growths = []
    for tau in config.tau_list:
        n = round(config.t_final / tau)
        trajectory = integrate(method, x0, tau, n)
        series = energy_error_series(trajectory, ho_energy)
        window = max(1, int(0.05 * len(series)))
        plateau = float(series[:window].max())
        envelope = float(series[-window:].max())
        growth = envelope_growth(series)
        growths.append(growth)
        for quantity, value in (("energy_plateau", plateau),
                                ("energy_envelope", envelope),
                                ("secular_growth", growth)):
            table.add_row(**_common(name, config, method=method_name,
                                    level=config.levels, quantity=quantity,
                                    tau=tau, value=value, status="ok"))
    positive = [(t, g) for t, g in zip(config.tau_list, growths) if g > 0]
    if len(positive) >= 3:
        fit = power_law_fit([t for t, _ in positive], [g for _, g in positive])
        table.add_row(**_common(name, config, method=method_name,
                                level=config.levels, quantity="secular_order",
                                slope=fit.exponent, coefficient=fit.coefficient,
                                residual=fit.residual, status="ok"))
    else:
        table.add_row(**_common(name, config, method=method_name,
                                level=config.levels, quantity="secular_order",
                                status="insufficient_samples"))
    return table, []


def _run_kepler_energy(name, config):
    base, _, x0 = _problem_setup(config)
    table = _new_table(name, config)
    tau = config.tau_list[0]
    n = round(config.t_final / tau)
    stride = max(1, n // 500)
    for method_name, level, method in _methods(config, base):
        try:
            trajectory = integrate(method, x0, tau, n)
            series = energy_error_series(
                trajectory,
                lambda s: kepler_energy(KeplerState.from_vector(np.asarray(s, dtype=complex))),
            )
            for idx in range(0, n + 1, stride):
                table.add_row(**_common(name, config, method=method_name,
                                        level=level, quantity="energy_error",
                                        tau=tau, time=float(trajectory.times[idx]),
                                        value=float(series[idx]), status="ok"))
        except SingularityError as exc:
            table.metadata["failures"].append(
                {"method": method_name, "tau": tau, "error": str(exc)}
            )
            table.add_row(**_common(name, config, method=method_name,
                                    level=level, quantity="energy_error",
                                    tau=tau, value=math.nan,
                                    status=f"singular: {exc}"))
    return table, []


def _run_coeff_audit(name, config):
    table = _new_table(name, config)
    bases = (
        ("strang", ho_strang_flow(), 3),
        ("s4sim", s4sim(ho_drift_flow(), ho_kick_flow()), 4),
    )
    for base_name, base, levels in bases:
        family = recursive_family(base, levels)
        max_arg, all_positive = coefficient_arguments(family)
        table.add_row(problem="harmonic", preset=name, base=base_name,
                      method=f"{base_name}x{levels}",
                      quantity="max_coefficient_argument",
                      value=max_arg, coefficient=max_arg / (math.pi / 2.0),
                      status="all_positive_real" if all_positive
                      else "nonpositive_real_present")
        for level, flow in enumerate(family.levels, start=1):
            table.add_row(problem="harmonic", preset=name, base=base_name,
                          method=f"level{level}", level=level,
                          quantity="declared_order",
                          value=float(flow.meta.order),
                          status="capped" if family.capped[level - 1] else "ok")
    return table, []


_RUNNERS = {
    "ho-table1": lambda name, config, out_base: _run_ho_table1(name, config),
    "ho-energy": lambda name, config, out_base: _run_ho_energy(name, config),
    "kepler-order": _run_order,
    "kepler-energy": lambda name, config, out_base: _run_kepler_energy(name, config),
    "fisher-order": _run_order,
    "cgl-order": _run_order,
    "coeff-audit": lambda name, config, out_base: _run_coeff_audit(name, config),
}


def run_preset(name, overrides=None, out_dir=".", config=None):
    """Execute a preset and write its CSV/JSON (and snapshot) files.

    Returns ``(table, paths)``.  ``overrides`` is a partial config mapping
    merged over the preset defaults; alternatively a fully parsed config
    can be passed directly.
    """
    if config is None:
        config = preset_config(name)
        if overrides:
            config = apply_overrides(config, overrides)
    if config.output_path:
        out_base = config.output_path
    else:
        os.makedirs(out_dir, exist_ok=True)
        out_base = os.path.join(out_dir, name)
    table, extra_paths = _RUNNERS[name](name, config, out_base)
    table.metadata["all_rows_failed"] = (
        len(table.metadata["failures"]) > 0
        and all(row[table.schema.index("status")].startswith("singular")
                for row in table.rows
                if row[table.schema.index("quantity")] in
                ("successive_error", "energy_error"))
    )
    csv_path, json_path = emit(table, out_base)
    return table, [csv_path, json_path, *extra_paths]


def available_presets():
    return ["ho-table1", "ho-energy", "kepler-order", "kepler-energy",
            "fisher-order", "cgl-order", "coeff-audit"]
