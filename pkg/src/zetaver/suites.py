"""Named verification suites over parameter grids, with machine-readable
CSV/JSON reports.

Each suite binds a verifier to a default grid and a pass rule.  A run
produces one row per grid point; rows carry the full parameter point so
every number in a report can be reproduced.  Grid evaluation order, panel
decompositions and summation orders are deterministic, so identical
configurations give bit-identical rows.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import math
import time

import numpy as np

from . import afe, fourier, identities, special
from .config import DEFAULT_CONFIG, EvalConfig
from .errors import ConfigError, ZetaverError

_2PI = 2.0 * math.pi

__all__ = [
    "AxisSpec",
    "GridSpec",
    "SuiteSpec",
    "ReportFile",
    "Suite",
    "SUITES",
    "run_suite",
    "list_suites",
]


@dataclasses.dataclass(frozen=True)
class AxisSpec:
    """One grid axis: an inclusive range with linear or geometric spacing,
    or an explicit value list."""

    minimum: float = 0.0
    maximum: float = 0.0
    count: int = 1
    spacing: str = "linear"
    explicit: tuple = ()

    def __post_init__(self) -> None:
        if self.explicit:
            return
        if self.count < 1:
            raise ConfigError("axis count must be >= 1")
        if self.minimum > self.maximum:
            raise ConfigError("axis minimum must be <= maximum")
        if self.spacing not in ("linear", "geometric"):
            raise ConfigError("spacing must be linear or geometric")
        if self.spacing == "geometric" and self.minimum <= 0:
            raise ConfigError("geometric spacing needs positive endpoints")

    def values(self) -> list[float]:
        if self.explicit:
            return [float(v) for v in self.explicit]
        if self.count == 1:
            return [float(self.minimum)]
        if self.spacing == "geometric":
            return [float(v) for v in np.geomspace(self.minimum, self.maximum, self.count)]
        return [float(v) for v in np.linspace(self.minimum, self.maximum, self.count)]

    def describe(self):
        if self.explicit:
            return list(self.explicit)
        return {"min": self.minimum, "max": self.maximum, "count": self.count, "spacing": self.spacing}


@dataclasses.dataclass(frozen=True)
class GridSpec:
    """Named axes swept as a cartesian product, in insertion order."""

    axes: dict

    def __post_init__(self) -> None:
        if not self.axes:
            raise ConfigError("grid must have at least one axis")
        for name, ax in self.axes.items():
            if not isinstance(ax, AxisSpec):
                raise ConfigError(f"axis {name} is not an AxisSpec")

    def points(self) -> list[dict]:
        names = list(self.axes)
        grids = [self.axes[n].values() for n in names]
        out: list[dict] = [{}]
        for name, vals in zip(names, grids):
            out = [dict(p, **{name: v}) for p in out for v in vals]
        return out

    def describe(self) -> dict:
        return {name: ax.describe() for name, ax in self.axes.items()}


@dataclasses.dataclass
class SuiteSpec:
    suite_id: str
    grid: GridSpec | None = None
    cfg: EvalConfig = DEFAULT_CONFIG
    tolerance: float | None = None
    output: str | None = None
    fmt: str = "csv"

    def __post_init__(self) -> None:
        if self.suite_id not in SUITES:
            raise ConfigError(f"unknown suite: {self.suite_id}")
        if self.fmt not in ("csv", "json"):
            raise ConfigError("format must be csv or json")


@dataclasses.dataclass
class ReportFile:
    header: dict
    rows: list[dict]
    passed: bool

    def to_csv(self) -> str:
        cols = ["identity_id", "param_json", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
                "abs_residual", "rel_residual", "evals", "seconds"]
        lines = [",".join(cols)]
        for r in self.rows:
            pj = json.dumps(r["params"], sort_keys=True, default=_jsonable).replace('"', '""')
            vals = [
                r["identity_id"],
                f'"{pj}"',
                _g17(r["lhs"].real),
                _g17(r["lhs"].imag),
                _g17(r["rhs"].real),
                _g17(r["rhs"].imag),
                _g17(r["abs_residual"]),
                _g17(r["rel_residual"]),
                str(r["evals"]),
                _g17(r["seconds"]),
            ]
            lines.append(",".join(vals))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "header": self.header,
            "passed": self.passed,
            "rows": [
                dict(r, lhs=[r["lhs"].real, r["lhs"].imag], rhs=[r["rhs"].real, r["rhs"].imag])
                for r in self.rows
            ],
        }
        return json.dumps(payload, indent=2, sort_keys=True, default=_jsonable)


def _g17(x: float) -> str:
    return format(float(x), ".17g")


def _jsonable(obj):
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, (np.floating, np.integer)):
        return float(obj)
    if isinstance(obj, tuple):
        return list(obj)
    return str(obj)


def _row(identity_id: str, params: dict, lhs: complex, rhs: complex,
         evals: int, seconds: float) -> dict:
    lhs = complex(lhs)
    rhs = complex(rhs)
    absres = abs(lhs - rhs)
    return {
        "identity_id": identity_id,
        "params": params,
        "lhs": lhs,
        "rhs": rhs,
        "abs_residual": absres,
        "rel_residual": absres / max(abs(lhs), 1e-300),
        "evals": evals,
        "seconds": seconds,
    }


def _report_row(rep: identities.IdentityReport, seconds: float) -> dict:
    return {
        "identity_id": rep.identity_id,
        "params": rep.params,
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "abs_residual": rep.abs_residual,
        "rel_residual": rep.rel_residual,
        "evals": rep.evaluations,
        "seconds": seconds,
    }


# ---------------------------------------------------------------------------
# Judges: default is "every row within tolerance"; asymptotic suites use
# boundedness of their scaled statistics instead of fixed residuals.
# ---------------------------------------------------------------------------


def _judge_tol(rows: list[dict], tol: float) -> bool:
    ok_rows = [r for r in rows if "error" not in r["params"]]
    if len(ok_rows) < len(rows):
        return False
    return all(r["rel_residual"] <= tol for r in ok_rows)


def _scaled_values(rows: list[dict], key: str = "scaled") -> list[float]:
    return [float(r["params"][key]) for r in rows if key in r["params"]]


def _judge_bounded(rows: list[dict], key: str, slope_max: float = 0.1,
                   spread_max: float = 5.0) -> bool:
    if any("error" in r["params"] for r in rows):
        return False
    by_sigma: dict = {}
    for r in rows:
        by_sigma.setdefault(r["params"].get("sigma", 0.0), []).append(r)
    for group in by_sigma.values():
        ts = [float(r["params"]["t"]) for r in group]
        vals = _scaled_values(group, key)
        if len(vals) != len(group):
            return False
        if len(set(ts)) > 2 and afe.loglog_slope(ts, vals) > slope_max:
            return False
        med = float(np.median(vals))
        if med > 0 and max(vals) > spread_max * med:
            return False
    return True


# ---------------------------------------------------------------------------
# Suite runners.
# ---------------------------------------------------------------------------


def _axis(*vals) -> AxisSpec:
    return AxisSpec(explicit=tuple(vals))


def _run_square(pt, cfg):
    s = complex(pt["sigma"], pt["t"])
    rep = identities.verify_square_identity(s, pt["alpha"], cfg=cfg)
    return [rep]


def _run_f_routes(pt, cfg):
    u = complex(pt["u_re"], pt.get("u_im", 0.0))
    v = complex(pt["v_re"], pt.get("v_im", 0.0))
    alpha = pt["alpha"]
    fs = identities.f_series(u, v, alpha, cfg)
    fc = identities.f_contour(u, v, alpha, cfg=cfg)
    return [identities.IdentityReport.build(
        "f_routes", {"u": u, "v": v, "alpha": alpha}, fs, fc)]


def _run_quadratic(pt, cfg):
    u = complex(pt["u_re"], pt.get("u_im", 0.0))
    v = complex(pt["v_re"], pt.get("v_im", 0.0))
    return [identities.verify_quadratic_moment((u, v), cfg)]


def _run_triple(pt, cfg):
    base = pt["re"]
    us = (complex(base, pt.get("im", 0.0)), complex(base + 0.4, -pt.get("im", 0.0)), complex(base + 0.15, 0.0))
    return [identities.verify_triple_moment(us, cfg)]


def _run_quadruple(pt, cfg):
    base = pt["re"]
    im = pt.get("im", 0.0)
    us = (complex(base, im), complex(base, -im), complex(base + 0.3, 0.0), complex(base + 0.55, 0.0))
    return [identities.verify_quadruple_moment(us, cfg)]


def _run_katsurada(pt, cfg):
    u = complex(pt["u_re"], pt["u_im"])
    return [identities.verify_katsurada(u, u.conjugate(), cfg)]


def _run_mellin(pt, cfg):
    return [identities.mellin_tail_check(complex(pt["u_re"]), complex(pt["v_re"]), cfg)]


def _run_unit_recursion(pt, cfg):
    return [identities.unit_interval_recursion(complex(pt["u_re"]), complex(pt["v_re"]), cfg)]


def _run_i1(pt, cfg):
    return identities.i1_asymptotic_check([pt["t"]], cfg)


def _run_remark219(pt, cfg):
    t = pt["t"]
    u = complex(pt.get("sigma", 0.5), t)
    v = complex(pt.get("sigma", 0.5), -t)
    return [identities.remark_219_check(u, v, cfg)]


def _run_afe_zeta(pt, cfg):
    s = complex(pt["sigma"], pt["t"])
    r = afe.afe_zeta_residual(s, cfg)
    return [identities.IdentityReport(
        "afe_zeta", {"sigma": s.real, "t": s.imag, "scaled": r.scaled},
        r.residual, 0.0, r.residual, r.residual, 0)]


def _run_afe_hurwitz(pt, cfg):
    s = complex(pt["sigma"], pt["t"])
    r = afe.afe_hurwitz_residual(s, pt["alpha"], cfg)
    return [identities.IdentityReport(
        "afe_hurwitz", {"sigma": s.real, "t": s.imag, "alpha": pt["alpha"], "scaled": r.scaled},
        r.residual, 0.0, r.residual, r.residual, 0)]


def _run_projection(pt, cfg):
    n = int(pt["N"])
    rng = np.random.default_rng(1234 + n)
    z = complex(rng.uniform(-1.0, 1.0), rng.uniform(-5.0, 5.0))
    out = []
    for mirrored in (False, True):
        lhs, rhs, res = afe.projection_identity_check(z, n, cfg, mirrored=mirrored)
        out.append(identities.IdentityReport.build(
            "projection", {"N": n, "z": z, "mirrored": mirrored}, lhs, rhs, res.evaluations))
    return out


def _run_weak_afe(pt, cfg):
    s = complex(pt["sigma"], pt["t"])
    r = afe.weak_afe_residual(s, cfg)
    return [identities.IdentityReport(
        "weak_afe", {"sigma": s.real, "t": s.imag, "scaled": r.scaled},
        r.residual, 0.0, r.residual, r.residual, 0)]


def _run_lemma3(pt, cfg):
    s = complex(pt.get("sigma", 0.5), pt["t"])
    d = afe.lemma3_integral(s, cfg)
    params = {
        "sigma": s.real,
        "t": s.imag,
        "scaled": d["scaled_residual"],
        "strip_over_envelope": d["strip_over_envelope"],
        "sums_over_envelope": d["sums_over_envelope"],
    }
    return [identities.IdentityReport(
        "lemma3", params, d["value"], d["sums"], d["residual"],
        d["residual"] / max(abs(d["value"]), 1e-300), d["evaluations"])]


def _run_power_mean_Ik(pt, cfg):
    k = int(pt["k"])
    pm = afe.power_mean_Ik(k, pt["t"], cfg)
    return [identities.IdentityReport(
        "power_mean_Ik", {"k": k, "t": pt["t"]}, pm.value, pm.value, 0.0, 0.0, 0)]


def _run_power_mean_Jk(pt, cfg):
    k = int(pt["k"])
    pm = afe.power_mean_Jk(k, pt["T"], cfg)
    env = math.log(pt["T"] / _2PI) + 2.0 * float(np.euler_gamma) - 1.0 if k == 1 else pm.value
    return [identities.IdentityReport(
        "power_mean_Jk", {"k": k, "T": pt["T"], "envelope": env}, pm.value, env,
        abs(pm.value - env), abs(pm.value - env) / max(abs(env), 1e-300), 0)]


def _run_s1(pt, cfg):
    sigma, t, alpha = pt["sigma"], pt["t"], pt["alpha"]
    val = afe.s1_sum(sigma, t, alpha)
    x = t / _2PI
    n_max = int(math.floor(x)) if float(math.floor(x)) != x else int(x) - 1
    bound = float(np.sum(np.arange(1, n_max + 1, dtype=float) ** (sigma - 1.0)))
    params = {"sigma": sigma, "t": t, "alpha": alpha, "bound": bound, "within_bound": abs(val) <= bound + 1e-12}
    return [identities.IdentityReport("s1_sum", params, val, val, 0.0, 0.0, 0)]


def _run_theorem1(pt, cfg):
    recs = afe.theorem1_check(int(pt["k"]), [pt["t"]], cfg)
    out = []
    for r in recs:
        out.append(identities.IdentityReport(
            "theorem1", {"k": r["k"], "t": r["t"], "ratio": r["ratio"], "Ik": r["Ik"]},
            r["abs_zeta"], r["ratio"], 0.0, 0.0, 0))
    return out


def _run_rane(pt, cfg):
    s = complex(pt["sigma"], pt["t"])
    alpha, M = pt["alpha"], int(pt["M"])
    val = fourier.rane_representation(s, alpha, M, cfg)
    ref = complex(special.hurwitz_zeta1(s, alpha, cfg))
    return [identities.IdentityReport.build(
        "rane", {"s": s, "alpha": alpha, "M": M}, ref, val)]


def _run_tail_lemma(pt, cfg):
    s = complex(pt.get("sigma", 0.5), pt["t"])
    alpha = pt["factor"] * (pt["t"] / _2PI)
    d = fourier.tail_lemma_check(s, alpha, pt.get("eta", 1.0), cfg)
    params = {"sigma": s.real, "t": s.imag, "alpha": alpha,
              "ratio": d["ratio"], "deriv_ratio": d["deriv_ratio"]}
    return [identities.IdentityReport(
        "tail_lemma", params, d["tail_abs"], 0.0, d["tail_abs"], d["ratio"], 0)]


def _run_qn_modes(pt, cfg):
    n = int(pt["n"])
    u = complex(pt["u_re"], pt["u_im"])
    v = u.conjugate()
    qd = fourier.qn_direct(n, u, v, cfg)
    qc = fourier.qn_continued(n, u, v, cfg=cfg)
    return [identities.IdentityReport.build("qn_modes", {"n": n, "u": u, "v": v}, qd, qc)]


def _run_highfreq(pt, cfg):
    t = pt["t"]
    u = complex(pt.get("sigma", 0.5), t)
    d = fourier.highfreq_tail_check(int(pt["n"]), u, u.conjugate(), pt.get("eta", 1.0), cfg)
    params = {"t": t, "n": int(pt["n"]), "ratio": d["ratio"], "envelope": d["envelope"]}
    return [identities.IdentityReport(
        "highfreq_tail", params, d["integral_abs"], 0.0, d["integral_abs"], d["ratio"],
        d["evaluations"])]


def _run_parseval4(pt, cfg):
    u = complex(pt["sigma"], pt["t"])
    rep = fourier.parseval_fourth_moment(u, pt.get("eta", 1.0), cfg=cfg)
    return [rep]


def _run_theorem2(pt, cfg):
    recs = fourier.theorem2_check([pt["t"]], pt.get("eta", 1.0), cfg)
    out = []
    for r in recs:
        out.append(identities.IdentityReport(
            "theorem2", {"t": r["t"], "eta": r["eta"], "ratio": r["ratio"],
                         "coeff_sum": r["coeff_sum"]},
            r["abs_zeta_4"], r["ratio"], 0.0, 0.0, r["evaluations"]))
    return out


def _run_kernel_norms(pt, cfg):
    n = int(pt["N"])
    l1 = afe.kernel_norm_power(n, 1.0, cfg)
    l2sq = afe.kernel_norm_power(n, 2.0, cfg)
    params = {"N": n, "l1_over_logN": l1 / math.log(n) if n > 1 else l1}
    return [identities.IdentityReport.build("kernel_norms", params, complex(l2sq), complex(n))]


@dataclasses.dataclass(frozen=True)
class Suite:
    suite_id: str
    anchor: str
    description: str
    runner: object
    default_grid: GridSpec
    default_tol: float | None = None
    judge: object = None

    def judge_rows(self, rows: list[dict], tol: float | None) -> bool:
        if self.judge is not None:
            return self.judge(rows)
        return _judge_tol(rows, tol if tol is not None else self.default_tol)


def _judge_i1(rows):
    if any("error" in r["params"] for r in rows):
        return False
    return all(abs(float(r["params"]["corrected_diff_t2"])) <= 100.0 for r in rows) and all(
        abs(complex(r["lhs"]) - complex(r["rhs"])) <= 0.05 for r in rows
    )


def _judge_remark219(rows):
    return all("error" not in r["params"] for r in rows) and all(
        float(r["params"]["scaled_t2"]) <= 20.0 for r in rows)


def _judge_lemma3(rows):
    if any("error" in r["params"] for r in rows):
        return False
    scaled = [float(r["params"]["scaled"]) for r in rows]
    strips = [float(r["params"]["strip_over_envelope"]) for r in rows]
    return max(scaled) <= 10.0 * max(scaled[0], 0.05) and max(strips) <= 1.0


def _judge_Ik(rows):
    if any("error" in r["params"] for r in rows):
        return False
    by_t: dict = {}
    for r in rows:
        by_t.setdefault(float(r["params"]["t"]), {})[int(r["params"]["k"])] = float(r["lhs"].real)
    for vals in by_t.values():
        if 1 in vals and 2 in vals and vals[2] < vals[1] ** 2 - 1e-9:
            return False
    return all(float(r["lhs"].real) >= 0.0 for r in rows)


def _judge_Jk(rows):
    if any("error" in r["params"] for r in rows):
        return False
    for r in rows:
        if int(r["params"]["k"]) == 1 and r["rel_residual"] > 0.15:
            return False
    return True


def _judge_s1(rows):
    return all(r["params"].get("within_bound", False) for r in rows)


def _judge_theorem1(rows):
    if any("error" in r["params"] for r in rows):
        return False
    ratios = [float(r["params"]["ratio"]) for r in rows]
    med = float(np.median(ratios))
    return med > 0 and max(ratios) / med <= 5.0


def _judge_rane(rows):
    return all("error" not in r["params"] for r in rows) and all(
        r["abs_residual"] <= 1e-3 for r in rows)


def _judge_ratio_record(bound: float, key: str = "ratio"):
    def judge(rows):
        return all("error" not in r["params"] for r in rows) and all(
            float(r["params"][key]) <= bound for r in rows)

    return judge


def _judge_theorem2(rows):
    if any("error" in r["params"] for r in rows):
        return False
    return all(math.isfinite(float(r["params"]["ratio"])) for r in rows) and all(
        float(r["params"]["ratio"]) <= 10.0 for r in rows)


def _judge_kernel_norms(rows):
    if any("error" in r["params"] for r in rows):
        return False
    if any(r["rel_residual"] > 1e-10 for r in rows):  # Parseval: L2^2 = N
        return False
    l1 = [float(r["params"]["l1_over_logN"]) for r in rows]
    return all(l1[i + 1] <= 1.6 * l1[i] and l1[i + 1] >= l1[i] / 1.6 for i in range(len(l1) - 1))


SUITES: dict[str, Suite] = {}


def _register(suite: Suite) -> None:
    SUITES[suite.suite_id] = suite


_register(Suite("square_identity", "Eq. 1.5", "contour identity for |zeta1|^2", _run_square,
                GridSpec({"sigma": _axis(1.2, 1.5, 2.0), "t": _axis(1.0, 5.0, 10.0),
                          "alpha": _axis(0.0, 0.5, 1.0)}), 1e-6))
_register(Suite("f_routes", "Eq. th1.5", "series vs contour route for f(u,v,alpha)", _run_f_routes,
                GridSpec({"u_re": _axis(2.0, 3.0), "v_re": _axis(2.0, 3.0),
                          "alpha": _axis(0.0, 0.5, 1.0)}), 1e-8))
_register(Suite("quadratic_moment", "Eq. 1.11", "quadratic unit moment", _run_quadratic,
                GridSpec({"u_re": _axis(2.0, 3.0, 4.0), "v_re": _axis(2.0, 3.0, 4.0)}), 1e-7))
_register(Suite("triple_moment", "Eq. 1.12", "triple unit moment", _run_triple,
                GridSpec({"re": _axis(2.0, 2.5), "im": _axis(0.0, 1.0)}), 1e-6))
_register(Suite("quadruple_moment", "Eq. 1.13", "quadruple unit moment (15 RHS terms)", _run_quadruple,
                GridSpec({"re": _axis(2.0, 2.5), "im": _axis(0.0, 1.0)}), 1e-6))
_register(Suite("katsurada", "Eq. I1", "explicit quadratic-moment identity", _run_katsurada,
                GridSpec({"u_re": _axis(1.3, 1.5, 1.7), "u_im": _axis(0.5, 2.0)}), 1e-6))
_register(Suite("mellin_tail", "Eq. 2.12", "weighted full-line tail closed form", _run_mellin,
                GridSpec({"u_re": _axis(2.0, 2.5, 3.0), "v_re": _axis(0.0, 0.3, 0.5)}), 1e-8))
_register(Suite("unit_recursion", "Eq. 2.13", "unit-interval recursion", _run_unit_recursion,
                GridSpec({"u_re": _axis(2.0, 3.0), "v_re": _axis(0.0, 0.5, 1.0, 1.5)}), 1e-7))
_register(Suite("i1_asymptotic", "Eq. 1.5 (sect. 1)", "I_1(t) against log(t/2pi)+gamma", _run_i1,
                GridSpec({"t": AxisSpec(50.0, 800.0, 5, "geometric")}), None, _judge_i1))
_register(Suite("remark_219", "Eq. 2.19", "large-t unit integral against (1/it) sum", _run_remark219,
                GridSpec({"t": _axis(50.0, 100.0)}), None, _judge_remark219))
_register(Suite("afe_zeta", "Eq. fok1", "zeta approximate functional equation", _run_afe_zeta,
                GridSpec({"sigma": _axis(0.3, 0.5, 0.7), "t": AxisSpec(25.0, 1600.0, 7, "geometric")}),
                None, lambda rows: _judge_bounded(rows, "scaled")))
_register(Suite("afe_hurwitz", "Eq. fok2", "shifted-series AFE with twisted sum", _run_afe_hurwitz,
                GridSpec({"sigma": _axis(0.5), "t": _axis(100.0, 500.0),
                          "alpha": _axis(0.1, 0.3, 0.5, 0.7, 0.9)}),
                None, lambda rows: _judge_bounded(rows, "scaled", spread_max=6.0)))
_register(Suite("projection", "Eqs. fok3/fok5", "exact kernel projection identities", _run_projection,
                GridSpec({"N": _axis(7, 25, 50, 100)}), 1e-10))
_register(Suite("weak_afe", "Eq. 1.6", "two-integral kernel functional equation", _run_weak_afe,
                GridSpec({"sigma": _axis(0.3, 0.5, 0.7), "t": AxisSpec(25.0, 400.0, 5, "geometric")}),
                None, lambda rows: _judge_bounded(rows, "scaled")))
_register(Suite("lemma3", "Lemma 3", "explicit kernel-sum integral evaluation", _run_lemma3,
                GridSpec({"t": _axis(50.0, 100.0, 200.0, 400.0)}), None, _judge_lemma3))
_register(Suite("power_mean_Ik", "Eq. 1.8", "2k-th power mean of zeta1 on the critical line",
                _run_power_mean_Ik, GridSpec({"k": _axis(1, 2), "t": _axis(50.0, 100.0)}),
                None, _judge_Ik))
_register(Suite("power_mean_Jk", "Eq. zetameans", "2k-th power mean of zeta", _run_power_mean_Jk,
                GridSpec({"k": _axis(1), "T": _axis(50.0, 100.0)}), None, _judge_Jk))
_register(Suite("s1_sum", "Eq. 1.16", "dominant exponential sum S_1", _run_s1,
                GridSpec({"sigma": _axis(0.5), "t": _axis(66.0, 100.0), "alpha": _axis(0.0, 0.25, 0.5)}),
                None, _judge_s1))
_register(Suite("theorem1", "Thm 1 (Eq. Fok5)", "power-mean bound on |zeta| via I_k", _run_theorem1,
                GridSpec({"k": _axis(1, 2), "t": AxisSpec(50.0, 800.0, 5, "geometric")}),
                None, _judge_theorem1))
_register(Suite("rane", "Eq. Raneeq", "oscillatory-tail representation of zeta1", _run_rane,
                GridSpec({"sigma": _axis(0.5, 1.5), "t": _axis(0.0, 10.0),
                          "alpha": _axis(2.0, 5.0), "M": _axis(200)}), None, _judge_rane))
_register(Suite("tail_lemma", "Lemma intbyparts", "oscillatory tail size of zeta1", _run_tail_lemma,
                GridSpec({"t": _axis(50.0, 100.0), "factor": _axis(2.0, 4.0)}),
                None, _judge_ratio_record(1.0)))
_register(Suite("qn_modes", "Eq. convhalf", "direct vs continued product coefficients", _run_qn_modes,
                GridSpec({"n": _axis(0, 2, 5), "u_re": _axis(2.0), "u_im": _axis(1.0)}), 1e-6))
_register(Suite("highfreq_tail", "Lemma (sect. 5, final)", "high-frequency coefficient bound",
                _run_highfreq, GridSpec({"t": _axis(50.0), "n": _axis(20, 40, 80)}),
                None, _judge_ratio_record(1.0)))
_register(Suite("parseval4", "Parseval (sect. 5)", "fourth-moment Parseval identity", _run_parseval4,
                GridSpec({"sigma": _axis(0.5), "t": _axis(50.0)}), 1e-3))
_register(Suite("theorem2", "Thm 2", "fourth-power bound through truncated coefficients",
                _run_theorem2, GridSpec({"t": _axis(50.0, 100.0, 200.0, 400.0)}),
                None, _judge_theorem2))
_register(Suite("kernel_norms", "Lemma 1", "Dirichlet-kernel norm growth", _run_kernel_norms,
                GridSpec({"N": _axis(10, 100, 1000, 10000)}), None, _judge_kernel_norms))


def config_hash(suite_id: str, grid: GridSpec, cfg: EvalConfig, tolerance) -> str:
    payload = json.dumps(
        {
            "suite": suite_id,
            "grid": grid.describe(),
            "cfg": dataclasses.asdict(cfg),
            "tolerance": tolerance,
        },
        sort_keys=True,
        default=_jsonable,
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _run_point(args):
    suite_id, pt, cfg = args
    suite = SUITES[suite_id]
    t0 = time.perf_counter()
    try:
        reps = suite.runner(pt, cfg)
        dt = time.perf_counter() - t0
        rows = []
        for rep in reps:
            params = dict(rep.params)
            params["point"] = pt
            rows.append(_row(rep.identity_id, params, rep.lhs, rep.rhs, rep.evaluations, dt))
            rows[-1]["abs_residual"] = rep.abs_residual
            rows[-1]["rel_residual"] = rep.rel_residual
        return rows
    except ZetaverError as exc:
        dt = time.perf_counter() - t0
        return [_row(suite_id, {"point": pt, "error": f"{type(exc).__name__}: {exc}"},
                     complex("nan"), complex("nan"), 0, dt)]


def run_suite(spec: SuiteSpec, threads: int = 1) -> ReportFile:
    """Run one suite over its grid; returns the report with rows in grid order."""
    suite = SUITES[spec.suite_id]
    grid = spec.grid if spec.grid is not None else suite.default_grid
    pts = grid.points()
    if not pts:
        raise ConfigError("empty grid")
    tol = spec.tolerance if spec.tolerance is not None else suite.default_tol
    jobs = [(spec.suite_id, pt, spec.cfg) for pt in pts]
    if threads > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=threads) as ex:
            chunks = list(ex.map(_run_point, jobs))
    else:
        chunks = [_run_point(j) for j in jobs]
    rows = [r for chunk in chunks for r in chunk]
    passed = suite.judge_rows(rows, tol)
    header = {
        "suite": spec.suite_id,
        "anchor": suite.anchor,
        "config_hash": config_hash(spec.suite_id, grid, spec.cfg, tol),
        "tolerance": tol,
        "version": "0.1.0",
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "rows": len(rows),
    }
    return ReportFile(header, rows, passed)


def list_suites() -> list[dict]:
    out = []
    for sid, suite in sorted(SUITES.items()):
        out.append(
            {
                "suite_id": sid,
                "anchor": suite.anchor,
                "description": suite.description,
                "default_tol": suite.default_tol,
                "grid": suite.default_grid.describe(),
            }
        )
    return out
