"""Monte Carlo comparison of trend estimators.

Each cell of the ``(omega, phase)`` grid simulates ``replications`` series

    x_n = t_n + A sin(2 pi omega n + phase) + eps_n,   n = 1..N,

where replication ``i`` draws its noise with seed ``base_seed + i``. Every
configured method estimates ``t_n`` and the estimates are scored by the
ensemble RMSE. Methods are written as

    basic-ssa(1-2)     Basic SSA, trend = ET1..ET2
    projssa(1,1)       ProjSSA(q, p), trend = the q + p projection triples
    regression(1)      least-squares polynomial of the given degree

and any of them may carry a ``+refit`` suffix, which replaces the SSA
trend by its least-squares polynomial of the trend's degree.
"""

import ast
import configparser
import csv
import io
import operator
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, fields, replace
from importlib import resources
from pathlib import Path
from typing import NamedTuple

import numpy as np

from . import signals
from .decomposition import basic_ssa_decompose
from .errors import ConfigInvalid, SSAError
from .projection import proj_ssa
from .reconstruction import _parse_indices, reconstruct_trend
from .regression import evaluate, polyfit, refit
from .series import hankelize, rmse

METHOD_KINDS = ("basic-ssa", "projssa", "regression")
RESULT_HEADER = ("method", "omega", "phase", "rmse", "replications", "base_seed")


@dataclass(frozen=True)
class Method:
    kind: str
    params: tuple
    refit: bool = False

    def __post_init__(self):
        if self.kind not in METHOD_KINDS:
            raise ConfigInvalid(f"unknown method kind {self.kind!r}")
        if self.kind == "basic-ssa" and not self.params:
            raise ConfigInvalid("basic-ssa needs an explicit ET group, e.g. basic-ssa(1-2)")
        if self.kind == "projssa" and (len(self.params) != 2 or min(self.params) < 0
                                       or sum(self.params) == 0):
            raise ConfigInvalid(f"projssa needs (q, p) with q + p > 0, got {self.params}")
        if self.kind == "regression":
            if len(self.params) != 1 or self.params[0] < 0:
                raise ConfigInvalid(f"regression needs one degree, got {self.params}")
            if self.refit:
                raise ConfigInvalid("refit applies to SSA methods only")

    @classmethod
    def parse(cls, text):
        m = re.fullmatch(r"\s*([a-z-]+)\s*\(([^)]*)\)\s*(\+\s*refit)?\s*", text)
        if not m:
            raise ConfigInvalid(f"cannot parse method {text!r}")
        kind, args, suffix = m.groups()
        try:
            if kind == "basic-ssa":
                params = tuple(_parse_indices(args))
            else:
                params = tuple(int(a) for a in args.split(",") if a.strip())
        except (SSAError, ValueError) as exc:
            raise ConfigInvalid(f"bad arguments in method {text!r}") from exc
        return cls(kind, params, bool(suffix))

    @property
    def base(self):
        return replace(self, refit=False)

    def __str__(self):
        if self.kind == "basic-ssa":
            args = _format_indices(self.params)
        else:
            args = ",".join(map(str, self.params))
        return f"{self.kind}({args})" + ("+refit" if self.refit else "")


def _format_indices(idx):
    idx = sorted(idx)
    if idx == list(range(idx[0], idx[-1] + 1)) and len(idx) > 1:
        return f"{idx[0]}-{idx[-1]}"
    return ",".join(map(str, idx))


@dataclass(frozen=True)
class Trend:
    """``linear(a, b)``: ``a*n + b``; ``cubic(c)``: ``c*n**3``."""

    kind: str
    params: tuple

    def __post_init__(self):
        sizes = {"linear": 2, "cubic": 1}
        if self.kind not in sizes or len(self.params) != sizes[self.kind]:
            raise ConfigInvalid(f"invalid trend {self.kind}{self.params}")

    @classmethod
    def parse(cls, text):
        m = re.fullmatch(r"\s*(linear|cubic)\s*\(([^)]*)\)\s*", text)
        if not m:
            raise ConfigInvalid(f"cannot parse trend {text!r}")
        try:
            params = tuple(float(_eval_number(a)) for a in m.group(2).split(","))
        except ValueError as exc:
            raise ConfigInvalid(f"bad trend arguments in {text!r}") from exc
        return cls(m.group(1), params)

    @property
    def degree(self):
        return 1 if self.kind == "linear" else 3

    @property
    def root(self):
        if self.kind == "linear":
            return signals.linear(*self.params)
        return signals.polynomial((0.0, 0.0, 0.0, self.params[0]))

    def __str__(self):
        return f"{self.kind}({','.join(repr(p) for p in self.params)})"


def default_omegas():
    return tuple(float(w) for w in np.round(np.arange(0.02, 0.1 + 1e-9, 0.005), 10))


@dataclass(frozen=True)
class ExperimentConfig:
    length: int = 199
    window: int = 100
    trend: Trend = Trend("linear", (1.0, -100.0))
    amplitude: float = 1.0
    omegas: tuple = field(default_factory=default_omegas)
    phases: tuple = (0.0,)
    sigma: float = 0.0
    replications: int = 1
    base_seed: int = 0
    methods: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "omegas", tuple(float(w) for w in self.omegas))
        object.__setattr__(self, "phases", tuple(float(f) for f in self.phases))
        object.__setattr__(self, "methods", tuple(
            m if isinstance(m, Method) else Method.parse(m) for m in self.methods))
        if isinstance(self.trend, str):
            object.__setattr__(self, "trend", Trend.parse(self.trend))
        if self.replications < 1:
            raise ConfigInvalid("replications must be at least 1")
        if not self.omegas or not self.phases:
            raise ConfigInvalid("the omega grid and the phase set must be nonempty")
        if not self.methods:
            raise ConfigInvalid("no methods configured")
        if self.sigma < 0:
            raise ConfigInvalid("sigma must be nonnegative")
        if self.amplitude != 0 and not all(0 < w < 0.5 for w in self.omegas):
            raise ConfigInvalid("frequencies must lie in (0, 0.5)")
        if not 1 < self.window < self.length:
            raise ConfigInvalid(f"window {self.window} must satisfy 1 < L < N={self.length}")
        K = self.length - self.window + 1
        for m in self.methods:
            if m.kind == "projssa" and (m.params[0] > K or m.params[1] > self.window):
                raise ConfigInvalid(f"{m} needs q <= K={K} and p <= L={self.window}")
            if m.kind == "regression" and m.params[0] + 1 > self.length:
                raise ConfigInvalid(f"{m} has too high a degree for N={self.length}")

    @property
    def truth(self):
        return signals.generate([self.trend.root], self.length)

    def series(self, omega, phase, replication):
        """The simulated series of one replication in one grid cell."""
        x = self.truth
        if self.amplitude != 0:
            x = x + signals.generate([signals.sine(self.amplitude, omega, phase)], self.length)
        if self.sigma > 0:
            x = x + signals.gaussian_noise(self.length, self.sigma, self.base_seed + replication)
        return x


def method_trend_estimate(method, series, cfg, _cache=None):
    """Trend estimate of one method on one series.

    ``_cache`` lets the refit variant reuse the plain SSA estimate.
    """
    if isinstance(method, str):
        method = Method.parse(method)
    cache = {} if _cache is None else _cache
    base = method.base
    if base not in cache:
        if base.kind == "regression":
            est = evaluate(polyfit(series, base.params[0]), len(series))
        elif base.kind == "projssa":
            d = proj_ssa(series, cfg.window, *base.params)
            est = reconstruct_trend(d)
        else:
            d = basic_ssa_decompose(series, cfg.window)
            est = hankelize(d.grouped(base.params))
        cache[base] = est
    est = cache[base]
    return refit(est, cfg.trend.degree) if method.refit else est


class ResultRow(NamedTuple):
    method: str
    omega: float
    phase: float
    rmse: float
    replications: int
    base_seed: int


class ExperimentResult(list):
    """Rows of ``(method, omega, phase, rmse, replications, base_seed)``."""

    def rmse(self, method, omega=None, phase=None):
        """RMSE values of ``method`` over the grid, optionally at one omega/phase."""
        method = str(Method.parse(method)) if isinstance(method, str) else str(method)
        vals = [r.rmse for r in self
                if r.method == method
                and (omega is None or np.isclose(r.omega, omega))
                and (phase is None or np.isclose(r.phase, phase))]
        if not vals:
            raise KeyError(method)
        return vals[0] if omega is not None and phase is not None else np.array(vals)

    def to_csv(self, target=None):
        """Write the rows as CSV to a path or file object; return the text when no target."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(RESULT_HEADER)
        for r in self:
            w.writerow([r.method, f"{r.omega:.17g}", f"{r.phase:.17g}", f"{r.rmse:.17g}",
                        r.replications, r.base_seed])
        text = buf.getvalue()
        if target is None:
            return text
        if hasattr(target, "write"):
            target.write(text)
        else:
            Path(target).write_text(text)
        return text


def _replication(cfg, omega, phase, i):
    x = cfg.series(omega, phase, i)
    cache = {}
    return [method_trend_estimate(m, x, cfg, cache) for m in cfg.methods]


def run_experiment(cfg, workers=1):
    """Run every method on every grid cell and replication.

    Replications may run on ``workers`` threads; estimates are always
    collected in replication order, so the result does not depend on
    ``workers``.
    """
    truth = cfg.truth
    result = ExperimentResult()
    pool = ThreadPoolExecutor(workers) if workers > 1 else None
    try:
        for omega in cfg.omegas:
            for phase in cfg.phases:
                reps = range(cfg.replications)
                if pool is None:
                    ests = [_replication(cfg, omega, phase, i) for i in reps]
                else:
                    ests = list(pool.map(lambda i: _replication(cfg, omega, phase, i), reps))
                for k, m in enumerate(cfg.methods):
                    ensemble = np.array([e[k] for e in ests])
                    result.append(ResultRow(str(m), omega, phase, rmse(ensemble, truth),
                                            cfg.replications, cfg.base_seed))
    finally:
        if pool is not None:
            pool.shutdown()
    return result


# --- config files -----------------------------------------------------------

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
        ast.Div: operator.truediv, ast.USub: operator.neg, ast.UAdd: operator.pos}


def _eval_number(text):
    """Evaluate a numeric literal that may use ``pi`` and ``+ - * /``."""
    def ev(node):
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return node.value
        if isinstance(node, ast.Name) and node.id == "pi":
            return np.pi
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.operand))
        raise ValueError(f"unsupported expression {text!r}")
    try:
        return ev(ast.parse(text.strip(), mode="eval").body)
    except SyntaxError as exc:
        raise ValueError(f"cannot parse number {text!r}") from exc


def parse_grid(text):
    """``"0.02:0.1:0.005"`` (inclusive) or a comma-separated list."""
    text = text.strip()
    if ":" in text:
        start, stop, step = (float(_eval_number(t)) for t in text.split(":"))
        if step <= 0:
            raise ValueError("grid step must be positive")
        count = int(np.floor((stop - start) / step + 1e-9)) + 1
        return tuple(float(v) for v in np.round(start + step * np.arange(count), 12))
    return tuple(float(_eval_number(t)) for t in text.split(",") if t.strip())


_CONVERTERS = {
    "length": int,
    "window": int,
    "trend": Trend.parse,
    "amplitude": lambda s: float(_eval_number(s)),
    "omegas": parse_grid,
    "phases": parse_grid,
    "sigma": lambda s: float(_eval_number(s)),
    "replications": int,
    "base_seed": int,
    "methods": lambda s: tuple(Method.parse(m) for m in s.split(";") if m.strip()),
}
CONFIG_KEYS = tuple(f.name for f in fields(ExperimentConfig))


def shipped_configs():
    """Names of the configurations bundled with the package."""
    root = resources.files("projssa") / "configs"
    return sorted(p.name[:-4] for p in root.iterdir() if p.name.endswith(".cfg"))


def read_config_text(name_or_path):
    """Text of a config file, or of the shipped config of that name."""
    path = Path(name_or_path)
    if path.is_file():
        return path.read_text()
    if name_or_path in shipped_configs():
        return (resources.files("projssa") / "configs" / f"{name_or_path}.cfg").read_text()
    raise ConfigInvalid(f"no config file or shipped config named {name_or_path!r}")


def parse_config(text, overrides=None):
    """Build an :class:`ExperimentConfig` from ``key = value`` lines.

    ``overrides`` maps keys to raw string values and wins over the text.
    """
    cp = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#",))
    cp.optionxform = str
    try:
        cp.read_string("[experiment]\n" + (text or ""))
    except configparser.Error as exc:
        raise ConfigInvalid(f"cannot parse config: {exc}") from exc
    raw = dict(cp["experiment"])
    raw.update({k: v for k, v in (overrides or {}).items() if v is not None})
    unknown = sorted(set(raw) - set(CONFIG_KEYS))
    if unknown:
        raise ConfigInvalid(f"unknown config keys: {', '.join(unknown)}")
    kwargs = {}
    for key, value in raw.items():
        try:
            kwargs[key] = _CONVERTERS[key](str(value))
        except (ValueError, SSAError) as exc:
            raise ConfigInvalid(f"invalid value for {key}: {value!r} ({exc})") from exc
    return ExperimentConfig(**kwargs)


def load_config(name_or_path, overrides=None):
    return parse_config(read_config_text(name_or_path), overrides)
