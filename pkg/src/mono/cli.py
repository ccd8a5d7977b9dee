"""Command-line front end.

Every subcommand builds a RunConfig and hands it to ``run``, which returns
``(exit_code, report)``.  Exit codes: 0 holds, 1 fails (the report carries a
witness), 2 input error, 3 inconclusive.  JSON reports are canonical
(sorted keys, no timings), so ``mono replay`` can rerun one and compare.
"""

import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Optional, Tuple

import click

from . import acceptance
from .algcore import Algebra, algebra_from_json, triangular_algebra
from .approx import rmon
from .cotilt import (IDENTITIES, Catalog, build_mtilt, catalog_from_json, derive_hypothesis,
                     identity_check, is_cotilting, is_tilting, perp_left, perp_right,
                     reciprocity_check)
from .errors import EXCEEDS, Decision, Inconclusive, InputError, is_finite
from .exactla import Matrix
from .fintype import end_algebra, enumerate_sn_indecomposables, global_dimension, thm51_check
from .fixtures import (DA, algebra_by_name, kA2, kA2_modules, lambda2, regular,
                       rem310_catalog)
from .goren import gproj_membership, profile, thm44_check
from .modrep import (Module, decompose, dsum, fitting_decompose, indec_injectives,
                     indec_projectives, module_from_json, simples)
from .morcat import (MorObject, SubcatSpec, fn_membership, m_of, mor_from_json, p_of,
                     sn_membership, to_flat)

EXIT_HOLDS, EXIT_FAILS, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3
STATUS = {0: "holds", 1: "fails", 2: "input_error", 3: "inconclusive"}
DEFAULT_CAPS = {"resolution": 32, "depth": 16, "dim": 6}


@dataclass
class RunConfig:
    command: str
    args: Dict = field(default_factory=dict)
    caps: Dict = field(default_factory=lambda: dict(DEFAULT_CAPS))
    seed: int = 0
    format: str = "text"


def caps_from_env(env: Optional[str]) -> Dict[str, int]:
    """Parse MONO_CAPS: either "32,16,6" or "resolution=32,depth=16,dim=6"."""
    caps = dict(DEFAULT_CAPS)
    if not env:
        return caps
    parts = [p.strip() for p in env.split(",") if p.strip()]
    try:
        if all("=" in p for p in parts):
            for p in parts:
                k, v = p.split("=", 1)
                k = k.strip().lower()
                if k not in caps:
                    raise InputError(f"MONO_CAPS: unknown cap {k!r}")
                caps[k] = int(v)
        else:
            for k, v in zip(("resolution", "depth", "dim"), parts):
                caps[k] = int(v)
    except ValueError as exc:
        raise InputError(f"MONO_CAPS: {exc}") from exc
    if any(v < 0 for v in caps.values()):
        raise InputError("MONO_CAPS: caps must be non-negative")
    return caps


# ---------------------------------------------------------------------------
# JSON conversion


def jsonable(x):
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, float):
        return x
    if x is EXCEEDS:
        return "exceeds cap"
    if isinstance(x, Matrix):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, Decision):
        return {"holds": x.holds, "witness": jsonable(x.witness),
                "certificate": jsonable(x.certificate), "detail": x.detail}
    if hasattr(x, "to_json"):
        return jsonable(x.to_json())
    return str(x)


def dumps(report: dict) -> str:
    return json.dumps(jsonable(report), sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# input resolution


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})") from exc


def _is_file(spec: Optional[str]) -> bool:
    return bool(spec) and (spec.endswith(".json") or os.path.sep in spec or os.path.isfile(spec))


class Inputs:
    """Lazily resolved algebra, modules, chains and catalogs for one run."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.args = cfg.args
        self._alg: Optional[Algebra] = None

    # algebra ---------------------------------------------------------------
    def algebra(self) -> Algebra:
        if self._alg is None:
            self._alg = self._pick_algebra()
        return self._alg

    def _pick_algebra(self) -> Algebra:
        spec = self.args.get("algebra")
        if spec:
            return self._named_algebra(spec)
        cat = self.args.get("catalog")
        if _is_file(cat):
            obj = _load_json(cat)
            if isinstance(obj, dict) and isinstance(obj.get("algebra"), dict):
                return algebra_from_json(obj["algebra"])
        if cat and cat.startswith("oracle:"):
            return self._named_algebra(cat.split(":")[1])
        for key in ("x", "T", "M", "mor"):
            v = self.args.get(key)
            if _is_file(v):
                obj = _load_json(v)
                name = obj.get("algebra") if isinstance(obj, dict) else None
                if isinstance(name, str):
                    try:
                        return algebra_by_name(name)
                    except KeyError:
                        pass
        return kA2()

    def _named_algebra(self, spec: str) -> Algebra:
        if _is_file(spec):
            obj = _load_json(spec)
            if isinstance(obj, dict) and "objects" in obj and isinstance(obj.get("algebra"), dict):
                obj = obj["algebra"]
            return algebra_from_json(obj)
        try:
            return algebra_by_name(spec)
        except KeyError:
            raise InputError(f"unknown algebra {spec!r}; use a JSON file or one of "
                             "kA2, lambda2, lambda<t>, square, kA3, QxQ") from None

    # modules ---------------------------------------------------------------
    def module(self, spec: str, a: Optional[Algebra] = None) -> Module:
        a = a or self.algebra()
        if _is_file(spec):
            obj = _load_json(spec)
            if isinstance(obj, dict) and "branches" in obj:
                return to_flat(mor_from_json(obj, a))
            return module_from_json(obj, a)
        if spec.startswith(("m:", "p:", "rem310:")):
            return to_flat(self.mor(spec))
        parts = [self._named_module(p.strip(), a) for p in spec.split("+") if p.strip()]
        if not parts:
            raise InputError(f"empty module spec {spec!r}")
        m = parts[0] if len(parts) == 1 else dsum(parts, a)
        m.name = m.name or spec
        if len(parts) > 1:
            m.name = spec
        return m

    def _named_module(self, nm: str, a: Algebra) -> Module:
        if nm == "DA":
            return DA(a)
        if nm == "A":
            return regular(a)
        if a is kA2() and nm in kA2_modules():
            return kA2_modules()[nm]
        kind, num = nm[:1], nm[1:]
        if kind in "SPIJ" and num.isdigit():
            k = int(num)
            if kind == "J":
                if not a.name.startswith("Lambda") or k < 1 or k > a.dim:
                    raise InputError(f"J{k} needs a truncated polynomial algebra of dim >= {k}")
                from .fixtures import lambda_modules
                return lambda_modules(a.dim)[k - 1]
            pool = {"S": simples, "P": indec_projectives, "I": indec_injectives}[kind](a)
            if 1 <= k <= len(pool):
                m = pool[k - 1]
                m.name = m.name or nm
                return m
        raise InputError(f"unknown module {nm!r}; use a JSON file, DA, A, S<i>, P<i>, I<i>, "
                         "J<k>, joined with '+'")

    # chains ----------------------------------------------------------------
    def mor(self, spec: str, n: Optional[int] = None) -> MorObject:
        a = self.algebra()
        n = n or int(self.args.get("n") or 2)
        if _is_file(spec):
            obj = _load_json(spec)
            if not isinstance(obj, dict):
                raise InputError("chain JSON must be an object")
            return mor_from_json(obj, a)
        if spec.startswith("m:"):
            return m_of(self.module(spec[2:], a), n)
        if spec.startswith("p:"):
            return p_of(self.module(spec[2:], a), n)
        if spec.startswith("rem310:"):
            key = spec[7:]
            cat = self._coerce(rem310_catalog(), a)
            for i, o in enumerate(cat.objects):
                if key == str(i) or key == o.name:
                    return o
            raise InputError(f"no catalog object {key!r}")
        raise InputError(f"unknown chain spec {spec!r}; use a JSON file, m:<module>, "
                         "p:<module> or rem310:<index|name>")

    # catalogs --------------------------------------------------------------
    def catalog(self, spec: Optional[str] = None) -> Catalog:
        spec = spec or self.args.get("catalog")
        if not spec:
            raise InputError("a catalog is required (--catalog)")
        a = self.algebra()
        if spec == "rem310":
            return self._coerce(rem310_catalog(), a)
        if spec.startswith("oracle:"):
            bits = spec.split(":")
            try:
                alg, n, cap = bits[1], int(bits[2]), int(bits[3])
            except (IndexError, ValueError):
                raise InputError("oracle catalogs are oracle:<algebra>:<n>:<dim cap>[:mor]") \
                    from None
            mono = not (len(bits) > 4 and bits[4] == "mor")
            cat = enumerate_sn_indecomposables(self._named_algebra(alg), n, cap,
                                               seed=self.cfg.seed, mono=mono)
            return self._coerce(cat, a)
        obj = _load_json(spec)
        return catalog_from_json(obj, a)

    @staticmethod
    def _coerce(cat: Catalog, a: Algebra) -> Catalog:
        if cat.algebra is a:
            return cat
        if cat.algebra.basis_labels != a.basis_labels:
            raise InputError(f"catalog is over {cat.algebra.name}, not {a.name}")
        return catalog_from_json(cat.to_json(), a)


# ---------------------------------------------------------------------------
# handlers: each returns (exit code, result, witness)


def _verdict(holds: bool) -> int:
    return EXIT_HOLDS if holds else EXIT_FAILS


def _mor_summary(x: MorObject) -> dict:
    return {"dims": x.dims, "object": x.to_json()}


def h_rmon(cfg, inp):
    x = inp.mor(cfg.args["mor"])
    r = rmon(x, int(cfg.args.get("choice") or 0))
    res = {"input": x.to_json(), "output": r.output.to_json(),
           "counit": [c.matrix for c in r.counit.components],
           "kernel": r.kernel.to_json(),
           "kernel_inclusion": [c.matrix for c in r.kernel_incl.components],
           "output_in_S_n": sn_membership(r.output).holds}
    return EXIT_HOLDS, res, None


def _subcat(inp, cond: Optional[str]):
    cap = inp.cfg.caps["resolution"]
    if not cond or cond == "all":
        return SubcatSpec.all()
    side, _, mod = cond.partition(":")
    if not mod:
        raise InputError("condition must be all, perp-left:<module> or perp-right:<module>")
    T = inp.module(mod)
    if side == "perp-left":
        return SubcatSpec.perp_left(T, cap=cap)
    if side == "perp-right":
        return SubcatSpec.perp_right(T, cap=cap)
    raise InputError(f"unknown condition {side!r}")


def h_check_sn(cfg, inp):
    x = inp.mor(cfg.args["mor"])
    spec = _subcat(inp, cfg.args.get("cond"))
    member = fn_membership if cfg.args.get("epi") else sn_membership
    d = member(x, spec)
    return _verdict(d.holds), {"category": ("F_n" if cfg.args.get("epi") else "S_n"),
                               "condition": spec.label, "member": d.holds}, d.witness


def h_perp(cfg, inp):
    x = inp.module(cfg.args["x"])
    T = inp.module(cfg.args["T"], x.algebra) if not _is_file(cfg.args["T"]) else \
        inp.module(cfg.args["T"])
    if T.algebra is not x.algebra:
        raise InputError("x and T live over different algebras")
    side = cfg.args.get("side") or "left"
    fn = perp_left if side == "left" else perp_right
    d = fn(x, T, "auto", cfg.caps["resolution"])
    return _verdict(d.holds), {"side": side, "member": d.holds,
                               "certificate": d.certificate}, d.witness


def h_cotilt(cfg, inp):
    T = inp.module(cfg.args["T"])
    caps = cfg.caps
    fn = is_tilting if cfg.args.get("tilting") else is_cotilting
    d = fn(T, None, caps["depth"], caps["resolution"], cfg.seed)
    res = {"kind": "tilting" if cfg.args.get("tilting") else "cotilting", "holds": d.holds,
           "certificate": d.certificate}
    n = cfg.args.get("n")
    if n and d.holds and not cfg.args.get("tilting"):
        mt = build_mtilt(T, int(n), caps["resolution"], caps["depth"], cfg.seed)
        res["chain_level"] = mt.summary()
        return _verdict(mt.holds), res, None if mt.holds else mt.summary()
    return _verdict(d.holds), res, d.witness


def h_reciprocity(cfg, inp):
    T = inp.module(cfg.args["T"])
    n = int(cfg.args.get("n") or 2)
    rep = reciprocity_check(T, n, inp.catalog(), "auto", cfg.caps["resolution"])
    return _verdict(rep.equal), rep.to_json(), rep.witness


def h_identity(cfg, inp):
    name = cfg.args["identity"]
    if name not in IDENTITIES:
        raise InputError(f"unknown identity {name}; choose from {', '.join(sorted(IDENTITIES))}")
    T = inp.module(cfg.args["T"])
    n = int(cfg.args.get("n") or 2)
    hyp = derive_hypothesis(name, T, cfg.caps["resolution"], cfg.seed)
    if IDENTITIES[name][3] is not None and hyp is None:
        raise InputError(f"{name} needs a '{IDENTITIES[name][3]}' hypothesis that does not "
                         f"hold for T")
    rep = identity_check(name, T, n, inp.catalog(), hyp, "auto", cfg.caps["resolution"],
                         cfg.seed)
    return _verdict(rep.equal), rep.to_json(), rep.witness


def _algebra_at(cfg, inp) -> Algebra:
    a = inp.algebra()
    n = int(cfg.args.get("n") or 0)
    return triangular_algebra(a, n) if n else a


def h_profile(cfg, inp):
    a = _algebra_at(cfg, inp)
    return EXIT_HOLDS, profile(a, cfg.caps["resolution"]).to_json(), None


def h_gproj(cfg, inp):
    x = inp.mor(cfg.args["mor"])
    d = gproj_membership(x, cfg.caps["resolution"])
    return _verdict(d.holds), {"gproj": d.holds, "detail": d.detail}, d.witness


def h_thm44(cfg, inp):
    a = inp.algebra()
    cat = inp.catalog()
    rep = thm44_check(a, cat.n, cat, cfg.caps["resolution"])
    wit = None if rep.consistent else {"selfinjective": rep.selfinjective,
                                       "sets_equal": rep.sets_equal}
    return _verdict(rep.consistent), rep.to_json(), wit


def h_endalg(cfg, inp):
    M = inp.module(cfg.args["M"])
    ea = end_algebra(M)
    res = {"module_dim": M.dim, "dim": ea.base.dim, "basis": list(ea.base.basis_labels),
           "structure": ea.base.to_json()}
    if cfg.args.get("gldim"):
        res["gldim_gamma"] = global_dimension(ea.gamma, cfg.caps["depth"])
    return EXIT_HOLDS, res, None


def h_gldim(cfg, inp):
    if cfg.args.get("M"):
        a = end_algebra(inp.module(cfg.args["M"])).gamma
    else:
        a = _algebra_at(cfg, inp)
    g = global_dimension(a, cfg.caps["depth"])
    res = {"algebra": a.name, "dim": a.dim, "gldim": g}
    if not is_finite(g):
        return EXIT_INCONCLUSIVE, res, None
    bound = cfg.args.get("at_most")
    if bound is not None:
        ok = g <= int(bound)
        return _verdict(ok), res, None if ok else {"gldim": g, "bound": int(bound)}
    return EXIT_HOLDS, res, None


def h_thm51(cfg, inp):
    a = inp.algebra()
    cat = inp.catalog()
    amb = inp.catalog(cfg.args["ambient"]) if cfg.args.get("ambient") else None
    M = inp.module(cfg.args["M"]) if cfg.args.get("M") else None
    rep = thm51_check(a, cat.n, M=M, sn_catalog=cat if M is None else None,
                      ambient=amb, cap=cfg.caps["depth"], seed=cfg.seed)
    if M is not None:
        from .fintype import bigenerator_check
        bg = bigenerator_check(M, a, cat.n)
        gd = rep.gldim
        rep.direction1 = Decision(bg.holds and is_finite(gd) and gd <= 2, witness=bg.witness)
    res = {"direction1": rep.direction1, "gldim": rep.gldim, "direction2": rep.direction2,
           "table": rep.table}
    wit = None
    for d in (rep.direction1, rep.direction2):
        if d is not None and not d.holds:
            wit = {"witness": d.witness, "detail": d.detail}
            break
    return _verdict(rep.holds), res, wit


def h_enumerate(cfg, inp):
    a = inp.algebra()
    n = int(cfg.args.get("n") or 2)
    cap = cfg.caps["dim"]
    cat = enumerate_sn_indecomposables(a, n, cap, seed=cfg.seed,
                                       mono=not cfg.args.get("mor_category"))
    res = {"catalog": cat.to_json(), "count": len(cat), "evidence": cat.evidence}
    out = cfg.args.get("out")
    if out:
        Path(out).write_text(dumps(cat.to_json()) + "\n")
    if not cat.claims_complete:
        return EXIT_INCONCLUSIVE, res, None
    return EXIT_HOLDS, res, None


def h_decompose(cfg, inp):
    M = inp.module(cfg.args["M"])
    parts = decompose(M, cfg.seed)
    types = fitting_decompose(M, cfg.seed)
    res = {"dim": M.dim, "summand_dims": [s.module.dim for s in parts],
           "types": [{"dim": m.dim, "multiplicity": k} for m, k in types],
           "summands": [{"module": s.module.to_json(), "inclusion": s.incl} for s in parts]}
    return EXIT_HOLDS, res, None


def h_selftest(cfg, inp):
    only = cfg.args.get("only") or None
    results = acceptance.run_all(cfg.seed, only)
    rows = [{"criterion": r.number, "title": r.title, "passed": r.passed} for r in results]
    failed = [r["criterion"] for r in rows if not r["passed"]]
    res = {"criteria": rows, "passed": len(rows) - len(failed), "failed": failed,
           "_lines": [r.line() for r in results]}
    return _verdict(not failed), res, {"failed": failed} if failed else None


FIXTURES = ("kA2", "lambda2", "rem310_catalog", "tn_fixtures")


def _fixture_payloads(name: str) -> Dict[str, dict]:
    if name == "kA2":
        return {"kA2.json": kA2().to_json()}
    if name == "lambda2":
        return {"lambda2.json": lambda2().to_json()}
    if name == "rem310_catalog":
        return {"rem310_catalog.json": rem310_catalog().to_json()}
    if name == "tn_fixtures":
        out = {}
        for a in (kA2(), lambda2()):
            for n in (2, 3):
                t = triangular_algebra(a, n)
                out[f"T{n}_{a.name}.json"] = dict(t.to_json(), name=f"T{n}({a.name})")
                mD = m_of(DA(a), n)
                out[f"mDA_{a.name}_n{n}.json"] = dict(mD.to_json(), name=f"m(D(A_A)) over {a.name}")
        return out
    raise InputError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")


def h_emit_fixture(cfg, inp):
    payloads = _fixture_payloads(cfg.args["name"])
    out = Path(cfg.args.get("out") or ".")
    out.mkdir(parents=True, exist_ok=True)
    for fname, obj in sorted(payloads.items()):
        (out / fname).write_text(dumps(obj) + "\n")
    return EXIT_HOLDS, {"files": sorted(payloads)}, None


def h_replay(cfg, inp):
    old = _load_json(cfg.args["report"])
    if not isinstance(old, dict) or "command" not in old or "args" not in old:
        raise InputError("not a mono report")
    if old["command"] == "replay":
        raise InputError("cannot replay a replay report")
    again = RunConfig(old["command"], old["args"], old.get("caps", dict(DEFAULT_CAPS)),
                      old.get("seed", 0), "json")
    code, rep = run(again)
    same = (code == old.get("exit_code")
            and jsonable(rep.get("result")) == old.get("result")
            and jsonable(rep.get("witness")) == old.get("witness"))
    res = {"replayed": old["command"], "exit_code": code, "matches": same,
           "witness": rep.get("witness")}
    if not same:
        raise InputError(f"replay diverged: recorded exit {old.get('exit_code')}, got {code}")
    return code, res, rep.get("witness")


HANDLERS: Dict[str, Callable] = {
    "rmon": h_rmon, "check-sn": h_check_sn, "perp": h_perp, "cotilt": h_cotilt,
    "reciprocity": h_reciprocity, "identity": h_identity, "profile": h_profile,
    "gproj": h_gproj, "thm44": h_thm44, "endalg": h_endalg, "gldim": h_gldim,
    "thm51": h_thm51, "enumerate": h_enumerate, "decompose": h_decompose,
    "selftest": h_selftest, "emit-fixture": h_emit_fixture, "replay": h_replay,
}


def run(cfg: RunConfig) -> Tuple[int, dict]:
    """Execute one command; never raises for input or cap problems."""
    report = {"command": cfg.command, "args": cfg.args, "caps": cfg.caps, "seed": cfg.seed}
    try:
        handler = HANDLERS[cfg.command]
    except KeyError:
        code, result, witness = EXIT_INPUT, None, None
        report["error"] = f"unknown command {cfg.command!r}"
    else:
        try:
            code, result, witness = handler(cfg, Inputs(cfg))
        except InputError as exc:
            code, result, witness = EXIT_INPUT, None, None
            report["error"] = str(exc)
        except Inconclusive as exc:
            code, result, witness = EXIT_INCONCLUSIVE, None, None
            report["error"] = str(exc)
        except (ValueError, KeyError, TypeError, IndexError) as exc:
            code, result, witness = EXIT_INPUT, None, None
            report["error"] = f"invalid input: {type(exc).__name__}: {exc}"
    if isinstance(result, dict) and "_lines" in result:
        report["_lines"] = result.pop("_lines")
    report.update(exit_code=code, status=STATUS[code], result=result, witness=witness)
    return code, report


def render_text(report: dict) -> str:
    lines = [f"{report['command']}: {report['status']} (exit {report['exit_code']})"]
    if report.get("error"):
        lines.append(f"error: {report['error']}")
    res = report.get("result") or {}
    if "_lines" in report:
        lines.extend(report["_lines"])
    else:
        for k in sorted(res):
            v = jsonable(res[k])
            if isinstance(v, (bool, int, str)) or (isinstance(v, list) and len(str(v)) < 80):
                lines.append(f"  {k}: {v}")
    if report.get("witness") is not None:
        lines.append(f"witness: {json.dumps(jsonable(report['witness']), sort_keys=True)}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# click wiring


def _common(f):
    f = click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text",
                     help="Report format.")(f)
    f = click.option("--seed", type=int, default=0, show_default=True)(f)
    f = click.option("--res-cap", type=int, default=None, help="Resolution length cap.")(f)
    f = click.option("--depth-cap", type=int, default=None, help="Depth cap.")(f)
    f = click.option("--algebra", default=None,
                     help="Algebra JSON file or builtin name (kA2, lambda2, ...).")(f)
    return f


def _emit(command: str, args: dict, seed, fmt, res_cap, depth_cap):
    try:
        caps = caps_from_env(os.environ.get("MONO_CAPS"))
    except InputError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    for k, v in (("resolution", res_cap), ("depth", depth_cap), ("dim", args.get("dim_cap"))):
        if v is not None:
            caps[k] = v
    args = {k: v for k, v in args.items() if v is not None and v is not False and v != ()}
    if isinstance(args.get("only"), tuple):
        args["only"] = list(args["only"])
    cfg = RunConfig(command, args, caps, seed, fmt)
    code, report = run(cfg)
    if fmt == "json":
        click.echo(dumps({k: v for k, v in report.items() if not k.startswith("_")}))
    else:
        click.echo(render_text(report))
    sys.exit(code)


@click.group()
def main():
    """Exact computations with chains of module maps over finite-dimensional algebras."""


def _cmd(name: str, *params, help: str = ""):
    def deco(fn):
        def callback(seed, fmt, res_cap, depth_cap, algebra, **kw):
            kw["algebra"] = algebra
            for low, up in (("t", "T"), ("m", "M")):
                if low in kw:
                    kw[up] = kw.pop(low)
            _emit(name, kw, seed, fmt, res_cap, depth_cap)
        callback.__name__ = fn.__name__
        callback.__doc__ = fn.__doc__
        cb = _common(callback)
        for p in reversed(params):
            cb = p(cb)
        return main.command(name, help=help or fn.__doc__)(cb)
    return deco


_n = click.option("--n", type=int, default=None, help="Chain length n.")
_cat = click.option("--catalog", default=None,
                    help="Catalog JSON, 'rem310', or oracle:<algebra>:<n>:<cap>[:mor].")


@_cmd("rmon", click.argument("mor"), _n, click.option("--choice", type=int, default=0))
def _rmon():
    """Right S_n-approximation rMon of a chain (JSON, m:<M>, p:<M> or rem310:<i>)."""


@_cmd("check-sn", click.argument("mor"), _n,
      click.option("--cond", default=None, help="all, perp-left:<module> or perp-right:<module>"),
      click.option("--epi", is_flag=True, help="Check F_n (epimorphisms) instead."))
def _check_sn():
    """Membership of a chain in S_n(X) or F_n(X)."""


@_cmd("perp", click.argument("x"), click.option("--T", "T", required=True),
      click.option("--side", type=click.Choice(["left", "right"]), default="left"))
def _perp():
    """Whether Ext^i(x, T) (left) or Ext^i(T, x) (right) vanishes for all i >= 1."""


@_cmd("cotilt", click.argument("T"), _n, click.option("--tilting", is_flag=True))
def _cotilt():
    """Cotilting (or tilting) check; with --n also certifies m(T) over T_n(A)."""


@_cmd("reciprocity", click.option("--T", "T", required=True), _n, _cat)
def _reciprocity():
    """Compare S_n(perp-left T) with perp-left m(T) over a catalog."""


@_cmd("identity", click.argument("identity"), click.option("--T", "T", required=True), _n, _cat)
def _identity():
    """Check a named subcategory identity over a catalog."""


@_cmd("profile", _n)
def _profile():
    """Self-injective dimensions of A (or of T_n(A) with --n)."""


@_cmd("gproj", click.argument("mor"), _n)
def _gproj():
    """Gorenstein-projectivity of a chain viewed as a T_n(A)-module."""


@_cmd("thm44", _cat)
def _thm44():
    """Gproj(T_n(A)) versus S_n(A) over a catalog, against self-injectivity of A."""


@_cmd("endalg", click.argument("M"), click.option("--gldim", is_flag=True))
def _endalg():
    """Structure constants of End(M)."""


@_cmd("gldim", _n, click.option("--M", "M", default=None, help="Use End(M)^op instead."),
      click.option("--at-most", type=int, default=None))
def _gldim():
    """Global dimension of A, T_n(A), or End(M)^op."""


@_cmd("thm51", _cat, click.option("--M", "M", default=None),
      click.option("--ambient", default=None, help="Catalog for the add(M) comparison."))
def _thm51():
    """Bi-generator and gl.dim End(M) <= 2 check, with optional add(M) comparison."""


@_cmd("enumerate", _n, click.option("--dim-cap", type=int, default=None),
      click.option("--mor-category", is_flag=True, help="All of Mor_n, not just S_n."),
      click.option("--out", default=None, help="Write the catalog JSON here."))
def _enumerate():
    """Brute-force catalog of indecomposable chains up to a branch dimension cap."""


@_cmd("decompose", click.argument("M"))
def _decompose():
    """Krull-Schmidt decomposition of a module."""


@_cmd("selftest", click.option("--only", type=int, multiple=True))
def _selftest():
    """Run the acceptance suite on the bundled fixtures."""


@_cmd("emit-fixture", click.argument("name"), click.option("--out", default="."))
def _emit_fixture():
    """Write canonical JSON fixtures: kA2, lambda2, rem310_catalog, tn_fixtures."""


@_cmd("replay", click.argument("report"))
def _replay():
    """Rerun a JSON report and confirm the same verdict and witness."""


if __name__ == "__main__":
    main()
