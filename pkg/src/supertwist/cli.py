"""Command-line front end.

Exit status: 0 on success (or a verification that holds), 2 when a
verification fails, 1 on usage and precondition errors.  Errors are reported
as one JSON line on stderr: ``{"error": <code>, "reason": <text>}``.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Sequence

from .charring import DEFAULT_TRUNC, FormalCharacter, char_exp, r_of, s_of
from .errors import SupertwistError
from .modules import (
    gvm_char,
    gvm_char_1dim,
    levi_decompose,
    levi_highest_weight_char,
    verma_char,
)
from .root_systems import (
    RootSystem,
    gamma_set,
    make_gl,
    parabolic_from_simples,
    parse_algebra,
    parse_weight,
    standard_parabolics,
)
from .twist import (
    oracle_twisted_char,
    compare,
    one_dim_samples,
    theorem_report,
    theorem_sweep,
    twisted_gvm_char,
    twisted_gvm_char_1dim,
    verify_asp,
    verify_don,
    verify_pig,
    verify_pug,
)
from .weyl import act, act_circle, act_dot, elements, inversion_set, parse_word

TRUNC_ENV = "SUPERTWIST_TRUNC"
SWEEP_MAX_WEYL = 10080
SWEEP_MAX_ODD = 12


class UsageError(SupertwistError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _default_trunc() -> int:
    raw = os.environ.get(TRUNC_ENV)
    if raw is None:
        return DEFAULT_TRUNC
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{TRUNC_ENV}={raw!r} is not an integer") from None
    if value < 0:
        raise UsageError(f"{TRUNC_ENV} must be nonnegative")
    return value


def _rs(args) -> RootSystem:
    return make_gl(*parse_algebra(args.algebra))


def _parabolic(rs, args):
    text = (args.parabolic or "").strip()
    indices = set()
    for tok in text.replace(",", " ").split():
        try:
            k = int(tok)
        except ValueError:
            raise UsageError(f"bad parabolic index {tok!r}") from None
        if not 1 <= k <= rs.rank:
            raise UsageError(f"parabolic index {k} out of range 1..{rs.rank}")
        indices.add(k - 1)
    return parabolic_from_simples(rs, indices)


def _weight(rs, args):
    if args.weight is None:
        raise UsageError("--weight is required")
    lam = parse_weight(args.weight)
    if len(lam) != rs.dim:
        raise UsageError(f"weight has {len(lam)} coordinates, expected {rs.dim}")
    return lam


def _word(rs, args):
    return parse_word(rs, args.word or "")


def _trunc(args) -> int:
    return args.trunc if args.trunc is not None else _default_trunc()


def _emit_char(chi: FormalCharacter, args, out):
    if args.format == "json":
        out.write(json.dumps(chi.to_json()) + "\n")
    else:
        out.write(chi.to_text())


def _emit(obj, text: str, args, out):
    if args.format == "json":
        out.write(json.dumps(obj) + "\n")
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def _module_char(rs, P, lam, args) -> FormalCharacter:
    if getattr(args, "levi", False):
        return levi_highest_weight_char(rs, P, lam)
    return char_exp(lam)


# --- commands ---------------------------------------------------------------

def cmd_roots(args, out):
    rs = _rs(args)
    data = {
        "m": rs.m,
        "n": rs.n,
        "simple": [r.to_json() for r in rs.simple],
        "even_positive": [r.to_json() for r in rs.even_positive],
        "odd_positive": [r.to_json() for r in rs.odd_positive],
        "rho0": rs.rho0.to_json(),
        "rho1": rs.rho1.to_json(),
        "rho": rs.rho.to_json(),
    }
    lines = [
        f"{rs} distinguished Borel",
        "simple: " + " ".join(f"{k + 1}:{r}" for k, r in enumerate(rs.simple)),
        f"even positive ({len(rs.even_positive)}): " + " ".join(map(str, rs.even_positive)),
        f"odd positive ({len(rs.odd_positive)}): " + " ".join(map(str, rs.odd_positive)),
        f"rho0 = {rs.rho0}",
        f"rho1 = {rs.rho1}",
        f"rho = {rs.rho}",
    ]
    if args.parabolic is not None:
        P = _parabolic(rs, args)
        data["X"] = [r.to_json() for r in sorted(P.X)]
        lines.append(f"X = {{{', '.join(map(str, sorted(P.X)))}}}")
    _emit(data, "\n".join(lines), args, out)
    return 0


def cmd_weyl(args, out):
    rs = _rs(args)
    w = _word(rs, args)
    inv = sorted(inversion_set(rs, w))
    data = {"element": w.to_json(), "length": w.length(), "inversions": [r.to_json() for r in inv]}
    lines = [
        f"sigma = {w.to_json()['sigma']}  tau = {w.to_json()['tau']}",
        f"length = {w.length()}",
        f"N(w) = {{{', '.join(map(str, inv))}}}",
    ]
    if args.weight is not None:
        lam = _weight(rs, args)
        data.update(
            linear=act(w, lam).to_json(),
            dot=act_dot(rs, w, lam).to_json(),
            circle=act_circle(rs, w, lam).to_json(),
        )
        lines += [
            f"w lam = {act(w, lam)}",
            f"w . lam = {act_dot(rs, w, lam)}",
            f"w o lam = {act_circle(rs, w, lam)}",
        ]
    _emit(data, "\n".join(lines), args, out)
    return 0


def cmd_char_verma(args, out):
    rs = _rs(args)
    _emit_char(verma_char(rs, _weight(rs, args), _trunc(args)), args, out)
    return 0


def cmd_char_gvm(args, out):
    rs = _rs(args)
    P = _parabolic(rs, args)
    lam = _weight(rs, args)
    N = _trunc(args)
    if args.levi:
        chi = gvm_char(rs, P, levi_highest_weight_char(rs, P, lam), N)
    else:
        chi = gvm_char_1dim(rs, P, lam, N)
    _emit_char(chi, args, out)
    return 0


def cmd_char_twist(args, out):
    rs = _rs(args)
    P = _parabolic(rs, args)
    lam = _weight(rs, args)
    w = _word(rs, args)
    N = _trunc(args)
    if args.levi:
        chL = levi_highest_weight_char(rs, P, lam)
        chi = twisted_gvm_char(rs, P, w, chL, N)
    else:
        chL = char_exp(lam)
        chi = twisted_gvm_char_1dim(rs, P, w, lam, N)
    _emit_char(chi, args, out)
    if args.check:
        report = compare(chi, oracle_twisted_char(rs, P, w, chL, N))
        if not report.agree:
            sys.stderr.write(json.dumps(report.to_json()) + "\n")
            return 2
    return 0


def cmd_decompose(args, out):
    rs = _rs(args)
    P = _parabolic(rs, args)
    lam = _weight(rs, args)
    dec = levi_decompose(rs, P, _module_char(rs, P, lam, args))
    mult = dec.multiplicities()
    order = list(dict.fromkeys(dec.summands))
    data = {"summands": [{"mu": mu.to_json(), "multiplicity": mult[mu]} for mu in order]}
    text = "\n".join(f"{mult[mu]} x L0{mu}" for mu in order)
    _emit(data, text, args, out)
    return 0


def _verify_result(name, checked, failures, args, out):
    ok = not failures
    data = {"verify": name, "verified": ok, "checked": checked,
            "first_failure": failures[0] if failures else None}
    text = f"{name}: {'verified' if ok else 'FAILED'} ({checked} cases)"
    if failures:
        text += "\nfirst failure: " + json.dumps(failures[0])
    _emit(data, text, args, out)
    return 0 if ok else 2


def _selected_parabolics(rs, args):
    if args.all:
        return standard_parabolics(rs)
    return [_parabolic(rs, args)]


def _selected_elements(rs, args):
    if args.all and not args.word:
        return list(elements(rs))
    return [_word(rs, args)]


def cmd_verify(args, out):
    rs = _rs(args)
    what = args.what
    failures = []
    checked = 0
    if what == "pug":
        for P in _selected_parabolics(rs, args):
            for w in _selected_elements(rs, args):
                checked += 1
                if not verify_pug(rs, w, P.X1):
                    failures.append({"parabolic": P.label(), "w": w.to_json()})
    elif what == "asp":
        for P in _selected_parabolics(rs, args):
            checked += 1
            if not verify_asp(rs, P.X1):
                failures.append({"parabolic": P.label()})
    elif what == "pig":
        lams = [_weight(rs, args)] if args.weight else one_dim_samples(rs, _parabolic(rs, args), 3)
        gammas = sorted(gamma_set(rs), key=lambda g: g.coords)
        if args.gamma and not args.all:
            gammas = [parse_weight(args.gamma)]
        for w in _selected_elements(rs, args):
            for lam in lams:
                for g in gammas:
                    checked += 1
                    if not verify_pig(rs, w, lam, g):
                        failures.append({"w": w.to_json(), "lam": lam.to_json(), "gamma": g.to_json()})
    elif what == "don":
        lams = [_weight(rs, args)] if args.weight else one_dim_samples(rs, _parabolic(rs, args), 3)
        for P in _selected_parabolics(rs, args):
            a = r_of(rs, P.X0) * s_of(rs, P.X1)
            for w in _selected_elements(rs, args):
                for lam in lams:
                    checked += 1
                    if not verify_don(rs, w, a, char_exp(lam)):
                        failures.append({"parabolic": P.label(), "w": w.to_json(), "lam": lam.to_json()})
    elif what == "theorem":
        if args.all:
            return _sweep(rs, args, out, label="theorem")
        P = _parabolic(rs, args)
        w = _word(rs, args)
        lam = _weight(rs, args)
        N = _trunc(args)
        if args.levi:
            report = theorem_report(rs, P, w, N, chL=levi_highest_weight_char(rs, P, lam))
        else:
            report = theorem_report(rs, P, w, N, lam=lam)
        text = f"agree={report.agree} order={report.order}"
        if report.first_discrepancy:
            mu, lhs, rhs = report.first_discrepancy
            text += f" first_discrepancy mu={mu} lhs={lhs} rhs={rhs}"
        _emit(report.to_json(), text, args, out)
        return 0 if report.agree else 2
    return _verify_result(what, checked, failures, args, out)


def _sweep(rs, args, out, label="sweep"):
    if not args.force and (
        math.factorial(rs.m) * math.factorial(rs.n) > SWEEP_MAX_WEYL or rs.m * rs.n > SWEEP_MAX_ODD
    ):
        raise UsageError(
            f"{rs} exceeds the sweep bounds (m!n! <= {SWEEP_MAX_WEYL}, mn <= {SWEEP_MAX_ODD}); use --force"
        )
    N = _trunc(args)
    cases = theorem_sweep(rs, N, samples=args.samples, jobs=args.jobs)
    failures = [c.__dict__ for c in cases if not c.report["agree"]]
    data = {"algebra": f"gl{rs.m}|{rs.n}", "order": N, "cases": len(cases),
            "agree": not failures, "first_failure": failures[0] if failures else None}
    text = f"{label} {rs} order={N}: {len(cases)} cases, " + (
        "all agree" if not failures else f"{len(failures)} FAILED\nfirst failure: {json.dumps(failures[0])}"
    )
    _emit(data, text, args, out)
    return 0 if not failures else 2


def cmd_sweep(args, out):
    return _sweep(_rs(args), args, out)


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--algebra", required=True, help="e.g. gl3|2")
    common.add_argument("--trunc", type=int, default=None,
                        help=f"truncation height (default ${TRUNC_ENV} or {DEFAULT_TRUNC})")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = _Parser(prog="supertwist", description="Characters of twisted generalized Verma modules over gl(m|n).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, *flags):
        p = sub.add_parser(name, parents=[common])
        for flag in flags:
            flag(p)
        p.set_defaults(func=func)
        return p

    def parabolic(p):
        p.add_argument("--parabolic", default=None, help="1-based simple-root indices, e.g. 1,3")

    def weight(p):
        p.add_argument("--weight", default=None, help="comma-separated rationals, e.g. 1/2,0,-1")

    def word(p):
        p.add_argument("--word", default="", help="reflection tokens, e.g. 's1 t1'")

    def levi(p):
        p.add_argument("--levi", action="store_true",
                       help="treat --weight as the highest weight of a simple Levi module")

    add("roots", cmd_roots, parabolic)
    add("weyl", cmd_weyl, word, weight)
    add("char-verma", cmd_char_verma, weight)
    add("char-gvm", cmd_char_gvm, parabolic, weight, levi)
    tw = add("char-twist", cmd_char_twist, parabolic, weight, word, levi)
    tw.add_argument("--check", action="store_true", help="also compare with the Verma-expansion oracle")
    add("decompose", cmd_decompose, parabolic, weight, levi)
    ver = add("verify", cmd_verify, parabolic, weight, word, levi)
    ver.add_argument("what", choices=("pug", "asp", "pig", "don", "theorem"))
    ver.add_argument("--all", action="store_true", help="exhaustive sweep")
    ver.add_argument("--gamma", default=None, help="element of Gamma for 'pig'")
    for p in (ver, add("sweep", cmd_sweep)):
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--samples", type=int, default=3)
        p.add_argument("--force", action="store_true")
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except SupertwistError as exc:
        sys.stderr.write(json.dumps({"error": exc.code, "reason": str(exc)}) + "\n")
        return 1


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
