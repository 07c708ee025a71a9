"""Command-line front end.

One binary with subcommands, JSON parameter files in, text/JSON/LaTeX out:

    jacquet packet   --phi phi.json
    jacquet jac      --phi phi.json --rho 1 --x 3/2,1/2
    jacquet mu-star  --phi phi.json [--degree N]
    jacquet jac-pk   --phi phi.json --degree N
    jacquet generic  --phi phi.json
    jacquet lfactor  --phi phi.json
    jacquet std-irred --phi phi.json --rho 1 --x 5/2

Exit codes: 0 success, 2 malformed input, 3 computation not supported for
the given label (non-generic standard module).  Set JACQUET_CACHE_DIR to
persist the Jacquet-dimension matrix cache between runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from . import render
from .algebra import FormalSum, HalfInt, parse_half
from .coproduct import (NonGenericStandardError, load_matrix_cache,
                        mu_star_full, save_matrix_cache)
from .functors import jac_vector
from .lattice import TemperedLabel, tempered_sum
from .lfactors import TwistedParam, is_generic, std_irreducible, zeta_exponents
from .parameters import (BadParityError, GroupType, UnknownRhoError,
                         build_parameter, is_nonzero, list_packet)
from .segments import RhoKey, SelfDualType


class InputError(ValueError):
    """Schema violation, carrying a pointer to the offending field."""

    def __init__(self, pointer: str, message: str):
        self.pointer = pointer
        super().__init__(f"input error at {pointer}: {message}")


class Session:
    """Parsed parameter file: rho table, parameter, optional character/twists."""

    def __init__(self, group: GroupType, rhos: dict[str, RhoKey],
                 phi: Parameter, eta, twisted):
        self.group = group
        self.rhos = rhos
        self.phi = phi
        self.eta = eta
        self.twisted = twisted

    def characters(self):
        if self.eta is not None:
            if not is_nonzero(self.phi, self.eta):
                raise InputError("eta", "character does not label a representation "
                                        "(must descend and kill the central element)")
            return [self.eta]
        return list_packet(self.phi)

    def twisted_param(self) -> TwistedParam:
        return TwistedParam(tuple(self.twisted), (), self.phi)


def _expect(cond: bool, pointer: str, message: str) -> None:
    if not cond:
        raise InputError(pointer, message)


def load_session(path: str, eta_override: str | None = None) -> Session:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(path, f"cannot read file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(path, f"not valid JSON: {exc}") from exc
    return parse_session(data, eta_override)


def parse_session(data: Any, eta_override: str | None = None) -> Session:
    _expect(isinstance(data, dict), "$", "top level must be an object")
    group_name = data.get("group")
    _expect(group_name in ("SOodd", "Sp"), "group", "must be \"SOodd\" or \"Sp\"")
    group = GroupType(group_name)

    rhos: dict[str, RhoKey] = {}
    raw_rhos = data.get("rhos")
    _expect(isinstance(raw_rhos, list) and raw_rhos, "rhos", "must be a non-empty list")
    for i, entry in enumerate(raw_rhos):
        _expect(isinstance(entry, dict), f"rhos[{i}]", "must be an object")
        rid = entry.get("id")
        _expect(isinstance(rid, str) and rid, f"rhos[{i}].id", "must be a non-empty string")
        _expect(rid not in rhos, f"rhos[{i}].id", "duplicate id")
        dim = entry.get("dim", 1)
        _expect(isinstance(dim, int) and dim >= 1, f"rhos[{i}].dim", "must be a positive integer")
        sd_raw = entry.get("self_dual", "orthogonal")
        try:
            sd = SelfDualType(sd_raw)
        except ValueError:
            raise InputError(f"rhos[{i}].self_dual",
                             "must be \"orthogonal\", \"symplectic\" or \"none\"")
        rhos[rid] = RhoKey(rid, dim, sd)

    raw_phi = data.get("phi")
    _expect(isinstance(raw_phi, list), "phi", "must be a list of [rho_id, a] pairs")
    pairs = []
    for i, entry in enumerate(raw_phi):
        _expect(isinstance(entry, (list, tuple)) and len(entry) == 2,
                f"phi[{i}]", "must be a [rho_id, a] pair")
        rid, a = entry
        _expect(isinstance(rid, str), f"phi[{i}][0]", "rho id must be a string")
        _expect(isinstance(a, int) and a >= 1, f"phi[{i}][1]", "a must be a positive integer")
        pairs.append((rid, a))
    try:
        phi = build_parameter(group, pairs, rhos)
    except UnknownRhoError as exc:
        raise InputError("phi", f"unknown rho id {exc.args[0]!r}")
    except BadParityError as exc:
        raise InputError("phi", str(exc))

    eta = None
    raw_eta = data.get("eta")
    if eta_override is not None:
        raw_eta = [s.strip() for s in eta_override.split(",")]
        raw_eta = [int(s) for s in raw_eta if s]
    if raw_eta is not None:
        _expect(isinstance(raw_eta, list), "eta", "must be a list of +-1")
        _expect(len(raw_eta) == len(phi.summands), "eta",
                f"length {len(raw_eta)} does not match the {len(phi.summands)} "
                "sorted summands")
        _expect(all(s in (1, -1) for s in raw_eta), "eta", "entries must be 1 or -1")
        eta = tuple(raw_eta)

    twisted = []
    raw_twisted = data.get("twisted", [])
    _expect(isinstance(raw_twisted, list), "twisted", "must be a list")
    for i, entry in enumerate(raw_twisted):
        _expect(isinstance(entry, (list, tuple)) and len(entry) == 3,
                f"twisted[{i}]", "must be a [rho_id, a, shift] triple")
        rid, a, shift = entry
        _expect(rid in rhos, f"twisted[{i}][0]", f"unknown rho id {rid!r}")
        _expect(isinstance(a, int) and a >= 1, f"twisted[{i}][1]",
                "a must be a positive integer")
        try:
            s = parse_half(str(shift))
        except ValueError:
            raise InputError(f"twisted[{i}][2]", "shift must be a half-integer like \"1/2\"")
        _expect(s.twice > 0, f"twisted[{i}][2]", "shift must be positive")
        twisted.append((rhos[rid], a, s))

    return Session(group, rhos, phi, eta, twisted)


def _parse_xs(text: str) -> list[HalfInt]:
    try:
        return [parse_half(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise InputError("--x", str(exc))


def _require_rho(session: Session, rho_id: str | None) -> RhoKey:
    if rho_id is None:
        keys = session.phi.rho_keys()
        _expect(len(keys) == 1, "--rho",
                "parameter uses several cuspidal keys; pass --rho explicitly")
        return keys[0]
    _expect(rho_id in session.rhos, "--rho", f"unknown rho id {rho_id!r}")
    return session.rhos[rho_id]


def _emit(args, payload: dict[str, Any], text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_packet(args) -> int:
    session = load_session(args.phi, args.eta)
    members = []
    for signs in session.characters():
        label = TemperedLabel(session.phi, signs)
        members.append((signs, label))
    if args.format == "latex":
        for _, label in members:
            print(render.latex_tempered(label))
        return 0
    payload = {"command": "packet",
               "group": session.group.value,
               "phi": [[s.rho.id, s.a] for s in session.phi.summands],
               "packet": [{"eta": list(signs), "name": render.fmt_tempered(label)}
                          for signs, label in members]}
    text = "\n".join(f"eta={','.join('%+d' % s for s in signs)}  {render.fmt_tempered(label)}"
                     for signs, label in members)
    _emit(args, payload, text)
    return 0


def cmd_jac(args) -> int:
    session = load_session(args.phi, args.eta)
    rho = _require_rho(session, args.rho)
    xs = _parse_xs(args.x) if args.x else []
    blocks = []
    for signs in session.characters():
        v = jac_vector(tempered_sum(session.phi, signs), rho, xs)
        blocks.append((signs, v))
    if args.format == "latex":
        for signs, v in blocks:
            print(render.latex_virtual(v))
        return 0
    payload = {"command": "jac",
               "rho": rho.id,
               "x": [str(x) for x in xs],
               "results": [{"eta": list(signs), "terms": render.virtual_json(v)}
                           for signs, v in blocks]}
    lines = []
    for signs, v in blocks:
        prefix = f"eta={','.join('%+d' % s for s in signs)}:  " if len(blocks) > 1 else ""
        lines.append(prefix + render.fmt_virtual(v))
    _emit(args, payload, lines and "\n".join(lines) or "0")
    return 0


def _bi_command(args, degree_filter) -> int:
    session = load_session(args.phi, args.eta)
    blocks = []
    for signs in session.characters():
        v = tempered_sum(session.phi, signs)
        full = mu_star_full(v)
        if degree_filter is not None:
            full = FormalSum.from_terms(
                (pair, c) for pair, c in full.items() if pair[0].gl_dim == degree_filter)
        blocks.append((signs, full))
    if args.format == "latex":
        for signs, full in blocks:
            for (gl, std), c in full.items():
                left = " \\times ".join(render.latex_segment(s) for s in gl.segments) or "1"
                print(f"{c} \\cdot {left} \\otimes {render.latex_standard(std)} \\\\")
        return 0
    payload = {"command": "mu-star" if degree_filter is None else "jac-pk",
               "degree": degree_filter,
               "results": [{"eta": list(signs), "terms": render.bi_json(full)}
                           for signs, full in blocks]}
    lines = []
    for signs, full in blocks:
        if len(blocks) > 1:
            lines.append(f"eta={','.join('%+d' % s for s in signs)}:")
        if degree_filter is None:
            degrees = sorted({gl.gl_dim for (gl, _std) in full})
            for d in degrees:
                piece = FormalSum.from_terms(
                    (pair, c) for pair, c in full.items() if pair[0].gl_dim == d)
                lines.append(f"degree {d}:")
                lines.append(render.fmt_bi_sum(piece))
        else:
            lines.append(render.fmt_bi_sum(full))
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_mu_star(args) -> int:
    return _bi_command(args, args.degree)


def cmd_jac_pk(args) -> int:
    return _bi_command(args, args.degree)


def cmd_generic(args) -> int:
    session = load_session(args.phi, args.eta)
    p = session.twisted_param()
    z = zeta_exponents(p)
    verdict = is_generic(p)
    if verdict:
        reason = "tempered" if not p.twisted else "no zeta(s-1) factor"
        text = f"GENERIC ({reason})"
    else:
        text = "NOT GENERIC: zeta(s-1) factor present"
    payload = {"command": "generic", "generic": verdict, **render.zeta_json(z)}
    _emit(args, payload, text)
    return 0


def cmd_lfactor(args) -> int:
    session = load_session(args.phi, args.eta)
    z = zeta_exponents(session.twisted_param())
    payload = {"command": "lfactor", **render.zeta_json(z)}
    _emit(args, payload, render.fmt_zeta(z))
    return 0


def cmd_std_irred(args) -> int:
    session = load_session(args.phi, args.eta)
    rho = _require_rho(session, args.rho)
    _expect(args.x is not None, "--x", "required for std-irred")
    xs = _parse_xs(args.x)
    _expect(len(xs) == 1, "--x", "exactly one exponent expected")
    x = xs[0]
    _expect(x.twice > 0, "--x", "x must be positive")
    lines = []
    results = []
    for signs in session.characters():
        core = TemperedLabel(session.phi, signs)
        report = std_irreducible(rho, x, core)
        results.append({"eta": list(signs), "verdict": report.verdict.value,
                        "reason": report.reason, "length": report.length})
        tag = report.verdict.value.upper()
        extra = f" (length {report.length})" if report.length else ""
        lines.append(f"eta={','.join('%+d' % s for s in signs)}  {tag}{extra}: {report.reason}")
    payload = {"command": "std-irred", "rho": rho.id, "x": str(x), "results": results}
    _emit(args, payload, "\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacquet",
        description="Exact Jacquet-module computations for split SO(odd)/Sp")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, rho=False, x=False, degree=False):
        p.add_argument("--phi", required=True, help="parameter JSON file")
        p.add_argument("--eta", help="comma-separated signs overriding the file")
        p.add_argument("--format", choices=("text", "json", "latex"), default="text")
        if rho:
            p.add_argument("--rho", help="cuspidal key id (optional when unique)")
        if x:
            p.add_argument("--x", help="comma-separated half-integers, e.g. 3/2,1/2")
        if degree:
            p.add_argument("--degree", type=int, default=None)
        return p

    common(sub.add_parser("packet", help="list the members of the packet"))
    common(sub.add_parser("jac", help="iterated degree-one Jacquet module"),
           rho=True, x=True)
    common(sub.add_parser("mu-star", help="full Jacquet coproduct"), degree=True)
    p = common(sub.add_parser("jac-pk", help="one graded piece of the coproduct"),
               degree=True)
    p.set_defaults(need_degree=True)
    common(sub.add_parser("generic", help="genericity of the full parameter"))
    common(sub.add_parser("lfactor", help="adjoint L-factor zeta exponents"))
    common(sub.add_parser("std-irred", help="standard-module irreducibility"),
           rho=True, x=True)
    return parser


_DISPATCH = {
    "packet": cmd_packet,
    "jac": cmd_jac,
    "mu-star": cmd_mu_star,
    "jac-pk": cmd_jac_pk,
    "generic": cmd_generic,
    "lfactor": cmd_lfactor,
    "std-irred": cmd_std_irred,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "need_degree", False) and args.degree is None:
        print("input error at --degree: required for jac-pk", file=sys.stderr)
        return 2
    cache_dir = os.environ.get("JACQUET_CACHE_DIR")
    if cache_dir:
        load_matrix_cache(cache_dir)
    try:
        code = _DISPATCH[args.command](args)
    except InputError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except NonGenericStandardError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 3
    if cache_dir:
        try:
            save_matrix_cache(cache_dir)
        except OSError:
            pass
    return code


if __name__ == "__main__":
    sys.exit(main())
