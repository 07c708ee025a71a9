"""Text, JSON and LaTeX rendering of labels and virtual sums.

Text output is deterministic: terms follow the canonical label order and
half-integers print as reduced fractions over 2.  Segments have a pretty
form using the Steinberg shorthand (|.|^s St_a) and a plain bracket form
(rho:[x,y]) used in JSON payloads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .algebra import FormalSum, HalfInt
from .lattice import StandardLabel, TemperedLabel
from .lfactors import ZetaExponents
from .parameters import Parameter
from .segments import GLLabel, RhoKey, Segment


def fmt_sign(s: int) -> str:
    return "+" if s == 1 else "-"


def fmt_segment(seg: Segment) -> str:
    return f"{seg.rho.id}:[{seg.x},{seg.y}]"


def _rho_prefix(rho: RhoKey) -> str:
    # the unramified character prints bare, like the examples it came from
    return "" if (rho.dim == 1 and rho.id == "1") else rho.id


def fmt_segment_pretty(seg: Segment) -> str:
    prefix = _rho_prefix(seg.rho)
    if seg.length == 1:
        return f"{prefix}|.|^{seg.x}" if prefix else f"|.|^{seg.x}"
    name = f"St_{seg.length}" if not prefix else f"St({prefix},{seg.length})"
    c = seg.center
    if c.twice == 0:
        return name
    return f"|.|^{c}{name}"


def fmt_gl(label: GLLabel, pretty: bool = True) -> str:
    if label.is_one():
        return "1"
    fmt = fmt_segment_pretty if pretty else fmt_segment
    return " x ".join(fmt(s) for s in label.segments)


def fmt_tempered(label: TemperedLabel) -> str:
    body = ",".join(f"({s.rho.id},{s.a})^{fmt_sign(sg)}"
                    for s, sg in zip(label.phi.summands, label.signs))
    return "pi{" + body + "}"


def fmt_standard(label: StandardLabel, pretty: bool = True) -> str:
    core = fmt_tempered(label.core)
    if not label.segments:
        return core
    fmt = fmt_segment_pretty if pretty else fmt_segment
    segs = " x ".join(fmt(s) for s in label.segments)
    return f"{segs} |x {core}"


def fmt_coeff(c: Fraction) -> str:
    return str(c)


def fmt_virtual(v: FormalSum, pretty: bool = True) -> str:
    if v.is_zero():
        return "0"
    parts = []
    for label, c in v.items():
        name = fmt_standard(label, pretty) if isinstance(label, StandardLabel) else str(label)
        if c == 1:
            parts.append(name)
        elif c == -1:
            parts.append(f"-{name}")
        else:
            parts.append(f"({fmt_coeff(c)})*{name}")
    return " + ".join(parts).replace("+ -", "- ")


def fmt_bi_term(pair: tuple[GLLabel, StandardLabel], pretty: bool = True) -> str:
    gl, std = pair
    return f"{fmt_gl(gl, pretty)} (x) {fmt_standard(std, pretty)}"


def fmt_bi_sum(v: FormalSum, pretty: bool = True) -> str:
    """Group a virtual bi-representation by GL factor, one line per factor."""
    if v.is_zero():
        return "0"
    grouped: dict[GLLabel, FormalSum] = {}
    for (gl, std), c in v.items():
        grouped[gl] = grouped.get(gl, FormalSum.zero()) + FormalSum.term(std, c)
    lines = []
    for gl in sorted(grouped, key=GLLabel.sort_key):
        lines.append(f"{fmt_gl(gl, pretty)} (x) ({fmt_virtual(grouped[gl], pretty)})")
    return "\n".join(lines)


def fmt_zeta(z: ZetaExponents) -> str:
    return str(z)


# ---------------------------------------------------------------- JSON ----

def segment_json(seg: Segment) -> dict[str, Any]:
    return {"rho": seg.rho.id, "x": str(seg.x), "y": str(seg.y)}


def tempered_json(label: TemperedLabel) -> dict[str, Any]:
    return {
        "group": label.phi.group.value,
        "phi": [[s.rho.id, s.a] for s in label.phi.summands],
        "eta": list(label.signs),
    }


def standard_json(label: StandardLabel) -> dict[str, Any]:
    return {
        "gl": [segment_json(s) for s in label.segments],
        "core": tempered_json(label.core),
    }


def virtual_json(v: FormalSum) -> list[dict[str, Any]]:
    return [{"coeff": str(c), **standard_json(label)} for label, c in v.items()]


def bi_json(v: FormalSum) -> list[dict[str, Any]]:
    return [{
        "coeff": str(c),
        "left": [segment_json(s) for s in gl.segments],
        **standard_json(std),
    } for (gl, std), c in v.items()]


def zeta_json(z: ZetaExponents) -> dict[str, Any]:
    return {
        "exponents": {str(e): mult for e, mult in z.exponents},
        "complete": z.complete,
    }


# --------------------------------------------------------------- LaTeX ----

def latex_half(x: HalfInt) -> str:
    if x.twice % 2 == 0:
        return str(x.twice // 2)
    sign = "-" if x.twice < 0 else ""
    return f"{sign}\\tfrac{{{abs(x.twice)}}}{{2}}"


def latex_segment(seg: Segment) -> str:
    prefix = _rho_prefix(seg.rho)
    if seg.length == 1:
        base = f"|\\cdot|^{{{latex_half(seg.x)}}}"
        return f"{prefix}{base}" if prefix else base
    if prefix:
        name = f"\\mathrm{{St}}({prefix},{seg.length})"
    else:
        name = f"\\mathrm{{St}}_{{{seg.length}}}"
    c = seg.center
    if c.twice == 0:
        return name
    return f"|\\cdot|^{{{latex_half(c)}}}{name}"


def latex_tempered(label: TemperedLabel) -> str:
    signs = "".join(fmt_sign(s) for s in label.signs)
    sizes = ",".join(str(s.a) for s in label.phi.summands)
    if not label.phi.summands:
        return "\\mathbf{1}"
    return f"\\pi_{{{signs}}}({sizes})"


def latex_standard(label: StandardLabel) -> str:
    core = latex_tempered(label.core)
    if not label.segments:
        return core
    segs = " \\times ".join(latex_segment(s) for s in label.segments)
    return f"{segs} \\rtimes {core}"


def latex_virtual(v: FormalSum) -> str:
    if v.is_zero():
        return "0"
    parts = []
    for label, c in v.items():
        name = latex_standard(label) if isinstance(label, StandardLabel) else str(label)
        if c == 1:
            parts.append(name)
        elif c == -1:
            parts.append(f"-{name}")
        else:
            num = str(c) if c.denominator == 1 else f"\\tfrac{{{c.numerator}}}{{{c.denominator}}}"
            parts.append(f"{num}\\cdot {name}")
    return " + ".join(parts).replace("+ -", "- ")
