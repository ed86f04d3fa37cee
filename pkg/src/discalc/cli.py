"""Command-line front door for the difference-calculus engine.

Subcommands cover expression evaluation, definite sums, Newton-Gregory
interpolation, graph/topology reports, operator matrices and integral
theorems, PDE flows, and SVG comparison plots of the deformed functions
against their classical counterparts.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from fractions import Fraction

import numpy as np

from . import complexes as cx
from . import evolution as ev
from . import expr
from . import forms
from . import interpolate as ip
from . import topology as tp
from .numcore import DomainError, Sequence, exp_h, exp_h_complex, log_discrete


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fmt(value) -> str:
    """Deterministic scalar formatting: exact integers/rationals as such,
    floats with 12 significant digits."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        if value == math.inf:
            return "inf"
        return format(value, ".12g")
    if isinstance(value, complex):
        return f"{format(value.real, '.12g')}{'+' if value.imag >= 0 else '-'}{format(abs(value.imag), '.12g')}i"
    return str(value)


def _load_graph(args) -> cx.Graph:
    if args.gen:
        return cx.parse_generator(args.gen)
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            return cx.Graph.from_json(fh.read())
    raise UsageError("need --gen NAME[:N] or --file PATH")


def _load_vertex_fn(path: str, n: int) -> list:
    values = [None] * n
    with open(path, "r", encoding="utf-8") as fh:
        for row in csv.reader(fh):
            if not row or row[0].strip().startswith("#") or row[0].strip() == "vertex":
                continue
            v = int(row[0])
            values[v] = Fraction(row[1])
    if any(v is None for v in values):
        raise DomainError("function file does not cover every vertex")
    return values


def _parse_simplex(text: str) -> tuple:
    return tuple(int(p) for p in text.split("-"))


def _load_form_rows(path: str) -> list:
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for row in csv.reader(fh):
            if not row or row[0].strip().startswith("#") or row[0].strip() == "degree":
                continue
            degree = int(row[0])
            simplex = _parse_simplex(row[1])
            value = Fraction(row[2]) if "/" in row[2] or "." not in row[2] else float(row[2])
            rows.append((degree, simplex, value))
    return rows


def _load_form(path: str, c: cx.GraphComplex, degree: int) -> forms.Form:
    values = np.full(c.count(degree), 0, dtype=object)
    for d, simplex, value in _load_form_rows(path):
        if d != degree:
            raise DomainError(f"expected degree-{degree} rows, found degree {d}")
        values[c.index[degree][simplex]] = value
    return forms.Form(c, degree, values)


def _load_state_vector(path: str, c: cx.GraphComplex) -> np.ndarray:
    offsets = forms.block_offsets(c)
    vec = np.zeros(forms.total_dim(c))
    for d, simplex, value in _load_form_rows(path):
        vec[offsets[d] + c.index[d][simplex]] = float(value)
    return vec


def _load_samples(path: str) -> Sequence:
    pairs = []
    with open(path, "r", encoding="utf-8") as fh:
        for row in csv.reader(fh):
            if not row or row[0].strip().startswith("#") or row[0].strip() == "x":
                continue
            x = int(row[0])
            text = row[1].strip()
            value = float(text) if ("." in text or "e" in text or "E" in text) else Fraction(text)
            if isinstance(value, Fraction) and value.denominator == 1:
                value = value.numerator
            pairs.append((x, value))
    pairs.sort()
    if not pairs:
        raise DomainError("no samples in file")
    base = pairs[0][0]
    if [x for x, _ in pairs] != list(range(base, base + len(pairs))):
        raise DomainError("samples must cover consecutive integers")
    return Sequence(base, tuple(v for _, v in pairs))


def _simplex_name(simplex: tuple) -> str:
    return "-".join(str(v) for v in simplex)


def _print_matrix(mat, out):
    for row in np.asarray(mat):
        out.write(" ".join(fmt(v) for v in row) + "\n")


# ---------------------------------------------------------------------------
# Subcommands


def cmd_eval(args, out):
    tree = expr.parse(args.expression)
    if args.op == "diff":
        tree = expr.derivative(tree)
    elif args.op == "sum":
        tree = expr.antiderivative(tree)
    out.write(fmt(expr.evaluate(tree, args.at)) + "\n")
    return 0


def cmd_sum(args, out):
    # inclusive bounds, the usual convention for written-out finite sums
    tree = expr.parse(args.expression)
    out.write(fmt(expr.definite_sum(tree, args.lo, args.hi + 1)) + "\n")
    return 0


def cmd_taylor(args, out):
    samples = _load_samples(args.samples)
    # a nonzero window start is handled by shifting the variable
    anchored = Sequence(0, samples.values)
    table = ip.forward_differences(anchored)
    if args.eval is not None:
        out.write(fmt(ip.newton_gregory_eval(table, args.eval - samples.base)) + "\n")
    if args.print_form or args.eval is None:
        if samples.base != 0:
            raise DomainError("--print needs samples anchored at x = 0")
        out.write(expr.to_string(ip.interpolate_fit(samples)) + "\n")
    return 0


def cmd_graph(args, out):
    g = _load_graph(args)
    c = cx.build_complex(g, max_dim=8)
    if args.action == "info":
        counts = c.counts()
        out.write("counts: " + " ".join(str(v) for v in counts) + "\n")
        out.write(f"chi: {tp.euler_characteristic(c)}\n")
        return 0
    if args.action == "betti":
        out.write("betti: " + " ".join(str(b) for b in tp.betti(c)) + "\n")
        return 0
    if args.action == "curvature":
        total = Fraction(0)
        out.write("vertex,curvature\n")
        for v in range(g.vertex_count):
            k = tp.curvature(c, v)
            total += k
            out.write(f"{v},{fmt(k)}\n")
        out.write(f"total,{fmt(total)}\n")
        return 0
    if args.action == "indices":
        f = _load_vertex_fn(args.fn, g.vertex_count) if args.fn else list(range(g.vertex_count))
        report = tp.poincare_hopf(c, f)
        out.write("vertex,index,class,curvature\n")
        for v in range(g.vertex_count):
            out.write(f"{v},{report.indices[v]},{report.classes[v]},{fmt(tp.curvature(c, v))}\n")
        out.write(f"total,{report.total},,\n")
        return 0
    if args.action == "classify":
        cls = cx.classify(c)
        boundary = " ".join(str(v) for v in cls.boundary)
        out.write(f"kind: {cls.kind}\n")
        out.write(f"boundary: {boundary}\n")
        out.write(f"flat: {'yes' if cls.flat else 'no'}\n")
        return 0
    raise UsageError(f"unknown graph action {args.action!r}")


def cmd_forms(args, out):
    g = _load_graph(args)
    c = cx.build_complex(g, max_dim=8)
    if args.action == "dirac":
        _print_matrix(forms.dirac(c).data, out)
        return 0
    if args.action == "laplacian":
        if args.degree is not None:
            _print_matrix(forms.laplacian_block(c, args.degree).data, out)
        else:
            _print_matrix(forms.laplacian(c).data, out)
        return 0
    if args.action == "stokes":
        if not args.form:
            raise UsageError("stokes needs --form PATH")
        degree = args.degree if args.degree is not None else 1
        F = _load_form(args.form, c, degree)
        region = list(c.simplices[degree + 1])
        orientation = cx.orient_region(c, degree + 1, region)
        lhs = forms.integrate(forms.apply_d(F), region, orientation)
        rhs = sum(
            sign * F.values[c.index[degree][face]]
            for face, sign in orientation.boundary_signs.items()
        )
        out.write(f"surface_integral: {fmt(lhs)}\n")
        out.write(f"boundary_integral: {fmt(rhs)}\n")
        out.write(f"residual: {fmt(lhs - rhs)}\n")
        return 0
    if args.action == "poisson":
        if not args.current:
            raise UsageError("poisson needs --current PATH")
        j = _load_form(args.current, c, 1)
        A, F = forms.poisson_maxwell(c, j)
        out.write("degree,simplex,value\n")
        for i, s in enumerate(c.simplices[1]):
            out.write(f"1,{_simplex_name(s)},{fmt(float(A.values[i]))}\n")
        for i, s in enumerate(c.simplices[2] if c.top_dim >= 2 else ()):
            out.write(f"2,{_simplex_name(s)},{fmt(float(F.values[i]))}\n")
        return 0
    raise UsageError(f"unknown forms action {args.action!r}")


def cmd_pde(args, out):
    g = _load_graph(args)
    c = cx.build_complex(g, max_dim=8)
    offsets = forms.block_offsets(c)

    def write_state(vec):
        out.write("t,simplex,value\n")
        for k in range(c.top_dim + 1):
            for i, s in enumerate(c.simplices[k]):
                out.write(f"{fmt(args.t)},{k}:{_simplex_name(s)},{fmt(vec[offsets[k] + i])}\n")

    if args.action == "heat":
        degree = args.degree if args.degree is not None else 0
        f0 = _load_form(args.form, c, degree)
        result = ev.heat_flow(c, degree, forms.Form(c, degree, np.asarray([float(v) for v in f0.values])), args.t)
        out.write("t,simplex,value\n")
        for i, s in enumerate(c.simplices[degree]):
            out.write(f"{fmt(args.t)},{degree}:{_simplex_name(s)},{fmt(float(result.values[i]))}\n")
        return 0
    if args.action == "schrodinger":
        psi0 = _load_state_vector(args.form, c)
        result = ev.schrodinger_flow(c, psi0, args.t)
        write_state(result)
        return 0
    if args.action == "wave":
        f0 = _load_state_vector(args.form, c)
        g0 = _load_state_vector(args.velocity, c) if args.velocity else np.zeros(forms.total_dim(c))
        result = ev.wave_flow(c, f0, g0, args.t)
        write_state(result)
        return 0
    raise UsageError(f"unknown pde action {args.action!r}")


# ---------------------------------------------------------------------------
# Plotting (dependency-free SVG)

_SVG_W, _SVG_H = 800, 500
_MARGIN = 40


def _polyline(points, color):
    coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in points)
    return f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{coords}"/>'


def _plot_functions(fn: str, a: float, h: float):
    """Return (discrete, classical) callables for the named function."""
    if fn == "sin":
        return (lambda x: exp_h_complex(a, h, x).imag, lambda x: math.sin(a * x))
    if fn == "cos":
        return (lambda x: exp_h_complex(a, h, x).real, lambda x: math.cos(a * x))
    if fn == "exp":
        return (lambda x: exp_h(a, h, x), lambda x: math.exp(a * x))
    if fn == "log":
        return (lambda x: log_discrete(x), lambda x: math.log(x))
    if fn.startswith("pow:"):
        n = int(fn.split(":", 1)[1])

        def falling(x):
            result = 1.0
            for j in range(n):
                result *= x - j * h
            return result

        return (falling, lambda x: x ** n)
    raise UsageError(f"unknown plot function {fn!r}")


def cmd_plot(args, out):
    lo_text, _, hi_text = args.range.partition(":")
    try:
        lo, hi = float(lo_text), float(hi_text)
    except ValueError:
        raise UsageError(f"bad range {args.range!r}; expected LO:HI")
    if hi <= lo:
        raise UsageError("range needs LO < HI")
    discrete, classical = _plot_functions(args.fn, args.a, args.h)
    steps = 400
    xs = [lo + (hi - lo) * i / steps for i in range(steps + 1)]
    if args.fn == "log":
        xs = [x for x in xs if x > 0]
        if not xs:
            raise DomainError("log needs a positive range")
    series = [[(x, discrete(x)) for x in xs], [(x, classical(x)) for x in xs]]
    ys = [y for points in series for _, y in points]
    ymin, ymax = min(ys), max(ys)
    if ymax == ymin:
        ymax = ymin + 1.0

    def to_px(x, y):
        px = _MARGIN + (x - lo) / (hi - lo) * (_SVG_W - 2 * _MARGIN)
        py = _SVG_H - _MARGIN - (y - ymin) / (ymax - ymin) * (_SVG_H - 2 * _MARGIN)
        return px, py

    body = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_SVG_W} {_SVG_H}">',
        f'<rect width="{_SVG_W}" height="{_SVG_H}" fill="white"/>',
        f'<line x1="{_MARGIN}" y1="{_SVG_H - _MARGIN}" x2="{_SVG_W - _MARGIN}" y2="{_SVG_H - _MARGIN}" stroke="black"/>',
        f'<line x1="{_MARGIN}" y1="{_MARGIN}" x2="{_MARGIN}" y2="{_SVG_H - _MARGIN}" stroke="black"/>',
        _polyline([to_px(x, y) for x, y in series[0]], "steelblue"),
        _polyline([to_px(x, y) for x, y in series[1]], "firebrick"),
        "</svg>",
    ]
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(body) + "\n")
    out.write(f"wrote {args.out}\n")
    return 0


# ---------------------------------------------------------------------------
# Argument wiring


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="discalc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression at an integer point")
    p.add_argument("expression")
    p.add_argument("--at", type=int, required=True)
    p.add_argument("--op", choices=["none", "diff", "sum"], default="none")

    p = sub.add_parser("sum", help="definite sum with inclusive bounds")
    p.add_argument("expression")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)

    p = sub.add_parser("taylor", help="Newton-Gregory interpolation of samples")
    p.add_argument("--samples", required=True)
    p.add_argument("--eval", type=int, default=None)
    p.add_argument("--print", dest="print_form", action="store_true")

    p = sub.add_parser("graph", help="graph and topology reports")
    p.add_argument("action", choices=["info", "betti", "curvature", "indices", "classify"])
    p.add_argument("--gen", default=None)
    p.add_argument("--file", default=None)
    p.add_argument("--fn", default=None)

    p = sub.add_parser("forms", help="operator matrices and integral theorems")
    p.add_argument("action", choices=["dirac", "laplacian", "stokes", "poisson"])
    p.add_argument("--gen", default=None)
    p.add_argument("--file", default=None)
    p.add_argument("--form", default=None)
    p.add_argument("--current", default=None)
    p.add_argument("--degree", type=int, default=None)

    p = sub.add_parser("pde", help="heat, wave and Schroedinger flows")
    p.add_argument("action", choices=["heat", "wave", "schrodinger"])
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--form", required=True)
    p.add_argument("--velocity", default=None)
    p.add_argument("--gen", default=None)
    p.add_argument("--file", default=None)
    p.add_argument("--degree", type=int, default=None)

    p = sub.add_parser("plot", help="SVG comparison of deformed vs classical")
    p.add_argument("--fn", required=True)
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--h", type=float, default=1.0)
    p.add_argument("--range", required=True)
    p.add_argument("--out", required=True)

    return parser


_COMMANDS = {
    "eval": cmd_eval,
    "sum": cmd_sum,
    "taylor": cmd_taylor,
    "graph": cmd_graph,
    "forms": cmd_forms,
    "pde": cmd_pde,
    "plot": cmd_plot,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, sys.stdout)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except expr.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, expr.NoClosedFormError, cx.NonOrientableError,
            forms.NotGradientFieldError, forms.HarmonicComponentError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
