"""Command-line front end.

Exit status: 0 ok, 2 parse error, 3 validation error, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import adjunction as adj
from . import freemonad as fm
from . import frieze as fz
from . import ordmap, render, suites
from . import presentation as pr
from . import temperleylieb as tl
from .errors import ParseError, ValidationError
from .ordmap import OrdMap

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_FAILED = 0, 2, 3, 4
KINDS = ("term", "map", "monad-word", "adj-word", "frieze", "tl-word")


def _need_n(args) -> int:
    if args.n is None:
        raise ValidationError(f"{args.verb} needs --n")
    if args.n < 0:
        raise ValidationError(f"rank must be non-negative, got {args.n}")
    return args.n


def _load_json(text: str):
    """Inline JSON, or the contents of a file of that name."""
    path = Path(text)
    if not text.lstrip().startswith(("{", "[")) and path.exists():
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", exc.pos) from None


def _parse_map(text: str, n: int | None, m: int | None) -> OrdMap:
    """JSON {"n","m","values"}, a JSON list, or comma-separated values."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return OrdMap.from_json(_load_json(stripped))
    if stripped.startswith("["):
        values = _load_json(stripped)
    else:
        values = []
        pos = 0
        for part in stripped.split(",") if stripped else []:
            if not part.strip().isdigit():
                raise ParseError(f"bad map value {part.strip()!r}", pos)
            values.append(int(part))
            pos += len(part) + 1
    size = len(values)
    if n is not None and n != size:
        raise ValidationError(f"--n {n} does not match {size} values")
    return OrdMap(size, size if m is None else m, tuple(values))


def _load_frieze(text: str) -> tuple[fz.Frieze, tuple[int, int] | None]:
    data = _load_json(text)
    if not isinstance(data, dict):
        raise ValidationError("frieze JSON must be an object")
    index = tuple(data["index"]) if "index" in data else None
    return fz.Frieze.from_json(data), index


def _frieze_json(d: fz.Frieze, index=None) -> str:
    data = d.to_json()
    if index is not None:
        data["index"] = list(index)
    return json.dumps(data)


# -- conversions through order-preserving maps ---------------------------------

def to_map(kind: str, text: str, n: int | None, m: int | None, mode: str = "K") -> OrdMap:
    if kind == "term":
        if n is None:
            raise ValidationError("converting a term needs --n")
        return pr.sigma(pr.parse_term(text, n), n)
    if kind == "map":
        return _parse_map(text, n, m)
    if kind == "monad-word":
        return fm.functor_G(fm.MonadWord.parse(text).term())
    if kind == "adj-word":
        return adj.to_ordmap(adj.AdjWord.parse(text).term())
    if kind == "frieze":
        d, index = _load_frieze(text)
        if index is None:
            index = (2 * n, 2 * (n if m is None else m)) if n is not None else d.type
        return adj.functor_S(d, index)
    if kind == "tl-word":
        if n is None:
            raise ValidationError("converting a Temperley-Lieb word needs --n")
        diagram = tl.eval_word(tl.parse_tl_word(text), 2 * n, mode)
        if diagram.circles:
            raise ValidationError("diagram has closed circles and is not a frieze")
        return adj.functor_S(fz.from_segments(diagram.signed(), (2 * n, 2 * n)), (2 * n, 2 * n))
    raise ValidationError(f"unknown kind {kind!r}")


def from_map(kind: str, f: OrdMap) -> str:
    if kind in ("term", "tl-word") and not f.is_endo:
        raise ValidationError(f"{kind} needs an endomorphism, got {f.n}->{f.m}")
    if kind == "term":
        return pr.format_blocks(pr.normal_form_of_endo(f))
    if kind == "map":
        return json.dumps(f.to_json())
    if kind == "monad-word":
        return str(fm.from_ordmap(f))
    if kind == "adj-word":
        return str(adj.from_ordmap(f))
    if kind == "frieze":
        return _frieze_json(*adj.functor_D(f))
    if kind == "tl-word":
        term = pr.blocks_term(pr.normal_form_of_endo(f))
        return tl.format_tl_word(tl.embed_On_term(term, f.n)) if f.n >= 2 else "1"
    raise ValidationError(f"unknown kind {kind!r}")


# -- verbs ---------------------------------------------------------------------

def cmd_normalize(args, out):
    n = _need_n(args)
    blocks, trace = pr.normalize(pr.parse_term(args.term, n), n)
    if args.format == "json":
        data = {"normal_form": pr.format_blocks(blocks)}
        if args.trace:
            data["trace"] = [{"equation": s.equation, "word": pr.format_blocks(s.word)} for s in trace]
        print(json.dumps(data), file=out)
        return EXIT_OK
    if args.trace:
        for step in trace:
            print(f"{step.equation:<8} {pr.format_blocks(step.word)}", file=out)
    print(pr.format_blocks(blocks), file=out)
    return EXIT_OK


def cmd_eq(args, out):
    n = _need_n(args)
    same = pr.equal(pr.parse_term(args.left, n), pr.parse_term(args.right, n), n)
    print("true" if same else "false", file=out)
    return EXIT_OK


def cmd_eval(args, out):
    n = _need_n(args)
    print(json.dumps(pr.sigma(pr.parse_term(args.term, n), n).to_json()), file=out)
    return EXIT_OK


def cmd_decompose(args, out):
    f = _parse_map(args.map, args.n, None)
    symbols = ordmap.decompose(f)
    print(".".join(f"{letter}{i}" for letter, i in symbols) or "1", file=out)
    return EXIT_OK


def cmd_convert(args, out):
    f = to_map(args.source, args.value, args.n, args.m, args.mode)
    print(from_map(args.target, f), file=out)
    return EXIT_OK


def cmd_frieze_compose(args, out):
    d1, _ = _load_frieze(args.upper)
    d2, _ = _load_frieze(args.lower)
    text = _frieze_json(fz.compose(d1, d2))
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text, file=out)
    return EXIT_OK


def cmd_render(args, out):
    if args.frieze is not None:
        d, _ = _load_frieze(args.frieze)
    elif args.term is not None:
        n = _need_n(args)
        d = fz.from_endo(ordmap.OrdEndoN.extend(pr.sigma(pr.parse_term(args.term, n), n)))
    else:
        raise ValidationError("render needs --frieze or --term")
    w = args.w if args.w is not None else max(max(d.type), 1)
    fmt = "ascii" if args.format == "ascii" else "svg"
    text = render.to_svg(d, w) if fmt == "svg" else render.to_ascii(d, w)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_enumerate(args, out):
    n = _need_n(args)
    forms = pr.enumerate_normal_forms(n)
    if args.count_only:
        print(len(forms), file=out)
    else:
        for nf in forms:
            print(pr.format_blocks(nf), file=out)
    return EXIT_OK


def cmd_verify(args, out):
    if args.suite != "all" and args.suite not in suites.SUITES:
        raise ValidationError(f"unknown suite {args.suite!r}")
    reports = suites.run(args.suite)
    for r in reports:
        print(r.to_text(), file=out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simplicial",
                                     description="Order-preserving endomorphisms and their presentations.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--n", type=int)
        p.add_argument("--format", choices=("text", "json", "svg", "ascii"), default="text")
        return p

    p = verb("normalize", cmd_normalize, "print the normal form of a term")
    p.add_argument("term")
    p.add_argument("--trace", action="store_true", help="show each rewrite with its equation")

    p = verb("eq", cmd_eq, "decide whether two terms are equal")
    p.add_argument("left")
    p.add_argument("right")

    p = verb("eval", cmd_eval, "print the map denoted by a term as JSON")
    p.add_argument("term")

    p = verb("decompose", cmd_decompose, "write an endomorphism as a generator sequence")
    p.add_argument("map", help='values such as "0,0,2" or a JSON map')

    p = verb("convert", cmd_convert, "convert between representations")
    p.add_argument("source", choices=KINDS)
    p.add_argument("target", choices=KINDS)
    p.add_argument("value")
    p.add_argument("--m", type=int, help="target size for maps given by values")
    p.add_argument("--mode", choices=tl.MODES, default="K",
                   help="K keeps closed circles, J erases them")

    p = verb("frieze-compose", cmd_frieze_compose, "stack the second frieze below the first")
    p.add_argument("upper")
    p.add_argument("lower")
    p.add_argument("-o", "--output")

    p = verb("render", cmd_render, "draw a frieze as SVG or ASCII")
    p.add_argument("--frieze", help="frieze JSON or a file holding it")
    p.add_argument("--term", help="a term; its map is drawn as a frieze")
    p.add_argument("--w", type=int, help="window half-width")
    p.add_argument("-o", "--output")

    p = verb("enumerate", cmd_enumerate, "list the normal forms of rank n")
    p.add_argument("--count-only", action="store_true")

    p = verb("verify", cmd_verify, "run a verification suite")
    p.add_argument("suite", nargs="?", default="all",
                   help="presentation, monad, adjunction, frieze, tl-embedding or all")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
