"""Command-line front end over the JSON formats.

Exit status: 0 success or true, 1 structural failure or false (diagnostic
JSON on stderr), 2 usage or parse error.
"""

import argparse
import json
import sys

from . import classification as cls
from . import cohomology as coh
from . import io
from . import monoidal_groupoid as mg
from . import twogroups as tg
from .errors import AlgebraError
from .finite_algebra import DEFAULT_MAX_ORDER, cyclic_group, validate_hom


class Verdict(Exception):
    """A false answer, carrying the diagnostic for stderr."""

    def __init__(self, diag):
        super().__init__(diag.get("error", "false"))
        self.diag = diag


def _emit(args, obj):
    text = obj if isinstance(obj, str) else io.dumps(obj)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _module(args):
    return io.read_module(io.load(args.group), io.load(args.coeffs), io.load(args.action))


def _raise_if(err):
    if err is not None:
        raise err


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args):
    obj = io.load(args.file)
    kind = obj.get("kind") if isinstance(obj, dict) else None
    if kind in ("action", "cochain"):
        if not (args.group and args.coeffs):
            raise io.FormatError(f"validating {kind} needs --group and --coeffs")
        G = io.read_group(io.load(args.group))
        H = io.read_abelian(io.load(args.coeffs))
        if kind == "action":
            io.read_action(obj, G, H)
        else:
            if not args.action:
                raise io.FormatError("validating a cochain needs --action")
            io.read_cochain(obj, coh.Module(G, H, io.read_action(io.load(args.action), G, H)))
    elif kind == "inverse_choice":
        choice = io.read_choice(obj)
        if args.groupoid:
            M = io.read_groupoid(io.load(args.groupoid))
            for x in range(M.n_objects):
                mg.check_zigzags(M, choice, x)
    elif kind in io.READERS:
        io.READERS[kind](obj)
    else:
        raise io.FormatError(f"unknown kind {kind!r}")
    return "true\n"


def cmd_cohomology(args):
    Hn = coh.cohomology_group(_module(args), args.degree)
    return Hn.to_json(reps=args.reps)


def cmd_is_cocycle(args):
    f = io.read_cochain(io.load(args.file), _module(args))
    if not coh.is_cocycle(f):
        raise Verdict({"error": "NotCocycle", "witness": None})
    return "true\n"


def cmd_build(args):
    q = io.read_quadruple(io.load(args.quadruple))
    M, choice = mg.groupoid_from_quadruple(q)
    if args.choices_out:
        with open(args.choices_out, "w") as fh:
            fh.write(io.dumps(choice.to_json()))
    return M.to_json()


def cmd_crossed(args):
    obj = io.load(args.file)
    if args.direction == "to-strict":
        return tg.crossed_to_strict(io.read_crossed_module(obj)).to_json()
    return tg.strict_to_crossed(io.read_strict(obj)).to_json()


def cmd_verify(args):
    obj = io.load(args.file)
    law = args.law
    if law == "peiffer":
        io.read_crossed_module(obj)
        return "true\n"
    M = io.read_groupoid(obj, validate=False)
    if law in ("pentagon", "triangle"):
        _raise_if(mg.first_failure(M, laws=(law,), max_morphisms=args.max_morphisms))
        return "true\n"
    M = mg.validate_monoidal_groupoid(M, max_morphisms=args.max_morphisms)
    if law == "eckmann":
        if not mg.eckmann_hilton_check(M):
            raise Verdict({"error": "EckmannHiltonFailed", "witness": None})
        return "true\n"
    if not args.choices:
        raise io.FormatError("verify zigzag needs --choices")
    choice = io.read_choice(io.load(args.choices))
    for x in range(M.n_objects):
        first, second = mg.check_zigzags(M, choice, x)
        if not (first and second):
            raise Verdict({"error": "ZigZagFailed", "witness": [x, first, second]})
    return "true\n"


def cmd_improve(args):
    M = io.read_groupoid(io.load(args.groupoid))
    choice = io.read_choice(io.load(args.choices))
    return mg.improve(M, choice).to_json()


def cmd_classify(args):
    if args.what == "equivalent":
        if len(args.files) != 2:
            raise io.FormatError("classify equivalent takes two quadruple files")
        q, q2 = (io.read_quadruple(io.load(p)) for p in args.files)
        if cls.equivalent(q, q2) is None:
            raise Verdict({"error": "NotEquivalent", "witness": None})
        return "true\n"
    if args.files or not (args.group and args.coeffs and args.action):
        raise io.FormatError("classify count takes --group, --coeffs and --action")
    M = _module(args)
    orbits = cls.equivalence_orbits(M.group, M.coeffs, M.action)
    return {"classes": len(orbits), "orbits": [[list(c) for c in o] for o in orbits]}


def cmd_homs(args):
    a, b = (io.load(p) for p in args.files)
    if args.what == "enumerate":
        q, q2 = io.read_quadruple(a), io.read_quadruple(b)
        if args.count_only:
            return {"count": cls.count_homs(q, q2)}
        homs = cls.enumerate_homs(q, q2, max_enumerate=args.max_enumerate)
        return io.hom_list_json(q, q2, homs)
    F, F2 = io.read_special_hom(a), io.read_special_hom(b)
    if args.what == "compose":
        return cls.compose_homs(F, F2).to_json()
    cells = cls.enumerate_2homs(F, F2, max_enumerate=args.max_enumerate)
    return io.two_hom_list_json(F, F2, cells)


def cmd_example(args):
    if args.which == "aut2":
        if args.order is None:
            raise io.FormatError("example aut2 needs --order")
        return tg.aut2group(cyclic_group(args.order), args.max_order).to_json()
    if args.which == "trivial-t":
        M = _module(args)
        return tg.trivial_t_crossed(M.group, M.coeffs, M.action).to_json()
    if not (args.cover and args.base and args.map):
        raise io.FormatError("example central-ext needs --cover, --base and --map")
    H = io.read_group(io.load(args.cover))
    G = io.read_group(io.load(args.base))
    p = validate_hom(H, G, [int(v) for v in args.map.split(",")])
    return tg.central_extension_crossed(p).to_json()


def cmd_strictify(args):
    q = io.read_quadruple(io.load(args.file))
    out = cls.strictify_if_coboundary(q)
    if out is None:
        raise Verdict({"error": "NotCoboundary", "witness": None})
    return out[1].to_json()


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write(io.dumps({"error": "UsageError", "message": message}))
        raise SystemExit(2)


def _module_flags(p, required=False):
    p.add_argument("--group", required=required, help="group JSON")
    p.add_argument("--coeffs", required=required, help="abelian coefficient group JSON")
    p.add_argument("--action", required=required, help="action JSON")


def build_parser():
    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                      help="bound on automorphism group orders (default 24)")
    caps.add_argument("--max-enumerate", type=int, default=cls.DEFAULT_MAX_ENUMERATE,
                      help="cap on enumerated solutions (default 100000)")
    caps.add_argument("--max-morphisms", type=int, default=mg.DEFAULT_MAX_MORPHISMS,
                      help="cap on groupoid size for law checks (default 64)")
    parser = _Parser(prog="finite2groups", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[caps], help="validate any JSON object")
    p.add_argument("file")
    _module_flags(p)
    p.add_argument("--groupoid", help="groupoid for checking an inverse choice")
    p.set_defaults(func=cmd_validate, verdict=True)

    p = sub.add_parser("cohomology", parents=[caps], help="H^n(G, H) with invariant factors")
    _module_flags(p, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--reps", action="store_true", help="include cocycle representatives")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("is-cocycle", parents=[caps], help="test a cochain for closedness")
    p.add_argument("file")
    _module_flags(p, required=True)
    p.set_defaults(func=cmd_is_cocycle, verdict=True)

    p = sub.add_parser("build", parents=[caps], help="build a groupoid model")
    p.add_argument("shape", choices=["skeletal"])
    p.add_argument("--quadruple", required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--choices-out", help="also write the builder's inverse choice")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("crossed", parents=[caps], help="crossed module <-> strict 2-group")
    p.add_argument("direction", choices=["to-strict", "from-strict"])
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_crossed)

    p = sub.add_parser("verify", parents=[caps], help="check one coherence law")
    p.add_argument("law", choices=["pentagon", "triangle", "zigzag", "peiffer", "eckmann"])
    p.add_argument("file")
    p.add_argument("--choices")
    p.set_defaults(func=cmd_verify, verdict=True)

    p = sub.add_parser("improve", parents=[caps], help="make an inverse choice adjoint")
    p.add_argument("--groupoid", required=True)
    p.add_argument("--choices", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_improve)

    p = sub.add_parser("classify", parents=[caps], help="equivalence test or class count")
    p.add_argument("what", choices=["equivalent", "count"])
    p.add_argument("files", nargs="*")
    _module_flags(p)
    p.set_defaults(func=cmd_classify, verdict=True)

    p = sub.add_parser("homs", parents=[caps], help="homomorphisms and 2-homomorphisms")
    p.add_argument("what", choices=["enumerate", "compose", "two-cells"])
    p.add_argument("files", nargs=2)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_homs)

    p = sub.add_parser("example", parents=[caps], help="crossed module builders")
    p.add_argument("which", choices=["aut2", "trivial-t", "central-ext"])
    p.add_argument("--order", type=int, help="aut2: H = Z/order")
    _module_flags(p)
    p.add_argument("--cover", help="central-ext: group H")
    p.add_argument("--base", help="central-ext: group G")
    p.add_argument("--map", help="central-ext: images of H's elements, comma separated")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("strictify", parents=[caps], help="strict model when [a] = 0")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_strictify)
    return parser


def run(argv=None):
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except Verdict as v:
        sys.stdout.write("false\n")
        sys.stderr.write(io.dumps(v.diag))
        return 1
    except AlgebraError as exc:
        if getattr(args, "verdict", False):
            sys.stdout.write("false\n")
        sys.stderr.write(io.dumps({"error": exc.code, "witness": exc.witness,
                                   "message": str(exc)}))
        return 1
    except (io.FormatError, KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        sys.stderr.write(io.dumps({"error": "ParseError", "message": str(exc)}))
        return 2
    _emit(args, result)
    return 0


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
