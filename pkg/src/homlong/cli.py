"""Command-line surface: validate definition files, run identity checks,
emit constructions, and search for Hom-Long solutions.

Exit codes: 0 all verdicts pass, 1 some check failed, 2 input/shape error or
unmet hypothesis.  Output is deterministic byte-for-byte for fixed inputs and
flags; --format json emits a canonical report that round-trips.
"""

import argparse
import json
import sys

from .linalg import DimensionMismatch, SingularMatrix, scalar
from .report import AxiomReport
from . import io as hio
from .io import FileFormatError
from .homstruct import (HomAlgebra, HomCoalgebra, HomBialgebra, HomHopfAlgebra,
                        NotAutomorphism, validate_hom_algebra, validate_hom_coalgebra,
                        validate_all, validate_quasitriangular,
                        validate_coquasitriangular, yau_twist)
from .repmod import (HomModule, HomComodule, YetterDrinfeldModule,
                     validate_hom_module, validate_hom_comodule, check_yd)
from .longdimod import (HomLongDimodule, MismatchedBase, AntipodeNotInvertible,
                        validate_long_dimodule, tensor_dimodule, left_dual,
                        right_dual, check_snake, check_coherence, to_smash_module,
                        from_smash_module)
from .longeq import (HAlphaLongDimodule, OperatorOnTensorSquare, ZeroDiagonal,
                     SearchSpaceTooLarge, check_long_equation,
                     validate_halpha_dimodule, dimodule_solution, module_extension,
                     comodule_extension, search_solutions)
from .braidcat import (InvalidContext, NotAMorphism, long_braiding,
                       check_braid_morphism, check_hexagons, check_qybe,
                       check_symmetry)


class RunReport:
    def __init__(self, command, inputs, seed=None):
        self.command = command
        self.inputs = list(inputs)
        self.checks = []
        self.flags = {}
        self.notes = []
        if seed is not None:
            self.flags["seed"] = seed

    def absorb(self, axiom_report, prefix=""):
        for c in axiom_report.checks:
            self.checks.append((prefix + c.axiom, "pass" if c.passed else "fail",
                                c.witness))
        for k, v in axiom_report.flags.items():
            self.flags[prefix + k] = v
        return self

    @property
    def exit_code(self):
        return 0 if all(v == "pass" for _, v, _ in self.checks) else 1

    def to_json(self):
        return {
            "command": self.command,
            "inputs": self.inputs,
            "checks": [[a, v, _json_witness(w)] for a, v, w in self.checks],
            "flags": {k: _json_witness(v) for k, v in self.flags.items()},
            "notes": self.notes,
            "exit_code": self.exit_code,
        }

    def render(self, fmt, verbose=False):
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2, sort_keys=True,
                              ensure_ascii=False)
        lines = ["%s" % self.command]
        for p in self.inputs:
            lines.append("  input: %s" % p)
        for a, v, w in self.checks:
            line = "  %-34s %s" % (a, v)
            if w is not None and (v == "fail" or verbose):
                line += "  witness=%r" % (w,)
            lines.append(line)
        for k in sorted(self.flags):
            lines.append("  [flag] %-27s %s" % (k, self.flags[k]))
        for n in self.notes:
            lines.append("  note: %s" % n)
        lines.append("result: %s" % ("ok" if self.exit_code == 0 else "FAIL"))
        return "\n".join(lines)


def _json_witness(w):
    if isinstance(w, tuple):
        return [_json_witness(x) for x in w]
    if isinstance(w, (list, dict, str, int, bool)) or w is None:
        return w
    return str(w)


def _load_kind(path, expect=None):
    s = hio.load_structure(path)
    if expect is not None and not isinstance(s, expect):
        raise FileFormatError("expected %s" %
                              " or ".join(t.__name__ for t in (
                                  expect if isinstance(expect, tuple) else (expect,))),
                              path)
    return s


def cmd_validate(args, report):
    s = hio.load_structure(args.file)
    if args.kind and isinstance(s, (HomBialgebra, HomHopfAlgebra)):
        if args.kind == "hom-algebra":
            s = s.algebra
        elif args.kind == "hom-coalgebra":
            s = s.coalgebra
    if isinstance(s, HomAlgebra):
        report.absorb(validate_hom_algebra(s))
    elif isinstance(s, HomCoalgebra):
        report.absorb(validate_hom_coalgebra(s))
    elif isinstance(s, (HomBialgebra, HomHopfAlgebra)):
        report.absorb(validate_all(s))
        raw = hio._read(args.file)
        if isinstance(s, HomHopfAlgebra) and "R" in raw:
            report.absorb(validate_quasitriangular(
                s, hio.load_matrix(raw["R"], args.file + ".R")), "R:")
        if isinstance(s, HomHopfAlgebra) and "form" in raw:
            report.absorb(validate_coquasitriangular(
                s, hio.load_matrix(raw["form"], args.file + ".form")), "form:")
    elif isinstance(s, HomModule):
        report.absorb(validate_hom_module(s.over, s))
    elif isinstance(s, HomComodule):
        report.absorb(validate_hom_comodule(s.over, s))
    elif isinstance(s, YetterDrinfeldModule):
        report.absorb(validate_hom_module(s.over.algebra, s.module_part()), "module:")
        report.absorb(validate_hom_comodule(s.over.coalgebra, s.comodule_part()),
                      "comodule:")
        report.absorb(check_yd(s.over, s))
    elif isinstance(s, HomLongDimodule):
        report.absorb(validate_long_dimodule(s))
    elif isinstance(s, HAlphaLongDimodule):
        report.absorb(validate_halpha_dimodule(s))
    elif isinstance(s, OperatorOnTensorSquare):
        report.absorb(check_long_equation(s))
    else:
        raise FileFormatError("nothing to validate", args.file)
    return report


def cmd_check(args, report):
    subject = args.subject
    if subject == "longeq":
        op = _load_kind(args.operator, OperatorOnTensorSquare)
        return report.absorb(check_long_equation(op))
    if subject == "yd":
        yd = _load_kind(args.module or args.m, YetterDrinfeldModule)
        report.absorb(validate_hom_module(yd.over.algebra, yd.module_part()), "module:")
        report.absorb(validate_hom_comodule(yd.over.coalgebra, yd.comodule_part()),
                      "comodule:")
        return report.absorb(check_yd(yd.over, yd))
    if subject == "snake":
        d = _load_kind(args.dimodule, HomLongDimodule)
        duality = left_dual(d) if args.side == "left" else right_dual(d)
        report.absorb(validate_long_dimodule(duality.dual), "dual:")
        return report.absorb(check_snake(d, duality))
    if subject == "roundtrip":
        d = _load_kind(args.dimodule, HomLongDimodule)
        n = to_smash_module(d)
        report.absorb(validate_hom_module(n.over, n), "smash-module:")
        back = from_smash_module(n, d.H, d.B)
        same = (back.action == d.action and back.coaction == d.coaction
                and back.mu == d.mu)
        rep = AxiomReport().add("round-trip", same)
        return report.absorb(rep)
    if subject == "coherence":
        u = _load_kind(args.u, HomLongDimodule)
        v = _load_kind(args.v, HomLongDimodule)
        w = _load_kind(args.w, HomLongDimodule)
        x = _load_kind(args.x, HomLongDimodule) if args.x else None
        return report.absorb(check_coherence(u, v, w, x))
    ctx = hio.load_context(args.ctx)
    if subject == "symmetry":
        m = _load_kind(args.m, HomLongDimodule)
        n = _load_kind(args.n, HomLongDimodule)
        rep = check_symmetry(ctx, m, n, diagnose=args.diagnose)
        report.absorb(rep)
        if not rep.flags.get("hypothesis-met", True):
            report.notes.append("hypothesis unmet: context is not triangular+cotriangular")
            raise HypothesisUnmet(report)
        return report
    u = _load_kind(args.u, HomLongDimodule)
    v = _load_kind(args.v, HomLongDimodule)
    w = _load_kind(args.w, HomLongDimodule)
    if subject == "ybe":
        return report.absorb(check_qybe(ctx, u, v, w))
    if subject == "hexagon":
        return report.absorb(check_hexagons(ctx, u, v, w))
    raise FileFormatError("unknown check subject %r" % subject)


class HypothesisUnmet(Exception):
    def __init__(self, report):
        self.report = report


def cmd_build(args, report):
    what = args.what
    built = None
    extra = {}
    if what == "braid":
        ctx = hio.load_context(args.ctx)
        m = _load_kind(args.m, HomLongDimodule)
        n = _load_kind(args.n, HomLongDimodule)
        op = long_braiding(ctx, m, n)
        report.absorb(check_braid_morphism(ctx, m, n))
        built = {
            "kind": "braid-operator",
            "rows": ["%s⊗%s" % (a, b) for a in n.basis for b in m.basis],
            "cols": ["%s⊗%s" % (a, b) for a in m.basis for b in n.basis],
            "matrix": hio.matrix_json(op.matrix),
        }
    elif what == "dual":
        d = _load_kind(args.dimodule, HomLongDimodule)
        duality = left_dual(d) if args.side == "left" else right_dual(d)
        report.absorb(validate_long_dimodule(duality.dual), "dual:")
        report.absorb(check_snake(d, duality))
        built = hio.structure_to_json(duality.dual)
        built["ev"] = hio.matrix_json(duality.ev)
        built["coev"] = hio.matrix_json(duality.coev)
        built["side"] = duality.side
    elif what == "tensor":
        m = _load_kind(args.m, HomLongDimodule)
        n = _load_kind(args.n, HomLongDimodule)
        t = tensor_dimodule(m, n)
        report.absorb(validate_long_dimodule(t))
        built = hio.structure_to_json(t)
    elif what == "twist":
        base = _load_kind(args.base, (HomBialgebra, HomHopfAlgebra))
        raw = hio._read(args.phi)
        phi = hio.load_matrix(raw["matrix"] if isinstance(raw, dict) else raw,
                              args.phi)
        twisted = yau_twist(base, phi)
        report.absorb(validate_all(twisted))
        built = hio.algebra_to_json(twisted)
    elif what == "dimodule-solution":
        d = _load_kind(args.dimodule, HAlphaLongDimodule)
        op = dimodule_solution(d)
        report.absorb(check_long_equation(op))
        built = hio.structure_to_json(op)
    elif what == "extension":
        base = _load_kind(args.base, (HomBialgebra, HomHopfAlgebra))
        mod = hio.load_structure(args.m)
        variant = args.variant
        if variant is None:
            variant = "module" if isinstance(mod, HomModule) else "comodule"
        if variant == "module":
            ext = module_extension(base, mod)
        else:
            ext = comodule_extension(base, mod)
        report.absorb(validate_halpha_dimodule(ext))
        built = hio.structure_to_json(ext)
    elif what == "smash":
        d = _load_kind(args.dimodule, HomLongDimodule)
        n = to_smash_module(d)
        report.absorb(validate_hom_module(n.over, n))
        built = hio.structure_to_json(n)
    else:
        raise FileFormatError("unknown build target %r" % what)
    if report.exit_code == 0 and args.out:
        hio.dump_json(built, args.out)
        report.notes.append("wrote %s" % args.out)
    elif args.out:
        report.notes.append("output not written: post-validation failed")
    return report


def cmd_search(args, report):
    raw = hio._read(args.mu)
    mu = hio.load_matrix(raw["mu"] if isinstance(raw, dict) and "mu" in raw
                         else raw, args.mu)
    values = [scalar(s) for s in args.set.split(",") if s.strip() != ""]
    sols = search_solutions(mu, values, args.shape)
    rep = AxiomReport()
    rep.add("exhaustive-search", True)
    rep.set_flag("solutions", len(sols))
    report.absorb(rep)
    if args.out:
        hio.dump_json({
            "kind": "solution-list",
            "n": mu.rows,
            "mu": hio.matrix_json(mu),
            "shape": args.shape,
            "solutions": [hio.matrix_json(s.matrix) for s in sols],
        }, args.out)
        report.notes.append("wrote %s" % args.out)
    report.notes.append("%d solutions" % len(sols))
    return report


def build_parser():
    p = argparse.ArgumentParser(prog="homlong",
                                description="Exact checks for Hom-Hopf structures, "
                                            "Hom-Long dimodules and braidings.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--diagnose", action="store_true", default=False)
    p.add_argument("--seed", type=int, default=None)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="validate a definition file")
    v.add_argument("file")
    v.add_argument("--kind", default=None)

    c = sub.add_parser("check", help="check a named identity")
    c.add_argument("subject", choices=("ybe", "hexagon", "symmetry", "longeq",
                                       "yd", "snake", "roundtrip", "coherence"))
    c.add_argument("--ctx")
    c.add_argument("-U", dest="u")
    c.add_argument("-V", dest="v")
    c.add_argument("-W", dest="w")
    c.add_argument("-X", dest="x")
    c.add_argument("-M", dest="m")
    c.add_argument("-N", dest="n")
    c.add_argument("-R", dest="operator")
    c.add_argument("-D", dest="dimodule")
    c.add_argument("--module", dest="module")
    c.add_argument("--side", choices=("left", "right"), default="left")
    c.add_argument("--diagnose", action="store_true", default=argparse.SUPPRESS)

    b = sub.add_parser("build", help="emit a construction as a file")
    b.add_argument("what", choices=("braid", "dual", "tensor", "twist",
                                    "dimodule-solution", "extension", "smash"))
    b.add_argument("--ctx")
    b.add_argument("-M", dest="m")
    b.add_argument("-N", dest="n")
    b.add_argument("-D", dest="dimodule")
    b.add_argument("--base")
    b.add_argument("--phi")
    b.add_argument("--variant", choices=("module", "comodule"), default=None)
    b.add_argument("--side", choices=("left", "right"), default="left")
    b.add_argument("-o", dest="out")

    s = sub.add_parser("search", help="exhaustive grid search for solutions")
    s.add_argument("--mu", required=True)
    s.add_argument("--set", required=True)
    s.add_argument("--shape", choices=("diagonal", "full"), default="diagonal")
    s.add_argument("-o", dest="out")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    inputs = [x for x in (getattr(args, "file", None), getattr(args, "ctx", None),
                          getattr(args, "u", None), getattr(args, "v", None),
                          getattr(args, "w", None), getattr(args, "x", None),
                          getattr(args, "m", None), getattr(args, "n", None),
                          getattr(args, "operator", None),
                          getattr(args, "dimodule", None),
                          getattr(args, "module", None), getattr(args, "base", None),
                          getattr(args, "phi", None), getattr(args, "mu", None))
              if x]
    name = args.command if args.command != "check" else "check %s" % args.subject
    if args.command == "build":
        name = "build %s" % args.what
    report = RunReport(name, inputs, seed=args.seed)
    try:
        if args.command == "validate":
            cmd_validate(args, report)
        elif args.command == "check":
            cmd_check(args, report)
        elif args.command == "build":
            cmd_build(args, report)
        elif args.command == "search":
            cmd_search(args, report)
    except HypothesisUnmet as exc:
        print(exc.report.render(args.format, args.verbose))
        return 2
    except (FileFormatError, DimensionMismatch, SingularMatrix, MismatchedBase,
            AntipodeNotInvertible, InvalidContext, NotAMorphism, NotAutomorphism,
            ZeroDiagonal, SearchSpaceTooLarge, KeyError, ValueError, OSError) as exc:
        msg = "error: %s" % exc
        if args.format == "json":
            print(json.dumps({"command": name, "inputs": inputs, "error": str(exc),
                              "exit_code": 2}, indent=2, sort_keys=True))
        else:
            print(msg, file=sys.stderr)
        return 2
    print(report.render(args.format, args.verbose))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
