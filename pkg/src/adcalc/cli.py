"""Command-line front end.

Operands are file paths, names loaded with --load, "-" for the JSON on
standard input, or a parenthesized constructor such as "(simplex 2)".
Everything prints JSON; exit 1 on a failed operation, 2 on unreadable input.
"""

from __future__ import annotations

import argparse
import json
import os
import shlex
import sys

from . import acceptance, constructions, omega
from .cells import Cell, atom_cell, enumerate_cells
from .complexes import (
    Complex,
    ComplexError,
    Morphism,
    generator_atom,
    validate_complex,
    validate_morphism,
)
from .homotopy import ANTIHOMOTOPY, HOMOTOPY, Family, validate_homotopy
from .slices import Slice, cone_homotopy, coslice, triangle_pullback
from .steiner import is_prerigid, is_rigid, steiner_report

CAP_VARIABLE = "ADCALC_CAP"


class InputError(Exception):
    """Unreadable or malformed input; maps to exit status 2."""


def default_cap() -> int:
    raw = os.environ.get(CAP_VARIABLE, "3")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{CAP_VARIABLE} must be an integer, got {raw!r}") from None


def split_operands(text: str) -> list[str]:
    """Shell-like split that keeps parenthesized groups together."""
    words, current, depth = [], [], 0
    for token in shlex.shlex(text, posix=True, punctuation_chars="()"):
        for piece in [token] if token.strip("()") else list(token):
            if piece == ")":
                depth -= 1
                if depth < 0:
                    raise InputError(f"unbalanced parentheses in {text!r}")
            current.append(piece if piece in "()" else shlex.quote(piece))
            if piece == "(":
                depth += 1
            elif depth == 0:
                group = " ".join(current).replace("( ", "(").replace(" )", ")")
                words.append(shlex.split(group)[0] if len(current) == 1 else group)
                current = []
    if depth:
        raise InputError(f"unbalanced parentheses in {text!r}")
    return words


# ----- loading -------------------------------------------------------------


class Workspace:
    def __init__(self):
        self.objects: dict[str, object] = {}
        self._stdin = None

    def add(self, name: str, obj) -> None:
        if name in self.objects and self.objects[name] is not obj:
            existing = self.objects[name]
            if not (isinstance(existing, Complex) and isinstance(obj, Complex) and existing.same_structure(obj)):
                raise InputError(f"name {name!r} is already bound")
        self.objects[name] = obj

    def stdin_json(self):
        if self._stdin is None:
            try:
                self._stdin = json.loads(sys.stdin.read())
            except json.JSONDecodeError as exc:
                raise InputError(f"standard input is not JSON: {exc}") from None
        return self._stdin

    def raw(self, operand: str):
        """The JSON (or already built object) an operand refers to."""
        if operand == "-":
            return self.stdin_json()
        if operand.startswith("("):
            if not operand.endswith(")"):
                raise InputError(f"unbalanced constructor {operand!r}")
            return run_nested(split_operands(operand[1:-1]), self)
        if operand in self.objects:
            return self.objects[operand]
        try:
            with open(operand, encoding="utf-8") as fh:
                return json.load(fh)
        except OSError as exc:
            raise InputError(f"cannot read {operand!r}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise InputError(f"{operand!r} is not JSON: {exc}") from None

    def complex(self, operand: str) -> Complex:
        return self.complex_from(self.raw(operand))

    def complex_from(self, data) -> Complex:
        if isinstance(data, Complex):
            return data
        if isinstance(data, str):
            if isinstance(self.objects.get(data), Complex):
                return self.objects[data]
            raise InputError(f"unknown complex {data!r}")
        if isinstance(data, dict) and "complex" in data and "basis" not in data:
            return self.complex_from(data["complex"])
        try:
            K = Complex.from_json(data)
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise InputError(f"malformed complex: {exc}") from None
        self.add(K.name, K)
        return K

    def bundled_complexes(self, data: dict) -> None:
        """Bind complexes carried alongside a morphism or family, as a list or a name map."""
        bundle = data.get("complexes") or []
        for K in bundle.values() if isinstance(bundle, dict) else bundle:
            self.complex_from(K)

    def morphism(self, operand: str) -> Morphism:
        return self.morphism_from(self.raw(operand))

    def morphism_from(self, data) -> Morphism:
        if isinstance(data, Morphism):
            return data
        if isinstance(data, str):
            obj = self.objects.get(data)
            if isinstance(obj, Morphism):
                return obj
            raise InputError(f"unknown morphism {data!r}")
        try:
            self.bundled_complexes(data)
            source = self.complex_from(data["source"])
            target = self.complex_from(data["target"])
            return Morphism.from_json(data, source, target)
        except (KeyError, TypeError, AttributeError) as exc:
            raise InputError(f"malformed morphism: {exc}") from None

    def family(self, operand: str) -> Family:
        return self.family_from(self.raw(operand))

    def family_from(self, data) -> Family:
        if isinstance(data, Family):
            return data
        if isinstance(data, str):
            obj = self.objects.get(data)
            if isinstance(obj, Family):
                return obj
            raise InputError(f"unknown family {data!r}")
        try:
            self.bundled_complexes(data)
            level = int(data["level"])
            end = self.morphism_from if level == 1 else self.family_from
            source, target = end(data["source"]), end(data["target"])
            variance = {"anti": ANTIHOMOTOPY, "homo": HOMOTOPY}[data["variance"]]
            comps = {g: dict(c) for g, c in (data.get("components") or {}).items()}
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise InputError(f"malformed family: {exc}") from None
        F = Family(variance, source, target, comps)
        if F.level != level:
            raise InputError(f"declared level {level} does not match its ends")
        return F

    def any(self, operand: str):
        data = self.raw(operand)
        if isinstance(data, (Complex, Morphism, Family)):
            return data
        if not isinstance(data, dict):
            raise InputError("expected a JSON object")
        if "basis" in data:
            return self.complex_from(data)
        if "variance" in data:
            return self.family_from(data)
        if "maps" in data:
            return self.morphism_from(data)
        raise InputError("cannot tell whether this is a complex, morphism or family")

    def load_file(self, path: str) -> None:
        data = self.raw(path)
        if not isinstance(data, dict):
            raise InputError(f"{path!r} does not hold a JSON object")
        if "basis" in data:
            self.complex_from(data)
            return
        self.bundled_complexes(data)
        for name, m in (data.get("morphisms") or {}).items():
            self.add(name, self.morphism_from(m))
        for name, h in (data.get("families") or {}).items():
            self.add(name, self.family_from(h))


def object_cell(L: Complex, ws: Workspace, operand: str) -> Cell:
    """An object of ν(L): a degree-0 generator name or a cell JSON."""
    if L.has_generator(operand) and L.degree_of(operand) == 0:
        return atom_cell(L, operand)
    data = ws.raw(operand)
    try:
        cell = Cell.from_json(data, L)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed cell: {exc}") from None
    if cell.dim != 0:
        raise ComplexError("expected an object, a 0-cell")
    return cell


# ----- output --------------------------------------------------------------


def morphism_json(f: Morphism) -> dict:
    out = f.to_json()
    out["complexes"] = {K.name: K.to_json() for K in (f.source, f.target)}
    return out


def family_json(F: Family) -> dict:
    out = F.to_json()
    end = morphism_json if F.level == 1 else family_json
    out["source"], out["target"] = end(F.source), end(F.target)
    return out


def emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")


# ----- subcommands ---------------------------------------------------------


def cmd_validate(a, ws):
    obj = ws.any(a.input)
    if isinstance(obj, Complex):
        return validate_complex(obj).to_json()
    if isinstance(obj, Morphism):
        return validate_morphism(obj).to_json()
    return validate_homotopy(obj).to_json()


def cmd_info(a, ws):
    K = ws.complex(a.input)
    sizes = [len(K.generators(d)) for d in range(K.dim + 1)]
    return {"name": K.name, "dim": K.dim, "basis_sizes": sizes, "size": K.size(), "decent": K.is_decent()}


def cmd_atoms(a, ws):
    K = ws.complex(a.input)
    gens = [a.gen] if a.gen else K.all_generators()
    return {g: generator_atom(K, g).to_json() for g in gens}


def cmd_check_steiner(a, ws):
    return steiner_report(ws.complex(a.input))


def cmd_check_rigid(a, ws):
    f = ws.morphism(a.input)
    return {"prerigid": is_prerigid(f).to_json(), "rigid": is_rigid(f).to_json()}


def cmd_join(a, ws):
    return constructions.join(ws.complex(a.left), ws.complex(a.right)).to_json()


def cmd_tensor(a, ws):
    return constructions.tensor(ws.complex(a.left), ws.complex(a.right)).to_json()


def cmd_dual(a, ws):
    K = ws.complex(a.input)
    named = {"op": constructions.op, "co": constructions.co, "opp": constructions.opp}
    if a.degrees in named:
        return named[a.degrees](K).to_json()
    try:
        degrees = [int(v) for v in a.degrees.split(",") if v]
    except ValueError:
        raise InputError("degrees must be op, co, opp or a comma-separated list") from None
    return constructions.dual(K, degrees).to_json()


def cmd_trunc(a, ws):
    K = ws.complex(a.input)
    if a.bete:
        return constructions.truncate_bete(K, a.n).to_json()
    return constructions.truncate_intelligent(K, a.n).complex.to_json()


def cmd_disk(a, ws):
    return constructions.disk_complex(a.i, a.letter).to_json()


def cmd_simplex(a, ws):
    return constructions.simplex_complex(a.m).to_json()


def cmd_theta(a, ws):
    try:
        signature = [int(v) for v in a.signature.split()]
    except ValueError:
        raise InputError("a signature is a list of integers") from None
    return constructions.theta_complex(signature).to_json()


def cmd_pushout(a, ws):
    P, left, right = constructions.pushout(ws.morphism(a.f), ws.morphism(a.g))
    if not a.legs:
        return P.to_json()
    return {"complex": P.to_json(), "left": morphism_json(left), "right": morphism_json(right)}


def cmd_slice(a, ws):
    return Slice(ws.complex(a.M), ws.morphism(a.g)).ambient.to_json()


def cmd_coslice(a, ws):
    return coslice(ws.complex(a.M), ws.morphism(a.g)).ambient.to_json()


def cmd_pullback(a, ws):
    P = triangle_pullback(ws.morphism(a.f), ws.family(a.h), ws.morphism(a.g), ws.morphism(a.g2))
    return morphism_json(P.morphism)


def cmd_cone(a, ws):
    k, H = ws.family(a.k), ws.family(a.H)
    h, h2, g2 = ws.family(a.h), ws.family(a.h2), ws.morphism(a.g2)
    g = h.source
    target = triangle_pullback(k.source, h, g, g2)
    source = triangle_pullback(k.target, h2, g, g2, target.source_slice, target.target_slice)
    C = cone_homotopy(k, H, source, target)
    return {
        "variance": "homo",
        "level": 1,
        "components": {x: c.to_json() for x, c in sorted(C.components.items()) if not c.is_zero()},
        "source": morphism_json(source.morphism),
        "target": morphism_json(target.morphism),
    }


def cmd_nerve(a, ws):
    K = ws.complex(a.input)
    simplices = constructions.street_nerve(K, a.n, a.cap)
    return {"count": len(simplices), "simplices": [x.to_json()["maps"] for x in simplices]}


def cmd_cells(a, ws):
    cells = enumerate_cells(ws.complex(a.input), a.i, a.cap)
    return {"count": len(cells), "cells": [c.to_json() for c in cells]}


def cmd_slice_cells(a, ws):
    L = ws.complex(a.L)
    cells = omega.enumerate_slice_cells(L, object_cell(L, ws, a.c), a.i, a.cap)
    return {"count": len(cells), "cells": [c.to_json() for c in cells]}


def cmd_cylinder_cells(a, ws):
    cells = omega.enumerate_cylinders(ws.complex(a.L), a.i, a.cap)
    return {"count": len(cells), "cells": [c.to_json() for c in cells]}


def cmd_crosscheck(a, ws):
    L = ws.complex(a.L)
    report = omega.crosscheck_slice(L, object_cell(L, ws, a.c), a.i_max, a.cap, a.trials or 40)
    return report.to_json()


def cmd_acceptance(a, ws):
    numbers = a.only or range(1, len(acceptance.CRITERIA) + 1)
    results = [acceptance.run_criterion(n, seed=a.seed, trials=a.trials) for n in numbers]
    payload = {"results": [r.to_json() for r in results], "passed": sum(r.ok for r in results), "total": len(results)}
    failed = [r.number for r in results if not r.ok]
    if failed:
        payload = {"error": f"criteria failed: {failed}", **payload}
        raise Reported(payload)
    return payload


class Reported(Exception):
    """A finished run whose JSON payload signals failure."""

    def __init__(self, payload):
        super().__init__(payload.get("error"))
        self.payload = payload


# ----- parser --------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """Usage errors become InputError instead of exiting from inside argparse."""

    def error(self, message):
        raise InputError(message)


def _cap_arg(p):
    p.add_argument("--cap", type=int, default=None, help=f"coefficient cap (default ${CAP_VARIABLE} or 3)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="adcalc", description="augmented directed complexes")
    parser.add_argument("--load", action="append", default=[], metavar="FILE",
                        help="bind the complexes, morphisms and families in FILE by name")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, *operands, help=None):
        p = sub.add_parser(name, help=help)
        for op in operands:
            p.add_argument(op)
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "input", help="check a complex, morphism or family")
    add("info", cmd_info, "input", help="basis sizes and decency")
    add("atoms", cmd_atoms, "input", help="atom tables").add_argument("--gen")
    add("check-steiner", cmd_check_steiner, "input")
    add("check-rigid", cmd_check_rigid, "input")
    add("join", cmd_join, "left", "right")
    add("tensor", cmd_tensor, "left", "right")
    add("dual", cmd_dual, "input", "degrees", help="degrees: op, co, opp or e.g. 1,3")
    p = add("trunc", cmd_trunc, "input")
    p.add_argument("n", type=int)
    p.add_argument("--bete", action="store_true", help="drop the degrees above n instead of the quotient")
    p = add("disk", cmd_disk)
    p.add_argument("i", type=int)
    p.add_argument("--letter", default="x")
    add("simplex", cmd_simplex).add_argument("m", type=int)
    add("theta", cmd_theta, "signature")
    add("pushout", cmd_pushout, "f", "g").add_argument("--legs", action="store_true")
    add("slice", cmd_slice, "M", "g")
    add("coslice", cmd_coslice, "M", "g")
    add("pullback", cmd_pullback, "f", "h", "g", "g2", help="(f, h)* for h: g → g2∘f")
    add("cone", cmd_cone, "k", "H", "h", "h2", "g2", help="(k, H)* between (k.target, h2)* and (k.source, h)*")
    p = add("nerve", cmd_nerve, "input")
    p.add_argument("n", type=int)
    _cap_arg(p)
    p = add("cells", cmd_cells, "input")
    p.add_argument("i", type=int)
    _cap_arg(p)
    p = add("slice-cells", cmd_slice_cells, "L", "c")
    p.add_argument("i", type=int)
    _cap_arg(p)
    p = add("cylinder-cells", cmd_cylinder_cells, "L")
    p.add_argument("i", type=int)
    _cap_arg(p)
    p = add("crosscheck", cmd_crosscheck, "L", "c")
    p.add_argument("--i-max", type=int, default=2)
    _cap_arg(p)
    p.add_argument("--trials", type=int, default=None, help="composable pairs to compare")
    p = add("acceptance", cmd_acceptance, help="run the acceptance suite")
    p.add_argument("--only", type=int, nargs="+", choices=range(1, len(acceptance.CRITERIA) + 1))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=None, help="random instances per randomized criterion")
    return parser


def _parse(argv):
    args = build_parser().parse_args(argv)
    if getattr(args, "cap", "absent") is None:
        args.cap = default_cap()
    return args


def run_nested(argv, ws: Workspace):
    """Run a constructor inside a parenthesized operand and return its JSON."""
    args = _parse(argv)
    return args.func(args, ws)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    ws = Workspace()
    try:
        if not argv or argv[0] in ("-h", "--help"):
            build_parser().parse_args(argv or ["--help"])
        args = _parse(argv)
        for path in args.load:
            ws.load_file(path)
        emit(args.func(args, ws))
        return 0
    except InputError as exc:
        emit({"error": str(exc)})
        return 2
    except Reported as exc:
        emit(exc.payload)
        return 1
    except (ComplexError, ValueError, KeyError, RecursionError) as exc:
        emit({"error": str(exc) or type(exc).__name__})
        return 1


if __name__ == "__main__":
    sys.exit(main())
