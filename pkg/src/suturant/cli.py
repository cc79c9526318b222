"""Command line surface.

Verbs: validate, multipoints, compute, class, compare, axioms, move.
All numeric output is exact; ``--eval-float`` adds a clearly marked
approximation.  Exit status: 0 success, 1 validation or computation
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from .algebra import build_cyclic_group_algebra, build_hn, check_axioms
from .diagram import (enumerate_multipoints, multipoint_permutation,
                      parse_diagram, serialize_diagram, validate)
from .errors import SuturantError
from .foxcalc import GroupRingElement, all_characters, homology
from .invariant import (OrientationSign, SpincRelative, invariant_hn,
                        torsion_class)
from .kuperberg import CharacterAssignment, contract
from .moves import apply_move, parse_move_script


def _load(path):
    with open(path, encoding="utf-8") as fh:
        return parse_diagram(fh.read())


def _coord_name(group, t):
    if group.ncoords == 1:
        return "t"
    if t < group.rank:
        return f"t{t + 1}"
    return f"s{t - group.rank + 1}"


def _resolve_characters(group, order, spec_text):
    """Characters of the given order matching ``k=v`` constraints; keys are
    normal-form names (t, t1, s1, ...) or beta-curve ids."""
    constraints = []
    if spec_text:
        for item in spec_text.split(","):
            if "=" not in item:
                raise SuturantError(f"bad --char entry {item!r}")
            k, v = item.split("=", 1)
            constraints.append((k.strip(), int(v) % order))
    names = {_coord_name(group, t): t for t in range(group.ncoords)}
    out = []
    for chi in all_characters(group, order):
        ok = True
        for k, v in constraints:
            if k in names:
                got = chi.exps[names[k]] % order
            elif k in group.gens:
                got = chi.on_generator(k)
            else:
                raise SuturantError(f"unknown character key {k!r}")
            if got != v:
                ok = False
                break
        if ok:
            out.append(chi)
    return out


def _resolve_offset(group, text):
    if not text:
        return None
    names = {_coord_name(group, t): t for t in range(group.ncoords)}
    coords = [0] * group.ncoords
    for tok in text.replace("*", " ").split():
        if "^" in tok:
            name, e = tok.split("^", 1)
            e = int(e)
        else:
            name, e = tok, 1
        if name in names:
            coords[names[name]] += e
        elif name in group.gens:
            i = group.gens.index(name)
            unit = [1 if t == i else 0 for t in range(len(group.gens))]
            for t, c in enumerate(group.project(unit)):
                coords[t] += e * c
        else:
            raise SuturantError(f"unknown generator {name!r} in offset")
    return GroupRingElement.monomial(group, group.normalize(coords))


def _chi_label(group, chi):
    bits = [f"{_coord_name(group, t)}={e}" for t, e in enumerate(chi.exps)]
    return ",".join(bits) if bits else "trivial"


def cmd_validate(args):
    rep = validate(_load(args.file))
    print(rep)
    return 0 if rep.passed else 1


def cmd_multipoints(args):
    diag = _load(args.file)
    mps = enumerate_multipoints(diag)
    names = {mp: nm for nm, mp in diag.named_multipoints.items()}
    for mp in mps:
        sigma = multipoint_permutation(diag, mp)
        tag = f"  ({names[mp]})" if mp in names else ""
        print(f"{' '.join(mp.picks)}  sigma={sigma}{tag}")
    print(f"{len(mps)} multipoint(s)")
    return 0


def cmd_compute(args):
    diag = _load(args.file)
    rep = validate(diag)
    if not rep.passed:
        print(rep, file=sys.stderr)
        return 1
    group = homology(diag)

    if args.algebra == "cyclic":
        if args.m is None:
            raise SuturantError("--algebra cyclic needs --m")
        mps = enumerate_multipoints(diag)
        based = diag
        if mps:
            from .diagram import rebase
            based = rebase(diag, _pick_reference(diag, mps, args.multipoint))
        value = contract(based, build_cyclic_group_algebra(args.m),
                         CharacterAssignment.trivial())
        _emit(value, args)
        return 0

    if args.n is None:
        raise SuturantError("--algebra hn needs --n")
    order = args.order or args.n
    mps = enumerate_multipoints(diag)
    if not mps and diag.d > 0:
        print("no multipoints: unnormalized determinant is 0")
        return 1
    ref = _pick_reference(diag, mps, args.multipoint)
    spinc = SpincRelative(ref, _resolve_offset(group, args.offset))
    orient = OrientationSign(
        "canonical" if args.sign == "canonical" else int(args.sign))

    chis = _resolve_characters(group, order, args.char)
    if not chis:
        raise SuturantError(
            "no character of H_1 matches the given constraints")
    if args.all_chars:
        for chi in chis:
            val = invariant_hn(diag, args.n,
                               CharacterAssignment.from_character(chi),
                               spinc, orient, engine=args.engine)
            print(f"chi[{_chi_label(group, chi)}]: ", end="")
            _emit(val, args)
        return 0
    if len(chis) > 1:
        raise SuturantError(
            f"{len(chis)} characters match; add constraints or --all-chars")
    val = invariant_hn(diag, args.n,
                       CharacterAssignment.from_character(chis[0]),
                       spinc, orient, engine=args.engine)
    _emit(val, args)
    return 0


def _pick_reference(diag, mps, name):
    if name:
        if name not in diag.named_multipoints:
            raise SuturantError(f"no multipoint named {name!r}")
        return diag.named_multipoints[name]
    if not mps:
        raise SuturantError("diagram has no multipoints")
    return mps[0]


def _emit(value, args):
    text = str(value)
    if getattr(args, "eval_float", False):
        z = value.approx()
        text += f"   [approx {z.real:+.6f}{z.imag:+.6f}i]"
    print(text)


def cmd_class(args):
    diag = _load(args.file)
    rep = validate(diag)
    if not rep.passed:
        print(rep, file=sys.stderr)
        return 1
    print(f"class: {torsion_class(diag)}")
    return 0


def cmd_compare(args):
    a = torsion_class(_load(args.file1))
    b = torsion_class(_load(args.file2))
    if a.group.same_shape(b.group) and \
            a.representative.terms == b.representative.terms:
        print("EQUAL")
        return 0
    print("DIFFER")
    return 1


def cmd_axioms(args):
    if args.algebra == "hn":
        if args.n is None:
            raise SuturantError("--algebra hn needs --n")
        pkg = build_hn(args.n)
    else:
        if args.m is None:
            raise SuturantError("--algebra cyclic needs --m")
        pkg = build_cyclic_group_algebra(args.m)
    rep = check_axioms(pkg)
    print(rep)
    return 0 if rep.passed else 1


def cmd_move(args):
    diag = _load(args.file)
    with open(args.script, encoding="utf-8") as fh:
        moves = parse_move_script(fh.read())
    for mv in moves:
        diag = apply_move(diag, mv)
    text = serialize_diagram(diag)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="suturant",
        description="exact sutured-manifold invariants from combinatorial "
                    "extended Heegaard diagrams")
    sub = p.add_subparsers(dest="verb", required=True)

    q = sub.add_parser("validate", help="check diagram invariants")
    q.add_argument("file")
    q.set_defaults(fn=cmd_validate)

    q = sub.add_parser("multipoints", help="enumerate multipoints")
    q.add_argument("file")
    q.set_defaults(fn=cmd_multipoints)

    q = sub.add_parser("compute", help="run an engine on a diagram")
    q.add_argument("file")
    q.add_argument("--engine", choices=("fox", "tensor"), default="fox")
    q.add_argument("--algebra", choices=("hn", "cyclic"), default="hn")
    q.add_argument("--n", type=int)
    q.add_argument("--m", type=int)
    q.add_argument("--char", default="")
    q.add_argument("--order", type=int)
    q.add_argument("--multipoint")
    q.add_argument("--offset", default="")
    q.add_argument("--sign", choices=("+1", "-1", "canonical"), default="+1")
    q.add_argument("--all-chars", action="store_true", dest="all_chars")
    q.add_argument("--eval-float", action="store_true", dest="eval_float")
    q.set_defaults(fn=cmd_compute)

    q = sub.add_parser("class", help="canonical torsion class")
    q.add_argument("file")
    q.set_defaults(fn=cmd_class)

    q = sub.add_parser("compare", help="compare torsion classes")
    q.add_argument("file1")
    q.add_argument("file2")
    q.set_defaults(fn=cmd_compare)

    q = sub.add_parser("axioms", help="exhaustive algebra axiom suite")
    q.add_argument("--algebra", choices=("hn", "cyclic"), required=True)
    q.add_argument("--n", type=int)
    q.add_argument("--m", type=int)
    q.set_defaults(fn=cmd_axioms)

    q = sub.add_parser("move", help="apply a move script")
    q.add_argument("file")
    q.add_argument("--script", required=True)
    q.add_argument("-o", "--output")
    q.set_defaults(fn=cmd_move)
    return p


def run(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SuturantError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
