"""Command-line front end: verify, analyze, and transform spec files.

Exit codes: 0 — all checks passed; 1 — at least one axiom/identity check
failed; 2 — usage, syntax, reference, or dimension error.

Reports go to stdout.  Commands that produce a new spec document
(``ls-antipode``, ``twist apply``, ``twist recover``, ``dualize``) write it
to ``--out FILE`` and the report to stdout; without ``--out`` the document
itself goes to stdout and the report to stderr.
"""

import argparse
import json
import sys

from . import specfile
from .algebra import verify_algebra
from .bialgebroid import verify_left_bialgebroid, verify_right_bialgebroid
from .dualspace import dual_lower_star
from .hopfcore import check_lu_axioms, verify_hopf
from .integrallab import (
    LEFT,
    RIGHT,
    Degenerate,
    NondegenerateIntegral,
    dual_hopf_algebroid,
    duality_diagram,
    integral_space,
    intpr_equivalences,
    ls_antipode,
    nondegeneracy,
    verify_bgdnd,
)
from .report import DEFAULT_CERTIFICATE_LIMIT, Report
from .specfile import SpecBuilder, SpecError, parse_field
from .twistlab import (
    apply_twist,
    recover_twist,
    twisted_antipode,
    verify_twist,
    verify_weak_hopf,
    wha_decide,
)

REPORT_SCHEMA = "algebroid-report/1"


def emit_report(report, fmt="text", certificate_limit=DEFAULT_CERTIFICATE_LIMIT):
    """Render a report as a deterministic string."""
    if fmt == "structured":
        body = {"schema": REPORT_SCHEMA}
        body.update(report.to_dict(certificate_limit))
        return json.dumps(body, indent=2) + "\n"
    return report.render_text(certificate_limit) + "\n"


# ---------------------------------------------------------------------------
# command implementations; each returns (Report, emitted-spec-text-or-None)


def _collect(spec, table, name, what):
    if name is not None:
        if name not in table:
            raise SpecError(f"no {what} named {name!r} in {spec.source}")
        return [(name, table[name])]
    if not table:
        raise SpecError(f"{spec.source} declares no {what}")
    return sorted(table.items())


def cmd_check(spec, args):
    level = args.level
    rep = Report(f"check --level {level} on {spec.source}")
    if level == "algebra":
        for nm, A in _collect(spec, spec.algebras, args.name, "algebra"):
            rep.extend(verify_algebra(A), prefix=f"{nm}-")
    elif level == "left-bialgebroid":
        table = spec.left_bialgebroids or {
            nm: h.lb for nm, h in spec.hopf_algebroids.items()}
        for nm, lb in _collect(spec, table, args.name, "left_bialgebroid"):
            rep.extend(verify_left_bialgebroid(lb), prefix=f"{nm}-")
    elif level == "right-bialgebroid":
        table = spec.right_bialgebroids or {
            nm: h.rb for nm, h in spec.hopf_algebroids.items()}
        for nm, rb in _collect(spec, table, args.name, "right_bialgebroid"):
            rep.extend(verify_right_bialgebroid(rb), prefix=f"{nm}-")
    elif level == "hopf":
        for nm, h in _collect(spec, spec.hopf_algebroids, args.name,
                              "hopf_algebroid"):
            rep.extend(verify_hopf(h), prefix=f"{nm}-")
    elif level == "weak-hopf":
        for nm, w in _collect(spec, spec.weak_hopf, args.name, "weak_hopf"):
            rep.extend(verify_weak_hopf(w), prefix=f"{nm}-")
    elif level == "lu":
        section = None
        if args.section is not None:
            if args.section not in spec.sections:
                raise SpecError(f"no section named {args.section!r}")
            section = spec.sections[args.section][1]
        for nm, h in _collect(spec, spec.hopf_algebroids, args.name,
                              "hopf_algebroid"):
            rep.extend(check_lu_axioms(h.lb, h.S, section=section),
                       prefix=f"{nm}-")
    return rep, None


def cmd_integrals(spec, args):
    nm, h = spec.hopf(args.name)
    rep = Report(f"integrals of {nm}")
    A = h.total
    spaces = {}
    for side in (LEFT, RIGHT):
        sp = integral_space(h, side)
        spaces[side] = sp
        desc = "; ".join(A.fmt_vec(v) for v in sp.basis_vectors()) or "0"
        rep.add(f"{side}-space", f"{side} integral space", True,
                note=f"dimension {sp.dim}: spanned by {desc}")
    declared = sorted(el for el, (alg, _) in spec.elements.items()
                      if spec.algebras[alg] is A)
    for el in declared:
        _, coords = spec.elements[el]
        is_left = spaces[LEFT].contains(coords)
        rep.add(f"member-{el}", f"{el} is a left integral", is_left,
                [] if is_left else
                [f"{A.fmt_vec(coords)} is not in the left integral space"])
        if not is_left:
            continue
        rep.extend(intpr_equivalences(h, coords), prefix=f"{el}-")
        out = nondegeneracy(h, coords)
        ok = isinstance(out, NondegenerateIntegral)
        rep.add(f"nd-{el}", f"{el} is nondegenerate", ok,
                [] if ok else [out.reason])
    if not declared:
        for i, vec in enumerate(spaces[LEFT].basis_vectors()):
            out = nondegeneracy(h, vec)
            ok = isinstance(out, NondegenerateIntegral)
            note = ("nondegenerate" if ok
                    else f"degenerate ({out.reason})")
            rep.add(f"basis-{i}", f"basis integral {A.fmt_vec(vec)}", True,
                    note=note)
    return rep, None


def cmd_ls_antipode(spec, args):
    nm, rb = spec.right_bialgebroid(args.name)
    el, ell = spec.element_for(rb.total, args.integral)
    rep = Report(f"antipode construction on {nm} from {el}")
    pre = verify_bgdnd(rb, ell)
    rep.extend(pre, prefix="pre-")
    if not pre.passed:
        return rep, None
    h = ls_antipode(rb, ell, name=f"{nm}-hopf")
    rep.extend(verify_hopf(h), prefix="hopf-")
    text = specfile.spec_from_hopf(h, name=f"{nm}-hopf", integral=ell,
                                   integral_name=el)
    return rep, text


def _twist_context(spec, args):
    nm, h = spec.hopf(args.name)
    fname, lbname, g = spec.functional_for(args.functional)
    if lbname in spec.left_bialgebroids and \
            spec.left_bialgebroids[lbname] is not h.lb:
        raise SpecError(
            f"functional {fname!r} is declared on {lbname!r}, which is not "
            f"the left side of {nm!r}")
    return nm, h, fname, g


def cmd_twist_verify(spec, args):
    nm, h, fname, g = _twist_context(spec, args)
    rep = Report(f"twist check of {fname} on {nm}")
    rep.extend(verify_twist(h.lb, h.S, g))
    return rep, None


def cmd_twist_apply(spec, args):
    nm, h, fname, g = _twist_context(spec, args)
    rep = Report(f"twisted antipode from {fname} on {nm}")
    pre = verify_twist(h.lb, h.S, g)
    rep.extend(pre, prefix="twist-")
    if not pre.passed:
        return rep, None
    out = apply_twist(h.lb, h.S, g, name=f"{nm}-{fname}")
    rep.extend(verify_hopf(out), prefix="hopf-")
    text = specfile.spec_from_hopf(out, name=f"{nm}-{fname}")
    return rep, text


def cmd_twist_recover(spec, args):
    pairs = _collect(spec, spec.hopf_algebroids, None, "hopf_algebroid")
    names = [nm for nm, _ in pairs]
    first = args.name or (names[0] if len(names) == 2 else None)
    second = args.second or (names[1] if len(names) == 2 else None)
    if first is None or second is None:
        raise SpecError("twist recover needs exactly two Hopf assemblies "
                        "(or --name/--second)")
    h1 = dict(pairs).get(first)
    h2 = dict(pairs).get(second)
    if h1 is None or h2 is None:
        raise SpecError(f"unknown Hopf assembly among {first!r}, {second!r}")
    rep = Report(f"twist relating {first} and {second}")
    same_left = (h1.lb.total is h2.lb.total
                 and h1.lb.gamma_lift == h2.lb.gamma_lift
                 and h1.lb.s.matrix == h2.lb.s.matrix
                 and h1.lb.t.matrix == h2.lb.t.matrix)
    rep.add("recover-shared-left", "both share the left bialgebroid",
            same_left,
            [] if same_left else ["left structures differ"])
    if not same_left:
        return rep, None
    g, g_inv = recover_twist(h1.lb, h1.S, h2.S)
    rep.extend(verify_twist(h1.lb, h1.S, g, g_inv), prefix="twist-")
    roundtrip = twisted_antipode(h1.lb, h1.S, g) == h2.S
    rep.add("recover-roundtrip", "S twisted by g equals the second antipode",
            roundtrip)
    b = SpecBuilder(spec.field)
    lb_name = b.add_bialgebroid(h1.lb)
    b.add_functional("recovered-twist", lb_name, g)
    return rep, b.emit()


def cmd_dualize(spec, args):
    nm, h = spec.hopf(args.name)
    el, ell = spec.element_for(h.total, args.integral)
    rep = Report(f"dual of {nm} at {el}")
    if not integral_space(h, LEFT).contains(ell):
        rep.add("dualize-integral", f"{el} is a left integral", False,
                [f"{h.total.fmt_vec(ell)} is not a left integral"])
        return rep, None
    nd = nondegeneracy(h, ell)
    if isinstance(nd, Degenerate):
        rep.add("dualize-nondegenerate", f"{el} is nondegenerate", False,
                [nd.reason])
        return rep, None
    rep.extend(nd.report, prefix="nd-")
    hd = dual_hopf_algebroid(h, nd, name=f"{nm}-dual")
    rep.extend(verify_hopf(hd), prefix="dual-")
    kappa_coords = dual_lower_star(h.lb).module.coords(nd.kappa)
    text = specfile.spec_from_hopf(hd, name=f"{nm}-dual",
                                   integral=kappa_coords,
                                   integral_name="kappa")
    return rep, text


def cmd_wha_decide(spec, args):
    nm, h = spec.hopf(args.name)
    out = wha_decide(h)
    rep = Report(f"weak Hopf decision for {nm}")
    rep.add("wha-verdict", f"decision: {out['verdict']}",
            out["verdict"] != "not-weak-hopf")
    rep.extend(out["report"])
    return rep, None


def cmd_diagram(spec, args):
    nm, h = spec.hopf(args.name)
    el, ell = spec.element_for(h.total, args.integral)
    rep = Report(f"duality square of {nm} at {el}")
    if not integral_space(h, LEFT).contains(ell):
        rep.add("diagram-integral", f"{el} is a left integral", False,
                [f"{h.total.fmt_vec(ell)} is not a left integral"])
        return rep, None
    nd = nondegeneracy(h, ell)
    if isinstance(nd, Degenerate):
        rep.add("diagram-nondegenerate", f"{el} is nondegenerate", False,
                [nd.reason])
        return rep, None
    rep.extend(duality_diagram(h, nd))
    return rep, None


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def build_parser():
    parser = argparse.ArgumentParser(
        prog="algebroids",
        description="Exact verification and construction for bialgebroids, "
                    "Hopf algebroids, and weak Hopf algebras.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--report", choices=("text", "structured"),
                        default="text", help="report rendering")
    common.add_argument("--certificate-limit", type=int,
                        default=DEFAULT_CERTIFICATE_LIMIT, metavar="N",
                        help="max counterexamples listed per failing check")
    common.add_argument("--field", default=None, metavar="F",
                        help="override the file's field (rational or gf:p)")
    common.add_argument("--name", default=None,
                        help="which named assembly to use")

    sub = parser.add_subparsers(dest="command", required=True)

    def add_path(p):
        p.add_argument("path", help="spec file (algebroid-spec/1 JSON)")

    p = sub.add_parser("check", parents=[common],
                       help="run an axiom verifier")
    add_path(p)
    p.add_argument("--level", required=True,
                   choices=("algebra", "left-bialgebroid",
                            "right-bialgebroid", "hopf", "weak-hopf", "lu"))
    p.add_argument("--section", default=None,
                   help="named section for the convolution axioms")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("integrals", parents=[common],
                       help="integral spaces and nondegeneracy")
    add_path(p)
    p.set_defaults(func=cmd_integrals)

    p = sub.add_parser("ls-antipode", parents=[common],
                       help="build the antipode from a nondegenerate "
                            "integral on a right bialgebroid")
    add_path(p)
    p.add_argument("--integral", default=None,
                   help="named element to use as the integral")
    p.add_argument("--out", default=None, help="write the emitted spec here")
    p.set_defaults(func=cmd_ls_antipode)

    p = sub.add_parser("twist", parents=[common],
                       help="verify, apply, or recover antipode twists")
    p.add_argument("action", choices=("verify", "apply", "recover"))
    add_path(p)
    p.add_argument("--functional", default=None,
                   help="named twist functional")
    p.add_argument("--second", default=None,
                   help="second Hopf assembly (twist recover)")
    p.add_argument("--out", default=None, help="write the emitted spec here")
    p.set_defaults(func=None)

    p = sub.add_parser("dualize", parents=[common],
                       help="emit the dual Hopf algebroid")
    add_path(p)
    p.add_argument("--integral", default=None)
    p.add_argument("--out", default=None, help="write the emitted spec here")
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("wha-decide", parents=[common],
                       help="decide weak-Hopf-ness over the base's "
                            "diagonal separability structure")
    add_path(p)
    p.set_defaults(func=cmd_wha_decide)

    p = sub.add_parser("diagram", parents=[common],
                       help="verify the four-isomorphism duality square")
    add_path(p)
    p.add_argument("--integral", default=None)
    p.set_defaults(func=cmd_diagram)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "twist":
        args.func = {"verify": cmd_twist_verify,
                     "apply": cmd_twist_apply,
                     "recover": cmd_twist_recover}[args.action]

    try:
        field = parse_field(args.field) if args.field else None
        spec = specfile.parse(args.path, field=field)
        report, emitted = args.func(spec, args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    rendered = emit_report(report, args.report, args.certificate_limit)
    if emitted is not None:
        out_path = getattr(args, "out", None)
        if out_path:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(emitted)
            sys.stdout.write(rendered)
        else:
            sys.stdout.write(emitted)
            sys.stderr.write(rendered)
    else:
        sys.stdout.write(rendered)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
