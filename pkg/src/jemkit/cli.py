"""Command-line front end.

Exit codes: 0 holds or passes, 1 fails or is refuted, 2 bad input,
3 resource limit.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Callable

from .consequence import countermodel
from .document import DocumentError, ModelDocument, dump_model, load_document, parse_document
from .errors import PreconditionError, ResourceLimitError, SymbolicError
from .jem import JEM, Holds, NotFoundWithinBound, RefutedExact, believed, known, modal_projection, validate_jem
from .jminus import Derivable, derive_jminus, find_countermodel_jminus
from .models import BasicModel, check_closure, cs_failures, is_injective, subterm_closure
from .multiworld import (
    RESTRICTION,
    KripkeRefusal,
    MultiJEM,
    check_fully_explanatory,
    check_justification_indifference,
    extract_kripke,
)
from .russell import theorem3_report
from .sampling import random_sharp_model
from .syntax import And, Formula, Implies, ParseError, atoms, parse_formula, subformulas, subterms, term_leaves

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class Output:
    """Collects text lines, or one JSON object under ``--json``."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.data: dict = {}

    def line(self, text: str = "") -> None:
        if not self.as_json:
            print(text)

    def set(self, **items) -> None:
        self.data.update(items)

    def flush(self) -> None:
        if self.as_json:
            print(json.dumps(self.data, indent=2, sort_keys=True))


def _formula(text: str) -> Formula:
    return parse_formula(text)


def _conjoin(formulas: list[Formula]) -> Formula | None:
    if not formulas:
        return None
    out = formulas[0]
    for f in formulas[1:]:
        out = And(out, f)
    return out


def _hypotheses(args) -> list[Formula]:
    hyps = [_formula(h) for h in args.hyp or []]
    if getattr(args, "hyp_file", None):
        for raw in Path(args.hyp_file).read_text().splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                hyps.append(_formula(line))
    return hyps


def _jem_or_fail(doc: ModelDocument, world: str | None) -> JEM:
    j = doc.world_jem(world)
    if j is None:
        raise DocumentError("the document declares no accepted or evidence terms")
    return j


def _answer(a) -> dict:
    match a:
        case Holds(witness):
            return {"status": "holds", "witness": str(witness)}
        case RefutedExact(cert):
            return {"status": "refuted", "certificate": str(cert)}
        case NotFoundWithinBound(depth):
            return {"status": "not-found", "depth": depth}
    return {"status": str(a)}


# -- commands ----------------------------------------------------------------

def cmd_eval(args, out: Output) -> int:
    doc = load_document(args.model)
    f = _formula(args.formula)
    value = doc.world(args.world).holds(f)
    out.line("true" if value else "false")
    out.set(command="eval", formula=str(f), value=value)
    return EXIT_OK if value else EXIT_FAIL


def _check_world(m: BasicModel, j: JEM | None, signature, depth: int) -> list[dict]:
    sections = []
    if signature is None:
        signature = subterm_closure(m.term_values)
    report = check_closure(m, subterm_closure(signature))
    if report.structural:
        sections.append({"name": "closure", "passed": True, "detail": "sharp model: holds by construction"})
    else:
        sections.append({
            "name": "closure",
            "passed": report.passed,
            "detail": f"{report.checked} applications checked",
            "violations": [{"s": str(s), "t": str(t), "witness": str(w)} for s, t, w in report.violations],
        })
    if m.constant_spec is not None:
        failures = cs_failures(m, m.constant_spec, depth)
        sections.append({
            "name": "constant-specification",
            "passed": not failures,
            "detail": f"{m.constant_spec.kind.value}, depth {depth}",
            "failures": [str(f) for f in failures[:20]],
        })
    if j is not None:
        jr = validate_jem(j, depth)
        sections.append({
            "name": "jem",
            "passed": jr.passed,
            "detail": f"accepted {j.accepted}, evidence {j.evidence}; {jr.checked} values checked",
            "failures": jr.failures[:20],
        })
    terms = sorted(subterm_closure(signature), key=str)
    sections.append({
        "name": "injective",
        "passed": True,
        "informational": True,
        "detail": f"{'yes' if is_injective(m, terms) else 'no'} over {len(terms)} listed terms",
    })
    return sections


def _print_sections(out: Output, sections: list[dict], indent: str = "") -> None:
    for s in sections:
        status = "info" if s.get("informational") else ("pass" if s["passed"] else "FAIL")
        out.line(f"{indent}{s['name']:<24} {status:<5} {s['detail']}")
        for v in s.get("violations", []):
            out.line(f"{indent}  {v['s']} . {v['t']}: {v['witness']} is missing from [{v['s']}.{v['t']}]")
        for f in s.get("failures", []):
            out.line(f"{indent}  {f}")


def cmd_check(args, out: Output) -> int:
    doc = load_document(args.model)
    out.set(command="check")
    if doc.multi is None:
        sections = _check_world(doc.model, doc.jem, doc.signature, args.depth)
        out.line(f"mode {doc.model.mode}")
        _print_sections(out, sections)
        out.set(mode=doc.model.mode, sections=sections)
        passed = all(s["passed"] for s in sections)
    else:
        worlds = {}
        passed = True
        for name, j in doc.multi.worlds.items():
            sections = _check_world(j.model, j, doc.multi.term_signature, args.depth)
            out.line(f"world {name}")
            _print_sections(out, sections, "  ")
            worlds[name] = sections
            passed = passed and all(s["passed"] for s in sections)
        ind = check_justification_indifference(doc.multi)
        out.line(f"justification-indifferent: {'yes' if ind.passed else 'no'} ({RESTRICTION})")
        out.set(worlds=worlds, indifferent=ind.passed, restriction=RESTRICTION)
    out.line("all sections pass" if passed else "some sections fail")
    out.set(passed=passed)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_derive(args, out: Output) -> int:
    hyps = _hypotheses(args)
    goal = _formula(args.goal)
    result = derive_jminus(hyps, goal, args.depth, args.atom_limit)
    out.set(command="derive", goal=str(goal), hypotheses=[str(h) for h in hyps])
    if isinstance(result, Derivable):
        out.line("derivable")
        for inst in result.instances:
            out.line(f"  instance: {inst}")
        if not result.instances:
            out.line("  (classical consequence; no application instances needed)")
        out.set(derivable=True, instances=[str(i) for i in result.instances])
        return EXIT_OK
    out.line(f"not derived at depth {result.depth} ({result.instances_tried} instances tried)")
    out.set(derivable=False, depth=result.depth, instances_tried=result.instances_tried)
    return EXIT_FAIL


def _emit_model(args, out: Output, m: BasicModel, goal: Formula, claim: Callable[[BasicModel], bool]) -> None:
    """Print the countermodel document after re-reading it and re-checking ``claim``."""
    text = dump_model(m)
    again = parse_document(text).model
    if not claim(again):
        raise AssertionError("emitted document does not reproduce the verdict")
    if args.output:
        Path(args.output).write_text(text)
        out.line(f"model written to {args.output}")
    else:
        out.line(text.rstrip("\n"))
    out.set(model=text)


def cmd_refute(args, out: Output) -> int:
    hyps = _hypotheses(args)
    goal = _formula(args.goal)
    out.set(command="refute", goal=str(goal), hypotheses=[str(h) for h in hyps])
    if args.sharp_injective:
        return _refute_sampled(args, out, hyps, goal)
    if args.classical:
        m = countermodel(hyps, goal, args.atom_limit)
        kind = "basic model"
    else:
        premise = _conjoin(hyps)
        target = goal if premise is None else Implies(premise, goal)
        m = find_countermodel_jminus(target, args.padding, atom_limit=args.atom_limit)
        kind = "J- model"
    if m is None:
        out.line(f"no countermodel found ({kind}, padding {args.padding})")
        out.set(refuted=False)
        return EXIT_OK
    out.line(f"refuted: {kind} satisfying the hypotheses and falsifying {goal}")
    out.set(refuted=True, kind=kind)
    _emit_model(args, out, m, goal, lambda mm: all(mm.holds(h) for h in hyps) and not mm.holds(goal))
    return EXIT_FAIL


def _refute_sampled(args, out: Output, hyps, goal) -> int:
    rng = random.Random(args.seed)
    formulas = [goal, *hyps]
    leaves = sorted({leaf for f in formulas for t in subterms(f) for leaf in term_leaves(t)}, key=str)
    pool = sorted({g for f in formulas for g in subformulas(f)}, key=str)
    names = sorted({name for f in formulas for name in atoms(f)})
    for i in range(args.samples):
        m = random_sharp_model(rng, leaves, pool, names or ["P"], injective=True)
        if all(m.holds(h) for h in hyps) and not m.holds(goal):
            out.line(f"refuted by sample {i + 1} (sharp, injective)")
            out.set(refuted=True, samples=i + 1)
            _emit_model(args, out, m, goal, lambda mm: not mm.holds(goal))
            return EXIT_FAIL
    out.line(f"no countermodel among {args.samples} sampled sharp injective models (seed {args.seed})")
    out.set(refuted=False, samples=args.samples, seed=args.seed)
    return EXIT_OK


def cmd_russell(args, out: Output) -> int:
    report = theorem3_report()
    out.line(str(report))
    out.line("B is true, justified and believed, but not known" if report.passed else "report FAILED")
    out.set(command="russell", **report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_kripke(args, out: Output) -> int:
    doc = load_document(args.model)
    if doc.multi is None:
        raise DocumentError("kripke needs a document with world blocks")
    m: MultiJEM = doc.multi
    out.set(command="kripke", restriction=RESTRICTION)
    try:
        k = extract_kripke(m)
    except KripkeRefusal as exc:
        out.line(f"refused: {exc}")
        failures = exc.report.failures
        for u, s, t, f in failures[:20]:
            out.line(f"  at {u}: {s}:{f} holds, {t}:{f} does not")
        out.line(f"({RESTRICTION})")
        out.set(extracted=False, failures=[[u, str(s), str(t), str(f)] for u, s, t, f in failures])
        return EXIT_FAIL
    explanatory = check_fully_explanatory(m, k.relation)
    out.line(f"worlds: {', '.join(k.worlds)}")
    out.line("relation: " + ", ".join(f"{u}->{v}" for u, v in sorted(k.relation)))
    out.line(f"reflexive: {'yes' if k.is_reflexive() else 'no'}")
    out.line(f"fully explanatory: {'yes' if explanatory.passed else 'no'}")
    for u in k.worlds:
        vals = " ".join(f"{a}={'1' if v else '0'}" for a, v in sorted(k.atom_values[u].items()))
        out.line(f"  {u}: {vals}")
    out.line(f"({RESTRICTION})")
    out.set(
        extracted=True,
        worlds=list(k.worlds),
        relation=sorted([u, v] for u, v in k.relation),
        reflexive=k.is_reflexive(),
        fully_explanatory=explanatory.passed,
        atoms={u: dict(k.atom_values[u]) for u in k.worlds},
    )
    return EXIT_OK


def cmd_query(args, out: Output) -> int:
    doc = load_document(args.model)
    j = _jem_or_fail(doc, args.world)
    f = _formula(args.formula)
    out.set(command="query", kind=args.kind, formula=str(f), depth=args.depth)
    if args.kind == "modal":
        p = modal_projection(j, f, args.depth)
        for label, a in (("J (believed)", p.justified), ("E (evidenced)", p.evidenced), ("K (known)", p.known)):
            out.line(f"{label:<14} {a}")
        if p.mismatch:
            out.line("J and E hold but K does not")
        out.set(justified=_answer(p.justified), evidenced=_answer(p.evidenced), known=_answer(p.known), mismatch=p.mismatch)
        return EXIT_OK
    a = (believed if args.kind == "believed" else known)(j, f, args.depth)
    out.line(str(a))
    out.set(answer=_answer(a))
    return EXIT_OK if isinstance(a, Holds) else EXIT_FAIL


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jemkit", description="Justification logic workbench.")
    p.add_argument("--atom-limit", type=int, default=None, help="SAT atom limit (default: $JEMKIT_ATOM_LIMIT or 24)")
    p.add_argument("--json", action="store_true", help="print one JSON object")
    p.add_argument("--seed", type=int, default=0, help="seed for sampling")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", help="evaluate a formula in a model document")
    s.add_argument("model")
    s.add_argument("formula")
    s.add_argument("--world")
    s.set_defaults(run=cmd_eval)

    s = sub.add_parser("check", help="closure, constant specification and JEM checks")
    s.add_argument("model")
    s.add_argument("--depth", type=int, default=2)
    s.set_defaults(run=cmd_check)

    s = sub.add_parser("derive", help="bounded J- derivation search")
    s.add_argument("goal")
    s.add_argument("--hyp", action="append")
    s.add_argument("--hyp-file")
    s.add_argument("--depth", type=int, default=1)
    s.set_defaults(run=cmd_derive)

    s = sub.add_parser("refute", help="search for a countermodel")
    s.add_argument("goal")
    s.add_argument("--hyp", action="append")
    s.add_argument("--hyp-file")
    s.add_argument("--padding", type=int, default=1)
    s.add_argument("--classical", action="store_true", help="any basic model, closure not required")
    s.add_argument("--sharp-injective", action="store_true", help="sample sharp injective models")
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--output", help="write the model document here")
    s.set_defaults(run=cmd_refute)

    s = sub.add_parser("russell", help="the Prime Minister report")
    s.set_defaults(run=cmd_russell)

    s = sub.add_parser("kripke", help="extract a Kripke model from a multi-world document")
    s.add_argument("model")
    s.set_defaults(run=cmd_kripke)

    s = sub.add_parser("query", help="believed, known, or the modal projection")
    s.add_argument("kind", choices=["believed", "known", "modal"])
    s.add_argument("model")
    s.add_argument("formula")
    s.add_argument("--depth", type=int, default=2)
    s.add_argument("--world")
    s.set_defaults(run=cmd_query)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    out = Output(args.json)
    try:
        code = args.run(args, out)
    except ResourceLimitError as exc:
        out.set(error=str(exc), kind="resource-limit")
        print(f"jemkit: resource limit: {exc}", file=sys.stderr)
        code = EXIT_LIMIT
    except (DocumentError, ParseError, OSError, SymbolicError, PreconditionError, ValueError) as exc:
        out.set(error=str(exc), kind="input")
        print(f"jemkit: {exc}", file=sys.stderr)
        code = EXIT_INPUT
    out.set(exit_code=code)
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
