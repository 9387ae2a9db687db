"""Command line front end.

Exit status: 0 success, 1 bad input, 2 algorithm error (e.g. a stalled
difference step), 3 a certificate produced here failed its own verification.
"""

import argparse
import json
import random
import sys
from typing import List, Optional, Sequence, TextIO

from homweyl import certificates as certs
from homweyl.certificates import IdealPresentation, verify_membership
from homweyl.errors import AlgorithmError, WeylError
from homweyl.hom import check_hom_associativity, check_weak_unit
from homweyl.ideals import (
    CertifiedGenerators,
    constant_generators,
    flatten_leading,
    hom_generators_from_assoc,
    principal_from_constant,
    principal_from_two,
)
from homweyl.notation import parse, print_canonical
from homweyl.sampling import random_element, random_twist
from homweyl.weyl import TwistParameter, WeylElement, alpha_pow, degrees, mul_assoc, yau_mul

EXIT_OK, EXIT_INPUT, EXIT_ALGORITHM, EXIT_VERIFY = 0, 1, 2, 3


class InputError(Exception):
    pass


class VerificationFailure(Exception):
    pass


def _parse_k(text: Optional[str], n: int) -> TwistParameter:
    if text is None:
        return TwistParameter([1] * n)
    try:
        k = TwistParameter(part.strip() for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"malformed --k {text!r}: {exc}") from None
    if k.n != n:
        raise InputError(f"--k has {k.n} components but --n is {n}")
    return k


class _Context:
    def __init__(self, args, stdin: TextIO):
        self.args = args
        self.stdin = stdin
        self._stdin_lines = None
        self.n = args.n
        if self.n < 1:
            raise InputError("--n must be at least 1")
        self.k = _parse_k(args.k, self.n)
        self.side = args.side
        self.json = args.format == "json"

    def element(self, text: str):
        if text == "-":
            if self._stdin_lines is None:
                self._stdin_lines = [line for line in self.stdin.read().splitlines() if line.strip()]
            if not self._stdin_lines:
                raise InputError("stdin ran out of elements")
            text = self._stdin_lines.pop(0)
        return parse(text, self.n)

    def presentation(self, gens) -> IdealPresentation:
        return IdealPresentation(self.side, self.n, self.k, tuple(gens))


def _ensure_verified(result: CertifiedGenerators):
    bad = result.failures()
    if bad:
        raise VerificationFailure("certificate check failed: " + "; ".join(bad))


def _certified_json(result: CertifiedGenerators) -> dict:
    return {
        "old": certs.presentation_to_json_obj(result.old),
        "new": certs.presentation_to_json_obj(result.new),
        "new_in_old": certs.certificates_to_json_obj(result.new_in_old),
        "old_in_new": certs.certificates_to_json_obj(result.old_in_new),
        "verified": True,
    }


def _certified_text(result: CertifiedGenerators, new_name: str, old_name: str) -> List[str]:
    lines = ["generators:"]
    many = len(result.new.generators) > 1
    new_label = (lambda i: f"{new_name}{i + 1}") if many else (lambda i: new_name)
    for i, g in enumerate(result.new.generators):
        lines.append(f"  {new_label(i)} = {print_canonical(g)}")
    lines.append("new in old:")
    for i, c in enumerate(result.new_in_old):
        lines.append(f"  {new_label(i)}: {certs.dumps(c)}")
    lines.append("old in new:")
    for i, c in enumerate(result.old_in_new):
        lines.append(f"  {old_name}{i + 1}: {certs.dumps(c)}")
    lines.append("verified: true")
    return lines


def _emit(out: TextIO, ctx: _Context, payload: dict, lines: List[str]):
    if ctx.json:
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def _cmd_binary(ctx, out, op):
    a, b = ctx.element(ctx.args.a), ctx.element(ctx.args.b)
    result = print_canonical(op(a, b))
    _emit(out, ctx, {"result": result}, [result])


def cmd_mul(ctx, out):
    _cmd_binary(ctx, out, mul_assoc)


def cmd_yau_mul(ctx, out):
    _cmd_binary(ctx, out, lambda a, b: yau_mul(a, b, ctx.k))


def cmd_alpha(ctx, out):
    p = ctx.element(ctx.args.p)
    result = print_canonical(alpha_pow(p, ctx.k, ctx.args.power))
    _emit(out, ctx, {"result": result}, [result])


def _fmt_index(a):
    return "none" if a is None else "(" + ",".join(str(e) for e in a) + ")"


def cmd_degrees(ctx, out):
    p = ctx.element(ctx.args.p)
    d = degrees(p)
    leading = None if d.leading is None else print_canonical(
        WeylElement.from_ypoly(d.leading))
    payload = {
        "deg_x": None if d.deg_x is None else list(d.deg_x),
        "leading": leading,
        "deg_y": None if d.deg_y is None else list(d.deg_y),
    }
    lines = [f"deg_x: {_fmt_index(d.deg_x)}", f"leading: {leading or 'none'}",
             f"deg_y: {_fmt_index(d.deg_y)}"]
    _emit(out, ctx, payload, lines)


def cmd_flatten(ctx, out):
    p = ctx.element(ctx.args.p)
    flat, cert = flatten_leading(p, ctx.k, ctx.side)
    pres = ctx.presentation([p])
    if not verify_membership(cert, pres, flat):
        raise VerificationFailure("flatten certificate does not evaluate to the flattened element")
    payload = {
        "old": certs.presentation_to_json_obj(pres),
        "result": print_canonical(flat),
        "certificate": certs.to_json_obj(cert),
        "verified": True,
    }
    lines = [f"p' = {print_canonical(flat)}", f"certificate: {certs.dumps(cert)}", "verified: true"]
    _emit(out, ctx, payload, lines)


def cmd_const_gens(ctx, out):
    p = ctx.element(ctx.args.p)
    result = constant_generators(p, ctx.k, ctx.side)
    _ensure_verified(result)
    _emit(out, ctx, _certified_json(result), _certified_text(result, "q", "p"))


def cmd_principal(ctx, out):
    gens = [ctx.element(g) for g in ctx.args.generators]
    t, chain, result = principal_from_constant(gens, ctx.k, ctx.side)
    _ensure_verified(result)
    payload = {"t": print_canonical(t),
               "chain": [print_canonical(s) for s in chain.steps],
               **_certified_json(result)}
    lines = [f"t = {print_canonical(t)}", "chain:"]
    lines += [f"  t{i} = {print_canonical(s)}" for i, s in enumerate(chain.steps)]
    lines += _certified_text(result, "t", "p")
    _emit(out, ctx, payload, lines)


def cmd_two_to_one(ctx, out):
    p, q = ctx.element(ctx.args.p), ctx.element(ctx.args.q)
    t, result = principal_from_two(p, q, ctx.k, ctx.side)
    _ensure_verified(result)
    payload = {"t": print_canonical(t), **_certified_json(result)}
    lines = [f"t = {print_canonical(t)}"] + _certified_text(result, "t", "p")
    _emit(out, ctx, payload, lines)


def cmd_hom_gens(ctx, out):
    gens = [ctx.element(g) for g in ctx.args.generators]
    new = hom_generators_from_assoc(gens, ctx.k)
    result = [print_canonical(g) for g in new]
    _emit(out, ctx, {"generators": result}, result)


def cmd_verify_cert(ctx, out):
    source = ctx.stdin.read() if ctx.args.file == "-" else open(ctx.args.file).read()
    try:
        doc = json.loads(source)
        pres = certs.presentation_from_json_obj(doc["presentation"])
        cert = certs.from_json_obj(doc["certificate"], pres.n)
        target = parse(doc["target"], pres.n)
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise InputError(f"malformed certificate document: {exc}") from None
    value = certs.evaluate_certificate(cert, pres)
    ok = value == target
    payload = {"verified": ok, "value": print_canonical(value)}
    lines = [f"value: {print_canonical(value)}", f"verified: {'true' if ok else 'false'}"]
    _emit(out, ctx, payload, lines)
    return EXIT_OK if ok else EXIT_INPUT


def cmd_check_hom(ctx, out):
    args = ctx.args
    if args.random:
        rng = random.Random(args.seed)
        failures = 0
        for _ in range(args.random):
            n = rng.randint(1, ctx.n)
            k = random_twist(rng, n)
            a, b, c = (random_element(rng, n, max_degree=3) for _ in range(3))
            if not check_hom_associativity(a, b, c, k) or not check_weak_unit(a, k):
                failures += 1
        payload = {"cases": args.random, "seed": args.seed, "failures": failures}
        _emit(out, ctx, payload, [f"checked {args.random} random cases (seed {args.seed}): "
                                  f"{failures} failures"])
        if failures:
            raise VerificationFailure(f"{failures} hom-associativity failures")
        return EXIT_OK
    if len(args.elements) != 3:
        raise InputError("check-hom needs three elements or --random N")
    a, b, c = (ctx.element(e) for e in args.elements)
    report = check_hom_associativity(a, b, c, ctx.k)
    payload = {"holds": report.holds, "lhs": print_canonical(report.lhs),
               "rhs": print_canonical(report.rhs)}
    lines = [f"lhs: {print_canonical(report.lhs)}", f"rhs: {print_canonical(report.rhs)}",
             f"holds: {'true' if report.holds else 'false'}"]
    _emit(out, ctx, payload, lines)
    if not report.holds:
        raise VerificationFailure("hom-associativity identity failed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=1, help="number of variable pairs (default 1)")
    common.add_argument("--k", help="comma-separated twist components (default all 1)")
    common.add_argument("--side", choices=["left", "right"], default="left")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(
        prog="homweyl", description="Exact arithmetic and ideal algorithms in A_n and A_n^k.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    for name, func, text in [("mul", cmd_mul, "associative product a b"),
                             ("yau-mul", cmd_yau_mul, "twisted product alpha_k(a b)")]:
        sp = add(name, func, text)
        sp.add_argument("a")
        sp.add_argument("b")
    sp = add("alpha", cmd_alpha, "apply alpha_k^e")
    sp.add_argument("p")
    sp.add_argument("--power", "-e", type=int, default=1)
    add("degrees", cmd_degrees, "deg_x, leading coefficient and deg_y").add_argument("p")
    add("flatten", cmd_flatten, "element of (p) with leading coefficient 1").add_argument("p")
    add("const-gens", cmd_const_gens, "generators of (p) with constant coefficients").add_argument("p")
    add("principal", cmd_principal, "single generator from constant-coefficient generators"
        ).add_argument("generators", nargs="+")
    sp = add("two-to-one", cmd_two_to_one, "single generator of the ideal (p, q)")
    sp.add_argument("p")
    sp.add_argument("q")
    add("hom-gens", cmd_hom_gens, "apply alpha_k^-1 to A_n generators").add_argument(
        "generators", nargs="+")
    add("verify-cert", cmd_verify_cert, "re-evaluate a certificate document").add_argument("file")
    sp = add("check-hom", cmd_check_hom, "check the hom-associativity identity")
    sp.add_argument("elements", nargs="*")
    sp.add_argument("--random", type=int, default=0, metavar="N",
                    help="check N random cases instead (n up to --n)")
    return parser


def run(argv: Sequence[str], out: TextIO = None, err: TextIO = None, stdin: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        ctx = _Context(args, stdin)
        status = args.func(ctx, out)
    except AlgorithmError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_ALGORITHM
    except VerificationFailure as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_VERIFY
    except (InputError, WeylError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    return EXIT_OK if status is None else status


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
