"""Command-line verifier.

    fqstruct verify THEOREM (--q Q | --q-range A..B) [--primes-only] [--k-max K] [--json] [--jobs N]
    fqstruct orbit --q Q --tau T
    fqstruct table --q Q

Exit status: 0 when every row passes or is not applicable, 1 when some
identity fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import dickson, orbits, wilson
from .errors import CapExceeded, DegenerateJ, DegenerateTau, FqError, IdentityFailure, NotApplicable
from .field import Field, make_field, odd_prime_powers, prime_power

SCHEMA = "fqstruct-verify/1"
DEFAULT_MAX_Q = 1000


@dataclass
class VerifyOutcome:
    q: int
    p: int
    n: int
    modulus: str
    delta: str
    theorem: str
    status: str  # pass | fail | not-applicable
    detail: str
    counterexample: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0
    schema: str = SCHEMA

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> VerifyOutcome:
        return cls(**d)


# -- theorem runners -----------------------------------------------------------------
# Each returns a detail string, raises IdentityFailure / NotApplicable, or
# returns a ProductReport (or list of them) that the harness turns into a row.


def _set(F, xs):
    return "{" + ",".join(F.fmt(x) for x in xs) + "}"


def _structure(F, opts):
    count = orbits.check_structure(F)
    orbits.check_short_orbits(F)
    return f"{count} orbits"


def _legendre2(F, opts):
    return f"(2/q)={orbits.legendre_two_formula(F):+d} m={orbits.epsilon_m(F.q)[1]}"


def _legendre_neg3(F, opts):
    return f"(-3/q)={orbits.legendre_neg3_check(F):+d} q mod 3={F.q % 3}"


def _legendre5(F, opts):
    return f"(5/q)={orbits.legendre_five_check(F):+d} q mod 5={F.q % 5}"


def _dickson_factor(F, opts):
    roots = dickson.dickson_factor_roots(F)
    return f"{_set(F, roots)} m={len(roots)}"


def _dickson2_factor(F, opts):
    roots = dickson.dickson2_factor_roots(F)
    return f"{_set(F, roots)} m-1={len(roots)}"


def _wilson4(F, opts):
    pairs = wilson.item4_pairs(F)
    if not pairs:
        raise NotApplicable("no s, t with st != 0 and s^2 + t^2 = 4")
    return [wilson.wilson_item4(F, s, t) for s, t in pairs]


def _pythagorean(F, opts):
    triples = wilson.pythagorean_triples(F)
    for t in triples:
        wilson.pythagorean_symbol_identity(F, *t)
    return f"{len(triples)} triples"


def _cheb_closure(F, opts):
    S = dickson.chebyshev_closure_check(F, opts.k_max)
    return f"|S|={len(S)} k<={opts.k_max}"


def _oddball(F, opts):
    return f"|S|={len(wilson.oddball_permutation(F))}"


def _sum_identity(F, opts):
    for c in F.elements():
        wilson.sum_identity(F, c)
    return f"all {F.q} values of c"


def _sqrt_products(F, opts):
    reports = []
    for j in F.elements():
        try:
            reports.append(wilson.sqrt_products(F, j))
        except (NotApplicable, DegenerateJ):
            continue
    if not reports:
        raise NotApplicable("no j with a formula")
    return reports


def _golden(F, opts):
    return wilson.golden_products(F)


def _c_orbit(F, opts):
    return f"{orbits.check_c_orbits(F)} (c, tau) pairs"


THEOREMS = {
    "structure": _structure,
    "legendre2": _legendre2,
    "legendre-neg3": _legendre_neg3,
    "legendre5": _legendre5,
    "dickson-factor": _dickson_factor,
    "dickson2-factor": _dickson2_factor,
    "wilson1": lambda F, o: wilson.wilson_item1(F),
    "wilson2": lambda F, o: wilson.wilson_item2(F),
    "wilson3": lambda F, o: wilson.wilson_item3(F),
    "wilson4": _wilson4,
    "pythagorean": _pythagorean,
    "cheb-closure": _cheb_closure,
    "oddball-perm": _oddball,
    "sum-identity": _sum_identity,
    "sqrt-products": _sqrt_products,
    "golden": _golden,
    "c-orbit": _c_orbit,
}


def _report_detail(F, r):
    arrow = f"{_set(F, r.index_set)} → {F.fmt(r.product)}"
    if r.compare == "square":
        arrow += f" (square {F.fmt(F.mul(r.product, r.product))}, want {F.fmt(r.expected)})"
    return f"{arrow} {r.note}".rstrip()


def run_theorem(theorem: str, F: Field, k_max: int = 50) -> VerifyOutcome:
    opts = argparse.Namespace(k_max=k_max)
    start = time.perf_counter()
    counterexample = {}
    try:
        result = THEOREMS[theorem](F, opts)
    except IdentityFailure as exc:
        status, detail = "fail", str(exc)
        counterexample = dict(exc.counterexample)
    except NotApplicable as exc:
        status, detail = "not-applicable", str(exc)
    else:
        if isinstance(result, str):
            status, detail = "pass", result
        else:
            reports = result if isinstance(result, list) else [result]
            bad = [r for r in reports if not r.match]
            if bad:
                r = bad[0]
                status, detail = "fail", _report_detail(F, r)
                counterexample = {
                    "index_set": [F.fmt(a) for a in r.index_set],
                    "product": F.fmt(r.product),
                    "expected": F.fmt(r.expected),
                    "note": r.note,
                }
            elif len(reports) == 1:
                status, detail = "pass", _report_detail(F, reports[0])
            else:
                status, detail = "pass", f"{len(reports)} cases"
    elapsed = (time.perf_counter() - start) * 1000
    return VerifyOutcome(
        F.q, F.p, F.n, F.fmt_modulus(), F.fmt(F.delta), theorem, status, detail, counterexample, round(elapsed, 3)
    )


def _job(args):
    p, n, theorem, k_max = args
    return run_theorem(theorem, make_field(p, n), k_max)


# -- argument parsing ---------------------------------------------------------------


def parse_q(text: str) -> tuple:
    """'P', 'P^N' or a prime-power integer -> (p, n)."""
    try:
        if "^" in text:
            base, _, exp = text.partition("^")
            p, n = int(base), int(exp)
            pn = prime_power(p)
            if pn is None or pn[1] != 1 or n < 1:
                raise ValueError
        else:
            pn = prime_power(int(text))
            if pn is None:
                raise ValueError
            p, n = pn
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a prime power P or P^N") from None
    if p == 2:
        raise argparse.ArgumentTypeError("characteristic 2 is not supported")
    return p, n


def parse_range(text: str) -> tuple:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a range A..B") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fqstruct", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run theorem checks over one or many q")
    v.add_argument("theorem", choices=[*THEOREMS, "all"])
    sel = v.add_mutually_exclusive_group(required=True)
    sel.add_argument("--q", type=parse_q, help="P or P^N")
    sel.add_argument("--q-range", type=parse_range, help="A..B, every odd prime power in range")
    v.add_argument("--primes-only", action="store_true", help="restrict --q-range to primes")
    v.add_argument("--k-max", type=int, default=50, help="largest k for Chebyshev closure (default 50)")
    v.add_argument("--json", action="store_true", help="emit a JSON array instead of TSV")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")

    o = sub.add_parser("orbit", help="print the orbit labelled by tau")
    o.add_argument("--q", type=parse_q, required=True)
    o.add_argument("--tau", required=True, help="integer, c0,c1,... or polynomial in x")

    t = sub.add_parser("table", help="print the full tau <-> orbit table")
    t.add_argument("--q", type=parse_q, required=True)
    return parser


# -- commands -----------------------------------------------------------------------


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    if args.q is not None:
        fields = [args.q]
    else:
        fields = [(p, n) for _, p, n in odd_prime_powers(*args.q_range, primes_only=args.primes_only)]
    theorems = list(THEOREMS) if args.theorem == "all" else [args.theorem]
    jobs = [(p, n, th, args.k_max) for p, n in fields for th in theorems]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            outcomes = list(pool.map(_job, jobs, chunksize=4))
    else:
        outcomes = [_job(j) for j in jobs]
    outcomes.sort(key=lambda o: (o.q, theorems.index(o.theorem)))

    if args.json:
        json.dump([o.to_dict() for o in outcomes], out, indent=1, ensure_ascii=False)
        out.write("\n")
    else:
        out.write("# q\ttheorem\tstatus\tdetail\n")
        last_q = None
        for o in outcomes:
            if o.q != last_q:
                out.write(f"# p={o.p} n={o.n} q={o.q} modulus={o.modulus} delta={o.delta}\n")
                last_q = o.q
            detail = o.detail
            if o.counterexample:
                detail += " counterexample=" + json.dumps(o.counterexample, ensure_ascii=False, sort_keys=True)
            out.write(f"{o.q}\t{o.theorem}\t{o.status}\t{detail}\n")
    failed = sum(o.status == "fail" for o in outcomes)
    if failed:
        print(f"{failed} failing row(s)", file=sys.stderr)
    return 1 if failed else 0


def cmd_orbit(F: Field, tau, out=None) -> int:
    out = out or sys.stdout
    out.write(f"# {F.describe()}\n")
    orbit = orbits.orbit_from_tau(F, tau)
    elements = sorted(orbit.elements, key=F.ext_key)
    out.write(f"tau\t{F.fmt(tau)}\n")
    out.write(f"size\t{orbit.size}\n")
    out.write(f"rep\t{F.fmt_ext(orbit.rep)}\n")
    try:
        A, B = orbits.quadrant_signs(F, tau)
        out.write(f"signs\tA={A:+d} B={B:+d} rule v^(q{-A * B:+d})={A:+d}\n")
    except DegenerateTau:
        out.write("signs\tnot unique (tau in {0, 1})\n")
    out.write(f"groups\t{' '.join(orbits.mu_groups(F, orbit.rep))}\n")
    ok = True
    for v in elements:
        back = orbits.tau_of(F, v)
        ok = ok and back == tau
        out.write(f"element\t{F.fmt_ext(v)}\tf(v)={F.fmt(back) if back is not None else 'not in F_q'}\n")
    out.write(f"round-trip\t{'ok' if ok else 'FAILED'}\n")
    return 0 if ok else 1


def table_cap() -> int:
    raw = os.environ.get("FQSTRUCT_MAX_Q", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_Q
    except ValueError:
        raise FqError(f"FQSTRUCT_MAX_Q={raw!r} is not an integer") from None


def cmd_table(F: Field, out=None) -> int:
    out = out or sys.stdout
    cap = table_cap()
    if F.q > cap:
        raise CapExceeded(f"q = {F.q} exceeds the table cap {cap} (set FQSTRUCT_MAX_Q)")
    out.write(f"# {F.describe()}\n")
    out.write("# tau\trep\tsize\tA\tB\n")
    for orbit in orbits.enumerate_orbits(F):
        tau = orbit.tau
        if tau in (0, 1):
            signs = "—\t—"
        else:
            A, B = orbits.quadrant_signs(F, tau)
            signs = f"{A:+d}\t{B:+d}"
        out.write(f"{F.fmt(tau)}\t{F.fmt_ext(orbit.rep)}\t{orbit.size}\t{signs}\n")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            if args.k_max < 1 or args.jobs < 1:
                parser.error("--k-max and --jobs must be positive")
            return cmd_verify(args)
        F = make_field(*args.q)
        if args.command == "orbit":
            try:
                tau = F.parse(args.tau)
            except (ValueError, FqError) as exc:
                parser.error(f"bad --tau: {exc}")
            return cmd_orbit(F, tau)
        return cmd_table(F)
    except FqError as exc:
        print(f"fqstruct: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
