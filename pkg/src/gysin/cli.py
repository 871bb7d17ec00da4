"""Command-line front end: ``pushforward``.

Space grammar
    gr:k,n          Grassmannian of k-planes in C^n
    lg:n            Lagrangian Grassmannian in C^(2n)
    og:n,2n         even orthogonal Grassmannian OG(n,2n)
    og:n,2n+1       odd orthogonal Grassmannian OG(n,2n+1)  (write 2n/2n+1 as numbers)
    flA:d1,...,dk;n type-A partial flags in C^n
    flC:d1,...,dk;n isotropic flags, symplectic C^(2n)
    flB:d1,...,dk;n isotropic flags, symmetric form on C^(2n)
    flD:d1,...,dk;n isotropic flags, symmetric form on C^(2n+1)

Class grammar
    expr    := term (('+'|'-') term)*
    term    := '-'* factor ('*' factor)*
    factor  := atom ('^' uint)?
    atom    := rational | variable | schur | '(' expr ')'
    rational:= int ('/' uint)?          exact, e.g. 5, -7, 2/3
    variable:= 'z[i]' | 'z[g,i]' | 't[i]' | 'u[i]' | 'v[m,j]'
               (z[i] means z[1,i]; flags index blocks by g)
    schur   := 's[' parts ']' '(' 'z' block? ')'
               s[2,1](z) is the Schur polynomial of (2,1) in the last
               (or only) z-block; s[2,1](z1) names flag block 1.

Output: the push-forward printed in t-variables only, in descending
graded-lexicographic order with exact rational coefficients; the
reported degree is the total degree (-1 for the zero polynomial).
Exit code 0 on success, 2 when --oracle finds a disagreement, 1 on any
error.
JSON output carries the fixed field set
{space, class, result, degree, weyl_order} plus {oracle, agree} when
--oracle is given.
"""

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import GysinError, ParseError
from .oracle import abbv_pushforward
from .parsing import parse_class
from .polynomial import zvar
from .schur import Partition, partitions, schur_poly, staircase
from .spaces import (
    SpaceSpec,
    lagrangian_grassmannian,
    pushforward,
    weyl_order,
)


def parse_space(text):
    """Parse the space grammar above into a SpaceSpec."""
    try:
        family, _, rest = text.partition(":")
        if not rest:
            raise ValueError("missing parameters")
        if family == "gr":
            k, n = (int(x) for x in rest.split(","))
            return SpaceSpec("gr", (k,), n)
        if family == "lg":
            n = int(rest)
            return SpaceSpec("lg", (n,), n)
        if family == "og":
            n, ambient = (int(x) for x in rest.split(","))
            if ambient == 2 * n:
                return SpaceSpec("og_even", (n,), n)
            if ambient == 2 * n + 1:
                return SpaceSpec("og_odd", (n,), n)
            raise ValueError("og ambient dimension must be 2n or 2n+1")
        if family in ("flA", "flC", "flB", "flD"):
            dpart, _, npart = rest.partition(";")
            if not npart:
                raise ValueError("flag spec needs ';n'")
            d = tuple(int(x) for x in dpart.split(","))
            return SpaceSpec(family, d, int(npart))
        raise ValueError("unknown family %r" % family)
    except ValueError as exc:
        raise ParseError("bad space %r: %s" % (text, exc)) from None


@dataclass
class Request:
    space: SpaceSpec
    class_expr: str
    check_oracle: bool = False
    output_format: str = "text"
    staged: bool = False


@dataclass
class Report:
    space: str
    class_expr: str
    result: str
    degree: int
    weyl_order: int
    seconds: float
    oracle: str = None
    agree: bool = None

    def as_json(self):
        doc = {
            "space": self.space,
            "class": self.class_expr,
            "result": self.result,
            "degree": self.degree,
            "weyl_order": self.weyl_order,
        }
        if self.oracle is not None:
            doc["oracle"] = self.oracle
            doc["agree"] = self.agree
        return json.dumps(doc)

    def as_text(self):
        lines = [
            "space:      %s" % self.space,
            "class:      %s" % self.class_expr,
            "result:     %s" % self.result,
            "degree:     %d" % self.degree,
            "weyl order: %d" % self.weyl_order,
            "time:       %.3fs" % self.seconds,
        ]
        if self.oracle is not None:
            lines.append("oracle:     %s" % self.oracle)
            lines.append("agree:      %s" % ("true" if self.agree else "false"))
        return "\n".join(lines)


def run(request):
    """Evaluate one request; returns a Report."""
    alpha = parse_class(request.class_expr, request.space)
    start = time.perf_counter()
    result = pushforward(request.space, alpha, staged=request.staged)
    seconds = time.perf_counter() - start
    report = Report(
        space=str(request.space),
        class_expr=request.class_expr,
        result=str(result),
        degree=result.total_degree(),
        weyl_order=weyl_order(request.space),
        seconds=seconds,
    )
    if request.check_oracle:
        oracle = abbv_pushforward(request.space, alpha)
        report.oracle = str(oracle)
        report.agree = oracle == result
    return report


def _pr_row(args):
    n, mu_parts = args
    mu = Partition(mu_parts)
    lam = Partition(
        [2 * m + r for m, r in zip(mu.padded(n), staircase(n).parts)]
    )
    zs = [zvar(1, i + 1) for i in range(n)]
    value = pushforward(lagrangian_grassmannian(n), schur_poly(lam, zs))
    return str(lam), str(mu), str(value)


def run_pr_table(n, max_weight, out=None):
    """Push-forwards of s_(2*mu+rho) over LG(n) for all |mu| <= max_weight."""
    out = out or sys.stdout
    mus = []
    for w in range(max_weight + 1):
        mus.extend(p.parts for p in partitions(w, n))
    jobs = [(n, mu) for mu in mus]
    threads = int(os.environ.get("GYSIN_THREADS", "1") or "1")
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_pr_row, jobs))
    else:
        rows = [_pr_row(j) for j in jobs]
    out.write("lambda\tmu\tpushforward\n")
    for lam, mu, value in rows:
        out.write("%s\t%s\t%s\n" % (lam, mu, value))


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="pushforward",
        description="Equivariant Gysin push-forward to a point, as an exact "
        "polynomial in the torus characters t[i].",
    )
    parser.add_argument("--space", help="space spec, e.g. gr:2,4 or flA:1,2;3")
    parser.add_argument(
        "--class",
        dest="class_expr",
        help="cohomology class; '-' reads it from stdin",
    )
    parser.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check against the fixed-point localization sum",
    )
    parser.add_argument(
        "--unsimplified",
        action="store_true",
        help="type-A flags: evaluate the staged all-variables formula",
    )
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", dest="fmt"
    )
    parser.add_argument(
        "--table",
        help="batch mode, e.g. pr:2,4 for the Lagrangian Schur table "
        "with n=2, |mu| <= 4",
    )
    args = parser.parse_args(argv)
    try:
        if args.table:
            kind, _, rest = args.table.partition(":")
            if kind != "pr":
                raise ParseError("unknown table %r" % args.table)
            n, max_weight = (int(x) for x in rest.split(","))
            run_pr_table(n, max_weight)
            return 0
        if not args.space or args.class_expr is None:
            # exit code 2 is reserved for oracle disagreement
            print(
                "error: --space and --class are required (or use --table)",
                file=sys.stderr,
            )
            return 1
        space = parse_space(args.space)
        class_expr = args.class_expr
        if class_expr == "-":
            class_expr = sys.stdin.read().strip()
        request = Request(
            space=space,
            class_expr=class_expr,
            check_oracle=args.oracle,
            output_format=args.fmt,
            staged=args.unsimplified,
        )
        report = run(request)
        print(report.as_json() if args.fmt == "json" else report.as_text())
        if report.agree is False:
            return 2
        return 0
    except GysinError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
