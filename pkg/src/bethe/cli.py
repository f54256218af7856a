"""Command-line front end.

Two subcommands:

* ``verify <check>`` runs one verification suite and writes a JSON (or
  text) report; exit status 0 on pass, 1 on any failed detail row, 2 on
  usage errors.
* ``compute <object>`` builds a coefficient table (series coefficients in
  exact rationals) and writes it as JSON; rerunning with the same
  configuration reproduces the file byte for byte.

The default output directory is taken from the BETHE_OUTPUT_DIR
environment variable (falling back to the working directory).  Independent
sub-checks are dispatched through a thread pool sized by --jobs (default:
machine parallelism); results are re-sorted before emission so the
schedule never affects the artifact.
"""
from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .algebra import YangianRule, serialize_element
from .indices import IndexSet, ZMatrix, parse_z_spec
from .poisson import PoissonContext, bethe_poly
from .rationals import Q
from .reports import (Report, Timer, dump_json, output_dir, serialize_poly,
                      series_table)
from .tensor import (h_k_orientation, verify_antisymmetrizers,
                     verify_mixed_yang_baxter, verify_r_identities,
                     verify_yang_baxter)
from .twisted import (TwistedContext, resolve_prop36_scalar,
                      resolve_z_rmatrix_scalar, twisted_bethe_series,
                      verify_mixed_rtt, verify_reflection, verify_sklyanin,
                      verify_symmetry, verify_twisted_commutativity,
                      verify_twisted_hat_identity)
from .yangian import (bethe_series, quantum_determinant, verify_bethe_commutativity,
                      verify_centrality, verify_fusion, verify_hat_identity,
                      verify_rtt)
from . import certify

CHECKS = ("rtt", "fusion", "bethe-commute", "centrality", "hat-identity",
          "twisted-symmetry", "twisted-reflection", "twisted-commute",
          "sklyanin", "prop36", "rho-hom", "image-commute", "poisson-jacobi",
          "symbol-hom", "jacobian", "poisson-rank", "classical-so2n")

OBJECTS = ("bethe", "qdet", "twisted-bethe", "poisson-bethe")


class RunConfig:
    """Validated run parameters shared by both subcommands."""

    def __init__(self, args):
        self.kind = args.kind
        if self.kind == "gl":
            if args.N is None:
                raise UsageError("--N is required for kind gl")
            self.index_set = IndexSet.plain(args.N)
        else:
            if args.n is None and args.N is None:
                raise UsageError("--n (or --N) is required for kind so/sp")
            N = args.N if args.N is not None else (
                2 * args.n + (1 if self.kind == "so" and args.odd else 0))
            self.index_set = IndexSet.signed(N, self.kind)
        self.D = args.D
        self.M = args.M
        self.budget = args.budget
        self.k = args.k
        self.seed = args.seed
        self.jobs = args.jobs or (os.cpu_count() or 1)
        self.format = args.format
        self.z_symmetry = args.z_symmetry
        self.z_spec = args.Z or self._default_z()
        tag = None
        if self.kind != "gl":
            tag = ("prime_symmetric" if self.z_symmetry == "symmetric"
                   else "prime_skew")
        self.z = parse_z_spec(self.z_spec, self.index_set, tag)
        self.out = args.out

    def _default_z(self) -> str:
        if self.kind == "gl":
            vals = range(1, self.index_set.N + 1)
        else:
            vals = range(1, self.index_set.n + 1)
        return "diag:" + ",".join(str(v) for v in vals)

    def twisted_ctx(self) -> TwistedContext:
        if self.index_set.kind != "signed":
            raise UsageError("this check needs kind so or sp")
        return TwistedContext(self.index_set)

    def params(self) -> dict:
        return {
            "kind": self.kind,
            "N": self.index_set.N,
            "Z": self.z_spec,
            "z_symmetry": self.z_symmetry if self.kind != "gl" else None,
            "D": self.D,
            "M": self.M,
            "budget": self.budget,
            "k": self.k,
            "seed": self.seed,
            "jobs": self.jobs,
            "version": __version__,
        }


class UsageError(Exception):
    pass


def _pool_run(tasks: list, jobs: int) -> list:
    """Run independent detail-producing callables, concatenating results
    in task order."""
    if jobs <= 1 or len(tasks) <= 1:
        chunks = [t() for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(lambda t: t(), tasks))
    out = []
    for c in chunks:
        out.extend(c)
    return out


# -- check dispatch -------------------------------------------------------------


def run_check(cfg: RunConfig, name: str) -> list:
    iset = cfg.index_set
    D = cfg.D

    if name == "rtt":
        tasks = [lambda: verify_r_identities(iset)]
        if iset.kind == "plain":
            tasks.append(lambda: verify_yang_baxter(iset))
            tasks.append(lambda: verify_rtt(YangianRule(iset), D))
        else:
            ctx = cfg.twisted_ctx()
            tasks.append(lambda: verify_mixed_yang_baxter(iset))
            tasks.append(lambda: verify_mixed_rtt(ctx, D))
            tasks.append(lambda: verify_rtt(ctx.yang_rule, D))
        return _pool_run(tasks, cfg.jobs)

    if name == "fusion":
        rule = YangianRule(iset)
        tasks = [lambda: verify_antisymmetrizers(iset)]
        tasks += [(lambda kk: lambda: verify_fusion(rule, kk, D))(k)
                  for k in range(2, iset.N + 1)]
        return _pool_run(tasks, cfg.jobs)

    if name == "bethe-commute":
        return verify_bethe_commutativity(cfg.z, YangianRule(iset),
                                          cfg.budget)

    if name == "centrality":
        return verify_centrality(YangianRule(iset), D, max_level=D)

    if name == "hat-identity":
        return verify_hat_identity(cfg.z, YangianRule(iset), D)

    if name == "twisted-symmetry":
        return verify_symmetry(cfg.twisted_ctx(), D)

    if name == "twisted-reflection":
        return verify_reflection(cfg.twisted_ctx(), D, total_order=D)

    if name == "twisted-commute":
        return verify_twisted_commutativity(cfg.twisted_ctx(), cfg.z,
                                            cfg.budget)

    if name == "sklyanin":
        return verify_sklyanin(cfg.twisted_ctx(), cfg.z, D)

    if name == "prop36":
        ctx = cfg.twisted_ctx()
        details = list(verify_twisted_hat_identity(ctx, cfg.z, D))
        for k in range(1, iset.N + 1):
            c, ok = resolve_prop36_scalar(ctx, cfg.z, k, D)
            shown = list(c.coeffs) if c is not None else None
            details.append(
                (f"trace-form scalar k={k}: {shown}", ok))
        zr = resolve_z_rmatrix_scalar(ctx, cfg.z)
        details.append((f"exchange scalar c(u) = {zr[0]}*u + {zr[1]}"
                        if zr else "exchange scalar unresolved",
                        zr is not None))
        return details

    if name == "rho-hom":
        return certify.verify_rho_homomorphy(cfg.twisted_ctx(), D)

    if name == "image-commute":
        return certify.verify_pi_rho_image_commutativity(iset, cfg.z, D)

    if name == "poisson-jacobi":
        pkind = "plain" if iset.kind == "plain" else "twisted"
        return certify.verify_poisson_jacobi(
            PoissonContext(pkind, iset, cfg.M), cfg.seed)

    if name == "symbol-hom":
        tasks = []
        if iset.kind == "plain":
            tasks.append(lambda: certify.verify_symbol_homomorphy(
                iset, cfg.M, cfg.seed))
        tasks.append(lambda: certify.verify_laplace_consistency(
            iset, cfg.z, cfg.M))
        return _pool_run(tasks, cfg.jobs)

    if name == "jacobian":
        pkind = "plain" if iset.kind == "plain" else "twisted"
        context = PoissonContext(pkind, iset, cfg.M)
        details = certify.verify_jacobian_rank(
            context, cfg.z, certify.expected_jacobian_rank(context),
            seed=cfg.seed)
        if pkind == "twisted":
            details += certify.verify_twisted_parity(context, cfg.z)
        return details

    if name == "poisson-rank":
        pkind = "plain" if iset.kind == "plain" else "twisted"
        context = PoissonContext(pkind, iset, cfg.M)
        return certify.verify_poisson_rank(
            context, certify.expected_poisson_rank(context))

    if name == "classical-so2n":
        if iset.kind != "signed" or iset.form != "so" or iset.N % 2:
            raise UsageError("classical-so2n needs kind so with even N")
        return certify.verify_classical_slice_rank(iset.n, cfg.z,
                                                   seed=cfg.seed)

    raise UsageError(f"unknown check {name!r}")


# -- compute dispatch -----------------------------------------------------------


def run_compute(cfg: RunConfig, name: str) -> dict:
    iset = cfg.index_set
    D = cfg.D
    ks = [cfg.k] if cfg.k else list(range(1, iset.N + 1))
    config = {k: v for k, v in cfg.params().items() if v is not None}
    config["object"] = name

    if name == "bethe":
        rule = YangianRule(iset)
        rows = [(k, [serialize_element(c)
                     for c in bethe_series(k, cfg.z, rule, D).coeffs])
                for k in ks]
        return series_table(config, rows)

    if name == "qdet":
        rule = YangianRule(iset)
        qd = quantum_determinant(rule, D)
        return series_table(config,
                            [(iset.N, [serialize_element(c) for c in qd.coeffs])])

    if name == "twisted-bethe":
        ctx = cfg.twisted_ctx()
        rows = []
        for k in ks:
            a = twisted_bethe_series(ctx, k, cfg.z, D, expanded=False)
            rows.append((k, [serialize_element(c) for c in a.coeffs]))
        return series_table(config, rows)

    if name == "poisson-bethe":
        pkind = "plain" if iset.kind == "plain" else "twisted"
        context = PoissonContext(pkind, iset, cfg.M)
        rows = [(k, [serialize_poly(p) for p in bethe_poly(k, cfg.z, context)])
                for k in ks]
        return series_table(config, rows)

    raise UsageError(f"unknown object {name!r}")


# -- entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bethe",
        description="Exact verification of commuting Bethe-type families "
                    "and their classical degenerations.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--kind", choices=("gl", "so", "sp"), default="gl")
        sp.add_argument("--N", type=int, default=None,
                        help="matrix size (gl) or signed size N (so/sp)")
        sp.add_argument("--n", type=int, default=None,
                        help="half-size n for signed kinds (N = 2n, or "
                             "2n+1 with --odd for so)")
        sp.add_argument("--odd", action="store_true",
                        help="with --kind so --n: use N = 2n + 1")
        sp.add_argument("--Z", default=None,
                        help="parameter matrix: diag:z1,z2,... or json:PATH")
        sp.add_argument("--z-symmetry", choices=("skew", "symmetric"),
                        default="skew", dest="z_symmetry",
                        help="required symmetry of Z for signed kinds")
        sp.add_argument("--D", type=int, default=3,
                        help="series truncation order")
        sp.add_argument("--M", type=int, default=1,
                        help="level cutoff for the polynomial contexts")
        sp.add_argument("--budget", type=int, default=4,
                        help="total-order budget for commutator suites")
        sp.add_argument("--k", type=int, default=None,
                        help="restrict to one series index k")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--jobs", type=int, default=None,
                        help="work-pool size (default: machine parallelism)")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--out", default=None,
                        help="output path (default: BETHE_OUTPUT_DIR or cwd)")

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("check", choices=CHECKS)
    common(pv)

    pc = sub.add_parser("compute", help="persist a coefficient table")
    pc.add_argument("object", choices=OBJECTS)
    common(pc)
    return p


def conventions(cfg: RunConfig) -> dict:
    try:
        hk = h_k_orientation(min(cfg.index_set.N, 3), cfg.index_set)
    except Exception:
        hk = "unresolved"
    return {"h_k_orientation": hk, "s_uk_orientation": "outer=asc,inner=asc"}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        cfg = RunConfig(args)
        if args.command == "verify":
            with Timer() as tm:
                details = run_check(cfg, args.check)
            rep = Report(args.check, cfg.params(), details, tm.ms,
                         conventions(cfg))
            path = cfg.out or os.path.join(output_dir(),
                                           f"{args.check}.json")
            if cfg.format == "text":
                with open(path, "w") as fh:
                    fh.write(rep.to_text())
                sys.stdout.write(rep.to_text())
            else:
                with open(path, "w") as fh:
                    fh.write(rep.to_json())
                sys.stdout.write(
                    f"{args.check}: {'pass' if rep.passed else 'fail'} "
                    f"({len(rep.details)} checks) -> {path}\n")
            return 0 if rep.passed else 1
        table = run_compute(cfg, args.object)
        path = cfg.out or os.path.join(output_dir(), f"{args.object}.json")
        dump_json(table, path)
        sys.stdout.write(f"{args.object}: table written -> {path}\n")
        return 0
    except UsageError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    except (ValueError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
