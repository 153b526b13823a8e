"""Command line interface: `twistlab verify` and `twistlab dump`.

Exit codes: 0 every check passed, 1 at least one check failed, 2 structural
error (invalid configuration or arguments).
"""

import argparse
import json
import sys

from .errors import ConfigInvalid, TwistlabError
from .expr import delta_morphism, fundamental_morphism
from .rationals import parse_rat
from .report import (
    SUITE_NAMES,
    SuiteConfig,
    config_from_dict,
    dump_matrix,
    emit_report,
    run_suite,
)
from .states import STATE_IDS, table_payload
from .twists import (
    chain_twist,
    extended_twist_generic,
    external_factor,
    jordanian_factor,
    materialize,
    sequence,
)

DUMPABLE = ("jordanian", "extended", "chain", "external0", "external1")


def _split_csv(text):
    return [part for part in text.split(",") if part]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistlab",
        description="Exact verification of twist deformations of U(gl(N))",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--config", help="JSON file with a full SuiteConfig")
    v.add_argument("--n", type=int, help="gl(N) rank parameter")
    v.add_argument("--suites", help=f"comma list from {','.join(SUITE_NAMES)}")
    v.add_argument("--r", help="comma list of column indices r")
    v.add_argument("--alpha", help="comma list of rationals like 1/3")
    v.add_argument("--witness", choices=("fundamental", "doubled"))
    v.add_argument("--format", dest="fmt", choices=("text", "json"))
    v.add_argument("--dump-dir", help="directory for materialized twist dumps")

    d = sub.add_parser("dump", help="materialize a named twist and dump it")
    d.add_argument("--twist", required=True, choices=DUMPABLE)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--r", type=int, default=None, help="carrier column (extended)")
    d.add_argument("--alpha", default="1/2", help="carrier split (extended)")
    d.add_argument("--p", type=int, default=1, help="chain depth (chain)")
    d.add_argument("--witness", choices=("fundamental", "doubled"), default="fundamental")
    d.add_argument("--out", required=True, help="output path")

    t = sub.add_parser("tables", help="export costructure tables as JSON")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--r", type=int, required=True)
    t.add_argument("--state", choices=STATE_IDS, help="one state (default: all nine)")
    t.add_argument("--out", help="output path (default: stdout)")
    return parser


def _verify_config(args) -> SuiteConfig:
    data = {}
    if args.config:
        with open(args.config) as fh:
            data = json.load(fh)
        cfg = config_from_dict(data)
    else:
        cfg = SuiteConfig(n=0, suites=())
    if args.n is not None:
        cfg.n = args.n
    if args.suites is not None:
        cfg.suites = tuple(_split_csv(args.suites))
    if args.r is not None:
        cfg.r_values = tuple(int(x) for x in _split_csv(args.r))
    if args.alpha is not None:
        cfg.alpha_values = tuple(parse_rat(x) for x in _split_csv(args.alpha))
    if args.witness is not None:
        cfg.witness = args.witness
    if args.fmt is not None:
        cfg.output = args.fmt
    if args.dump_dir is not None:
        cfg.dump_dir = args.dump_dir
    if not args.config and args.suites is None:
        raise ConfigInvalid("verify needs --suites (or --config)")
    if not args.config and args.n is None:
        raise ConfigInvalid("verify needs --n (or --config)")
    return cfg


def _dump_twist(args) -> int:
    n = args.n
    if args.twist == "jordanian":
        seq = sequence(jordanian_factor(n, 1))
    elif args.twist == "extended":
        r = args.r if args.r is not None else (2 if n < 6 else 3)
        seq = extended_twist_generic(n, r, parse_rat(args.alpha))
    elif args.twist == "chain":
        seq = chain_twist(n, args.p)
    elif args.twist == "external0":
        seq = sequence(external_factor(n, "E0tilde"))
    else:
        seq = sequence(external_factor(n, "E1tilde"))
    f = fundamental_morphism(n)
    w = f if args.witness == "fundamental" else delta_morphism(f, f)
    dump_matrix(materialize(seq, w, w), args.out)
    print(f"wrote {args.out}")
    return 0


def _export_tables(args) -> int:
    states = (args.state,) if args.state else STATE_IDS
    payload = [table_payload(sid, args.n, args.r) for sid in states]
    text = json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        print(f"wrote {args.out}")
    else:
        print(text)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "dump":
            return _dump_twist(args)
        if args.command == "tables":
            return _export_tables(args)
        cfg = _verify_config(args)
        report = run_suite(cfg)
        sys.stdout.write(emit_report(report))
        return 0 if report.all_passed() else 1
    except ConfigInvalid as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except TwistlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
