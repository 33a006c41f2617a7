"""
Command-line frontend

    python cli.py identify --rules 90,15,85,15
    python cli.py synthesize --n 8 --seed 7 --method tree
    python cli.py evolve --rules 105,129,171,65 --state 0011 --steps 1
    python cli.py classify
    python cli.py stg --rules 90,15,85,15 > stg.dot
    python cli.py count --n 3

--format json switches any subcommand to one JSON record per line.
"""

import argparse
import json
import logging
import sys

import config
from automaton import evolve, format_state, parse_rule_vector, parse_state
from classes import compare_tables
from errors import CaError
from oracle import build_stg, summary, to_dot
from reachability import compressed_tree, identify_reversible
from synthesis import METHODS, count_reversible, new_seed, synthesize

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED_CHECK = 1
EXIT_USAGE = 2


def _emit(args, record, plain):
    if args.format == 'json':
        print(json.dumps(record, sort_keys=True))
    else:
        print(plain)


# --- Subcommands ---

def cmd_identify(args) -> int:
    rv = parse_rule_vector(args.rules)
    verdict = identify_reversible(rv)
    record = {'rules': str(rv), **verdict.to_record()}
    if args.tree:
        record['tree'] = [[sorted(node) for node in level.nodes] for level in compressed_tree(rv)]

    if verdict.reversible:
        plain = 'reversible'
    else:
        w = verdict.witness
        plain = (f"irreversible (level {w.level}, cell {w.cell}, {w.reason}, "
                 f"node {sorted(w.node)})")
    if args.tree and args.format != 'json':
        plain += ''.join(f"\nlevel {i}: {nodes}" for i, nodes in enumerate(record['tree']))
    _emit(args, record, plain)

    if args.expect_reversible and not verdict.reversible:
        return EXIT_FAILED_CHECK
    return EXIT_OK


def cmd_synthesize(args) -> int:
    seed = args.seed
    if seed is None:
        seed = new_seed()
        print(f"seed: {seed}", file=sys.stderr)
    rv = synthesize(args.n, seed, args.method, args.randomize_dontcares)
    _emit(args, {'rules': str(rv), 'n': rv.n, 'seed': seed, 'method': args.method}, str(rv))
    return EXIT_OK


def cmd_evolve(args) -> int:
    rv = parse_rule_vector(args.rules)
    state = parse_state(args.state, rv.n)
    if args.steps > config.MAX_EVOLVE_STEPS:
        raise CaError(f"At most {config.MAX_EVOLVE_STEPS} steps")
    states = [format_state(s) for s in evolve(rv, state, args.steps)]
    _emit(args, {'rules': str(rv), 'states': states}, ' '.join(states))
    return EXIT_OK


def cmd_classify(args) -> int:
    rows = compare_tables()
    for row in rows:
        record = {'table': row.table, 'row': row.row, 'derived': row.derived,
                  'published': row.published, 'match': row.matches}
        plain = f"{row.table:<22} {row.row:<10} {'ok' if row.matches else 'MISMATCH'}  {row.derived}"
        if not row.matches:
            plain += f"  (printed {row.published})"
        _emit(args, record, plain)
    mismatches = sum(1 for row in rows if not row.matches)
    if mismatches:
        logger.warning("[CLASSIFY] %d rows differ from the printed tables", mismatches)
        return EXIT_FAILED_CHECK
    return EXIT_OK


def cmd_stg(args) -> int:
    stg = build_stg(parse_rule_vector(args.rules))
    info = summary(stg)
    if args.format == 'json':
        if not args.summary_only:
            info['dot'] = '\n'.join(to_dot(stg))
        print(json.dumps(info, sort_keys=True))
        return EXIT_OK
    if not args.summary_only:
        for line in to_dot(stg):
            print(line)
    for key in ('bijective', 'non_reachable', 'max_predecessors', 'cycle_type'):
        print(f"// {key}: {json.dumps(info[key])}")
    return EXIT_OK


def cmd_count(args) -> int:
    total = count_reversible(args.n, args.alphabet, args.canonical)
    _emit(args, {'n': args.n, 'alphabet': args.alphabet, 'canonical': args.canonical,
                 'count': total}, str(total))
    return EXIT_OK


# --- Parser ---

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['plain', 'json'], default='plain',
                        help='Output format (json: one record per line)')
    common.add_argument('-v', '--verbose', action='store_true', help='Debug logging on stderr')

    parser = argparse.ArgumentParser(
        description='Reversibility of null boundary hybrid 3-neighborhood cellular automata')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('identify', parents=[common], help='Decide reversibility of a rule vector')
    p.add_argument('--rules', required=True, help="Comma-separated rules, e.g. '90,15,85,15'")
    p.add_argument('--tree', action='store_true', help='Also print the compressed tree levels')
    p.add_argument('--expect-reversible', action='store_true',
                   help='Exit 1 when the verdict is irreversible')
    p.set_defaults(func=cmd_identify)

    p = sub.add_parser('synthesize', parents=[common], help='Generate a reversible CA')
    p.add_argument('--n', type=int, required=True, help='Number of cells')
    p.add_argument('--seed', type=int, help='RNG seed (generated and echoed on stderr if omitted)')
    p.add_argument('--method', choices=METHODS, default=config.DEFAULT_SYNTHESIS_METHOD)
    p.add_argument('--randomize-dontcares', action='store_true',
                   default=config.RANDOMIZE_DONTCARES,
                   help="Fill boundary don't-care bits randomly instead of with 0")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser('evolve', parents=[common], help='Print a state sequence')
    p.add_argument('--rules', required=True)
    p.add_argument('--state', required=True, help='Initial state, cell 1 first, e.g. 0011')
    p.add_argument('--steps', type=int, default=1)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser('classify', parents=[common],
                       help='Derive the class tables and compare them with the printed ones')
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser('stg', parents=[common], help='State transition graph as DOT text')
    p.add_argument('--rules', required=True)
    p.add_argument('--summary-only', action='store_true', help='Skip the DOT edges')
    p.set_defaults(func=cmd_stg)

    p = sub.add_parser('count', parents=[common], help='Count reversible rule vectors exhaustively')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--alphabet', choices=['all', 'reversible'], default='all')
    p.add_argument('--canonical', action='store_true',
                   help='Count boundary rules once per effective form')
    p.set_defaults(func=cmd_count)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else config.LOG_LEVEL,
                        stream=sys.stderr)
    try:
        return args.func(args)
    except CaError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
