import logging

from flask import Flask, jsonify, request
from flask_cors import CORS

import config
import psutil

from automaton import evolve, format_state, parse_rule_vector, parse_state
from classes import compare_tables
from errors import CaError, CellCountError
from oracle import build_stg, non_reachable_states, summary, to_dot
from reachability import compressed_tree, identify_reversible
from state_manager import StateManager
from synthesis import count_reversible, new_seed, synthesize

logger = logging.getLogger(__name__)

app = Flask(__name__)
CORS(app)  # Enable CORS for all routes

# --- Initialize State Management ---
state_manager = StateManager()


# --- Helper Functions ---

def _payload():
    return request.get_json(silent=True) or {}


def _rules_from(payload):
    if 'rules' not in payload:
        raise CaError("Missing 'rules'")
    rules = payload['rules']
    if isinstance(rules, list):
        rules = ','.join(str(r) for r in rules)
    return parse_rule_vector(rules)


def _int_field(payload, key, default=None):
    value = payload.get(key, default)
    try:
        return int(value)
    except (TypeError, ValueError):
        raise CaError(f"'{key}' must be an integer, got {value!r}") from None


def _check_api_cells(n, limit=None):
    limit = config.MAX_API_CELLS if limit is None else limit
    if n > limit:
        raise CellCountError(f"The API serves at most {limit} cells, got {n}")


def _bool_field(payload, key, default):
    value = payload.get(key, default)
    if not isinstance(value, bool):
        raise CaError(f"'{key}' must be true or false, got {value!r}")
    return value


@app.errorhandler(CaError)
def handle_ca_error(e):
    state_manager.record_error()
    logger.info("[API] rejected request: %s", e)
    return jsonify({'error': str(e)}), 400


# --- Routes ---

@app.route('/api/identify', methods=['POST'])
def api_identify():
    """Linear-time reversibility verdict with witness"""
    payload = _payload()
    rv = _rules_from(payload)
    verdict = identify_reversible(rv)
    state_manager.record_identification(str(rv), verdict.reversible)
    result = {'rules': str(rv), **verdict.to_record()}
    if payload.get('tree'):
        result['tree'] = [
            {'level': lvl.level, 'nodes': [sorted(node) for node in lvl.nodes]}
            for lvl in compressed_tree(rv)
        ]
    return jsonify(result)


@app.route('/api/synthesize', methods=['POST'])
def api_synthesize():
    payload = _payload()
    n = _int_field(payload, 'n')
    _check_api_cells(n, config.MAX_API_SYNTHESIS_CELLS)
    seed = new_seed() if payload.get('seed') is None else _int_field(payload, 'seed')
    method = payload.get('method') or config.DEFAULT_SYNTHESIS_METHOD
    randomize = _bool_field(payload, 'randomize_dontcares', config.RANDOMIZE_DONTCARES)
    rv = synthesize(n, seed, method, randomize)
    state_manager.record_synthesis(str(rv), method, seed)
    return jsonify({'rules': str(rv), 'n': n, 'seed': seed, 'method': method})


@app.route('/api/evolve', methods=['POST'])
def api_evolve():
    payload = _payload()
    rv = _rules_from(payload)
    state = parse_state(payload.get('state', ''), rv.n)
    steps = _int_field(payload, 'steps', 1)
    if steps > config.MAX_EVOLVE_STEPS:
        raise CaError(f"At most {config.MAX_EVOLVE_STEPS} steps per request")
    return jsonify({'rules': str(rv), 'states': [format_state(s) for s in evolve(rv, state, steps)]})


@app.route('/api/stg', methods=['POST'])
def api_stg():
    """State transition graph summary, optionally with DOT text"""
    payload = _payload()
    rv = _rules_from(payload)
    _check_api_cells(rv.n)
    stg = build_stg(rv)
    result = summary(stg)
    result['non_reachable_states'] = [str(s) for s in non_reachable_states(stg)]
    if payload.get('dot'):
        result['dot'] = '\n'.join(to_dot(stg))
    state_manager.record_graph(str(rv), result['bijective'])
    return jsonify(result)


@app.route('/api/classify')
def api_classify():
    """Derived class tables next to the printed ones"""
    rows = [
        {'table': row.table, 'row': row.row, 'derived': row.derived,
         'published': row.published, 'match': row.matches}
        for row in compare_tables()
    ]
    return jsonify({'rows': rows, 'all_match': all(r['match'] for r in rows)})


@app.route('/api/count/<int:n>')
def api_count(n):
    alphabet = request.args.get('alphabet', 'all')
    canonical = request.args.get('canonical', 'false').lower() in ('1', 'true', 'yes')
    return jsonify({'n': n, 'alphabet': alphabet, 'canonical': canonical,
                    'count': count_reversible(n, alphabet, canonical)})


@app.route('/api/state')
def api_state():
    """Get run statistics and recent requests"""
    limit = request.args.get('limit', None, type=int)
    return jsonify(state_manager.get_full_state(limit))


@app.route('/api/system/stats')
def api_system_stats():
    """Get system resource usage"""
    try:
        cpu_percent = psutil.cpu_percent(interval=0.1)
        memory = psutil.virtual_memory()
        return jsonify({
            'cpu_percent': cpu_percent,
            'memory_percent': memory.percent,
            'memory_used_mb': memory.used / (1024 * 1024),
            'memory_total_mb': memory.total / (1024 * 1024),
            'memory_available_mb': memory.available / (1024 * 1024),
        })
    except Exception as e:
        return jsonify({'error': str(e)}), 500


if __name__ == '__main__':
    logging.basicConfig(level=config.LOG_LEVEL)
    app.run(host=config.API_HOST, port=config.API_PORT, debug=False)
