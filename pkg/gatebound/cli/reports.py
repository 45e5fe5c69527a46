import json
import logging
from typing import Any, Dict, List, Optional

from gatebound.utils import json_safe_encoder
from gatebound.utils.filesystem import atomic_write

_logger = logging.getLogger(__name__)


def package_version() -> str:
    try:
        from importlib.metadata import PackageNotFoundError, version
    except ImportError:  # pragma: no cover
        return 'unknown'
    try:
        return version('gatebound')
    except PackageNotFoundError:
        return 'unknown'


def build_report(command: str,
                 invocation: List[str],
                 seed: Optional[int],
                 result: Any,
                 elapsed_seconds: float) -> Dict[str, Any]:
    """
    the JSON document written by --report
    """
    return {'command': command,
            'invocation': list(invocation),
            'seed': seed,
            'version': package_version(),
            'elapsed_seconds': elapsed_seconds,
            'result': result}


def dumps(data: Any) -> str:
    return json.dumps(data, default=json_safe_encoder, indent=2, sort_keys=False)


def write_json(path: str, data: Any) -> None:
    atomic_write(path, dumps(data) + '\n')
    _logger.info(f'Wrote {path}')


def read_json(path: str) -> Any:
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)


def report_result(data: Dict[str, Any]) -> Any:
    """
    the result of a report document, or the document itself when it is a bare result
    """
    if isinstance(data, dict) and 'result' in data and 'command' in data:
        return data['result']
    return data
