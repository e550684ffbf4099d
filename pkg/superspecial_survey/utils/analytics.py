"""
Run history.

Every CLI command and MCP tool call is appended to
$SUPERSPECIAL_HOME/.runs/history.jsonl so past surveys can be reviewed.
"""

import json
import logging
from datetime import datetime, timedelta
from pathlib import Path
from typing import Dict, List, Optional

from .config import get_settings

logger = logging.getLogger(__name__)


def _get_history_file() -> Path:
    """Get path to history file in user space."""
    return get_settings().history_file


def _ensure_dir(history_file: Path):
    """Ensure runs directory exists."""
    history_file.parent.mkdir(parents=True, exist_ok=True)


def _summarize(data, max_items=8, max_value_length=100):
    if data is None:
        return None
    if isinstance(data, dict):
        summarized = {}
        for i, (k, v) in enumerate(data.items()):
            if i >= max_items:
                break
            if isinstance(v, str) and len(v) > max_value_length:
                summarized[k] = v[:max_value_length] + "..."
            elif isinstance(v, (dict, list)):
                summarized[k] = f"<{type(v).__name__}>"
            else:
                summarized[k] = v
        return summarized
    if isinstance(data, list):
        return f"<list of {len(data)}>"
    if isinstance(data, str) and len(data) > max_value_length:
        return data[:max_value_length] + "..."
    return data


def log_tool_execution(
    tool_name: str,
    status: str,
    duration_sec: float,
    inputs: Dict,
    outputs: Optional[Dict] = None,
    error: Optional[str] = None,
    metadata: Optional[Dict] = None
) -> Dict:
    """
    Append one execution to the run history.

    Args:
        tool_name: Command or tool name (check, coeffs, count, table, density, verify)
        status: "success" or "error"
        duration_sec: How long the execution took
        inputs: Input parameters (will be summarized)
        outputs: Output data (will be summarized)
        error: Error message if failed
        metadata: Additional metadata (surface, exit code, ...)

    Returns:
        The logged execution entry
    """
    history_file = _get_history_file()
    _ensure_dir(history_file)

    entry = {
        "timestamp": datetime.now().isoformat(),
        "tool": tool_name,
        "status": status,
        "duration_sec": round(duration_sec, 2),
        "inputs": _summarize(inputs),
        "outputs": _summarize(outputs),
        "error": error,
        "metadata": metadata
    }
    entry = {k: v for k, v in entry.items() if v is not None}

    with open(history_file, 'a', encoding="utf-8") as f:
        f.write(json.dumps(entry) + '\n')

    logger.info(f"Logged execution: {tool_name} -> {status} ({duration_sec:.1f}s)")
    return entry


def get_execution_history(
    days: int = 30,
    tool_name: Optional[str] = None
) -> List[Dict]:
    """
    Load execution history from the last N days, most recent first.

    Args:
        days: Number of days of history to load
        tool_name: Optional filter by tool name
    """
    history_file = _get_history_file()
    if not history_file.exists():
        return []

    cutoff = datetime.now() - timedelta(days=days)
    executions = []

    with open(history_file, 'r', encoding="utf-8") as f:
        for line in f:
            if not line.strip():
                continue
            try:
                execution = json.loads(line)
                exec_time = datetime.fromisoformat(execution['timestamp'])
            except (json.JSONDecodeError, KeyError, ValueError):
                logger.warning(f"Skipping malformed history line in {history_file}")
                continue
            if exec_time <= cutoff:
                continue
            if tool_name and execution.get('tool') != tool_name:
                continue
            executions.append(execution)

    return sorted(executions, key=lambda x: x['timestamp'], reverse=True)
