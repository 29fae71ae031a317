"""File-based result storage"""

import csv
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

from .. import __version__
from ..models import ExperimentReport, GridFunction, LimitConstants, PointProcessPath
from ..services.interfaces import IResultStorage

logger = logging.getLogger(__name__)

DECIMALS = 9


def _format_cell(value: Any) -> str:
    """Floats get fixed decimals so files are byte-stable"""
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.{DECIMALS}f}"
    return str(value)


def _round_floats(data: Any) -> Any:
    """Recursively round floats for JSON output"""
    if isinstance(data, dict):
        return {str(k): _round_floats(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [_round_floats(v) for v in data]
    if isinstance(data, (bool, np.bool_)):
        return bool(data)
    if isinstance(data, (int, np.integer)):
        return int(data)
    if isinstance(data, (float, np.floating)):
        value = float(data)
        return round(value, DECIMALS) if np.isfinite(value) else value
    return data


class ResultStorage(IResultStorage):
    """Writes CSV tables and JSON documents under one output directory"""

    def __init__(self, base_path: str = "out"):
        """
        Initialize result storage

        Args:
            base_path: Output directory, created if missing
        """
        self.base_path = Path(base_path)
        try:
            self.base_path.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise IOError(f"Failed to create output directory {self.base_path}: {str(e)}") from e

    def _file(self, name: str, suffix: str) -> Path:
        return self.base_path / f"{name}{suffix}"

    def _write_csv(self, name: str, header: List[str], rows: List[List[Any]]) -> None:
        file_path = self._file(name, '.csv')
        try:
            with open(file_path, 'w', encoding='utf-8', newline='') as f:
                writer = csv.writer(f, lineterminator='\n')
                writer.writerow(header)
                for row in rows:
                    writer.writerow([_format_cell(value) for value in row])
        except OSError as e:
            raise IOError(f"Failed to save {file_path.name}: {str(e)}") from e
        logger.debug("Wrote %s (%d rows)", file_path, len(rows))

    def save_json(self, name: str, data: Dict[str, Any]) -> None:
        """Save a JSON document with sorted keys and rounded floats"""
        file_path = self._file(name, '.json')
        try:
            with open(file_path, 'w', encoding='utf-8') as f:
                json.dump(_round_floats(data), f, indent=2, sort_keys=True, ensure_ascii=False)
                f.write('\n')
        except OSError as e:
            raise IOError(f"Failed to save {file_path.name}: {str(e)}") from e
        logger.debug("Wrote %s", file_path)

    def save_path(self, path: PointProcessPath, metadata: Dict[str, Any], name: str = 'path') -> None:
        """Save event times and flags as CSV plus a JSON sidecar"""
        rows = [[float(t), int(flag)] for t, flag in zip(path.times, path.flags)]
        self._write_csv(name, ['time', 'flag'], rows)
        self.save_json(name, {**metadata, **path.metadata()})

    def load_path(self, name: str = 'path') -> Optional[PointProcessPath]:
        """Load a path written by save_path, None if absent"""
        csv_path = self._file(name, '.csv')
        json_path = self._file(name, '.json')
        if not csv_path.exists() or not json_path.exists():
            return None
        try:
            with open(json_path, 'r', encoding='utf-8') as f:
                meta = json.load(f)
            with open(csv_path, 'r', encoding='utf-8', newline='') as f:
                records = list(csv.DictReader(f))
        except (OSError, json.JSONDecodeError) as e:
            raise IOError(f"Failed to load path {name}: {str(e)}") from e
        return PointProcessPath(
            times=[float(r['time']) for r in records],
            flags=[int(r['flag']) for r in records],
            horizon=float(meta['horizon']),
            escaped_count=int(meta.get('escaped_count', 0)),
            engine=meta.get('engine', 'cluster'),
        )

    def save_grid(self, grid: GridFunction, name: str) -> None:
        """Save a grid function with header t,value"""
        rows = [[float(t), float(v)] for t, v in zip(grid.times, grid.values)]
        self._write_csv(name, ['t', 'value'], rows)

    def save_limits(self, limits: LimitConstants, name: str = 'limits') -> None:
        self.save_json(name, limits.to_dict())

    def save_table(self, name: str, rows: List[Dict[str, Any]]) -> None:
        """Save rows of equal keys; the first row fixes the column order"""
        if not rows:
            self._write_csv(name, [], [])
            return
        header = list(rows[0].keys())
        self._write_csv(name, header, [[row[key] for key in header] for row in rows])

    def save_report(self, report: ExperimentReport) -> List[str]:
        """Save tables, documents and summary.json; return the file names"""
        written = []
        for name, rows in report.tables.items():
            self.save_table(name, rows)
            written.append(f"{name}.csv")
        for name, document in report.documents.items():
            self.save_json(name, document)
            written.append(f"{name}.json")
        self.save_json('summary', report.to_dict())
        written.append('summary.json')
        return written

    def save_manifest(self, command: str, params: Dict[str, Any]) -> None:
        """Save the resolved invocation; its params block is a valid --config"""
        self.save_json('manifest', {
            'command': command,
            'version': __version__,
            'params': params,
        })
