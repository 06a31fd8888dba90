"""JSON records and CSV curve files for command output."""

import json
import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

import numpy as np

from ..utils.text import format_float, to_jsonable
from .config import Settings

logger = logging.getLogger(__name__)

CURVE_HEADER = ("theta", "re", "im")
SURFACE_HEADER = ("alpha", "gamma", "g")


class RecordWriter:
    """Writes command results to stdout or to files."""

    def __init__(
        self,
        output: Optional[Path] = None,
        settings: Optional[Settings] = None,
        directory: bool = False,
    ):
        """Initialize the RecordWriter.

        Args:
            output (Path, optional): Target file, or directory when
                ``directory`` is set; stdout when omitted
            settings (Settings, optional): Echoed into every record
            directory (bool): Treat ``output`` as a directory of named files
        """
        self.output = Path(output) if output else None
        self.settings = settings
        self.directory = directory
        self.written: List[Path] = []

    def _target(self, name: str) -> Path:
        if self.directory:
            self.output.mkdir(parents=True, exist_ok=True)
            return self.output / name
        self.output.parent.mkdir(parents=True, exist_ok=True)
        return self.output

    def build_record(
        self,
        command: str,
        inputs: Dict[str, Any],
        result: Any,
        provenance: str,
        reference: str = "none",
    ) -> Dict[str, Any]:
        """Assemble a JSON-ready record.

        Args:
            command (str): Command and target, e.g. "eval psi"
            inputs (Dict[str, Any]): Parameters the command ran with
            result (Any): Result value or value object
            provenance (str): Closed form or procedure behind the result
            reference (str): Label of the result relied on, emitted as ``paper_ref``

        Returns:
            Dict[str, Any]: The record
        """
        return {
            "command": command,
            "input": to_jsonable(inputs),
            "result": to_jsonable(result),
            "paper_ref": reference,
            "provenance": provenance,
            "settings": to_jsonable(self.settings.as_dict()) if self.settings else {},
            "created": datetime.now().isoformat(timespec="seconds"),
        }

    def write_record(self, record: Dict[str, Any], name: str = "record.json") -> Optional[Path]:
        """Write one record as indented JSON."""
        text = json.dumps(record, indent=2, ensure_ascii=False) + "\n"
        return self._emit(name, text)

    @staticmethod
    def _rows_text(header: Sequence[str], rows: Iterable[Sequence[float]]) -> str:
        lines = [",".join(header)]
        lines.extend(",".join(format_float(float(x)) for x in row) for row in rows)
        return "\n".join(lines) + "\n"

    def _emit(self, name: str, text: str) -> Optional[Path]:
        if self.output is None:
            sys.stdout.write(text)
            return None
        path = self._target(name)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        self.written.append(path)
        logger.debug("wrote %s", path)
        return path

    def write_curve(self, name: str, thetas: np.ndarray, points: np.ndarray) -> Optional[Path]:
        """Write a boundary curve as ``theta,re,im`` rows.

        Args:
            name (str): File name inside the output directory
            thetas (np.ndarray): Angles in radians
            points (np.ndarray): Complex curve points

        Returns:
            Path: The file written, or None when writing to stdout
        """
        points = np.asarray(points, dtype=complex)
        rows = zip(thetas, points.real, points.imag)
        return self._emit(name, self._rows_text(CURVE_HEADER, rows))

    def write_surface(
        self, name: str, alphas: np.ndarray, gammas: np.ndarray, values: np.ndarray
    ) -> Optional[Path]:
        """Write a sampled surface as ``alpha,gamma,g`` rows in alpha-major order."""
        rows = (
            (alphas[i], gammas[j], values[i, j])
            for i in range(alphas.size)
            for j in range(gammas.size)
        )
        return self._emit(name, self._rows_text(SURFACE_HEADER, rows))
