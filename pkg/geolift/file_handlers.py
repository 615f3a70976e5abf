"""Handle JSON and DOT input/output"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel

from .models import CartanDatum, ParamRequest, VerificationReport
from .oracle import CrystalGraph, crystal_to_dot

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class FileHandler:
    """Read requests and write results for the command line"""

    @staticmethod
    def _read_json(source: PathLike) -> Any:
        if str(source) == "-":
            return json.load(sys.stdin)
        with open(source, "r", encoding="utf-8") as f:
            return json.load(f)

    @staticmethod
    def load_request(source: PathLike) -> ParamRequest:
        """
        Load a parameter request.

        Args:
            source: path to a JSON file, or "-" for standard input

        Returns:
            Validated ParamRequest ({"word": [...], "t": [...], "lambda": [...]})
        """
        data = FileHandler._read_json(source)
        if not isinstance(data, dict):
            raise ValueError("request JSON must be an object")
        return ParamRequest.model_validate(data)

    @staticmethod
    def load_requests(source: PathLike) -> List[ParamRequest]:
        """
        Load several requests.

        Supports both {"requests": [...]} and a bare array; invalid entries are
        skipped with a warning.
        """
        data = FileHandler._read_json(source)
        if isinstance(data, dict) and "requests" in data:
            items = data["requests"]
        elif isinstance(data, list):
            items = data
        else:
            raise ValueError("JSON must contain 'requests' key or be an array")

        requests = []
        for item in items:
            try:
                requests.append(ParamRequest.model_validate(item))
            except Exception as e:
                logger.warning(f"Skipping invalid request: {e}")
                continue
        return requests

    @staticmethod
    def load_cartan(source: PathLike) -> CartanDatum:
        """Cartan datum from {"series": "A", "rank": 2, "matrix": [[2, -1], [-1, 2]]}"""
        return CartanDatum.model_validate(FileHandler._read_json(source))

    @staticmethod
    def dumps(payload: Union[BaseModel, Dict[str, Any], List[Any]]) -> str:
        """Stable JSON text: sorted keys, models dumped by alias"""
        if isinstance(payload, BaseModel):
            payload = payload.model_dump(mode="json", by_alias=True)
        elif isinstance(payload, list):
            payload = [p.model_dump(mode="json", by_alias=True) if isinstance(p, BaseModel) else p for p in payload]
        return json.dumps(payload, sort_keys=True, indent=2)

    @staticmethod
    def write_text(text: str, output: Optional[PathLike] = None) -> None:
        """Write to a file, or standard output when no path is given"""
        if output is None or str(output) == "-":
            sys.stdout.write(text if text.endswith("\n") else text + "\n")
            return
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
        logger.info(f"wrote {path}")

    @staticmethod
    def save_json(payload: Union[BaseModel, Dict[str, Any], List[Any]], output: Optional[PathLike] = None) -> None:
        FileHandler.write_text(FileHandler.dumps(payload), output)

    @staticmethod
    def save_reports(reports: List[VerificationReport], output: Optional[PathLike] = None) -> None:
        FileHandler.save_json([r.model_dump(mode="json") for r in reports], output)

    @staticmethod
    def save_dot(graph: CrystalGraph, output: Optional[PathLike] = None) -> None:
        FileHandler.write_text(crystal_to_dot(graph), output)

    @staticmethod
    def validate_json_structure(source: PathLike, expected_type: str = "request") -> bool:
        """
        Validate a JSON file before processing.

        Args:
            source: path to JSON file
            expected_type: 'request', 'batch' or 'cartan'

        Returns:
            True if valid, False otherwise
        """
        try:
            data = FileHandler._read_json(source)
            if expected_type == "request":
                return isinstance(data, dict) and "word" in data
            if expected_type == "batch":
                items = data.get("requests") if isinstance(data, dict) else data
                return isinstance(items, list)
            if expected_type == "cartan":
                return isinstance(data, dict) and {"series", "rank", "matrix"} <= set(data)
            return False
        except Exception:
            return False
