"""Runs registered checks on a worker pool and exports the results."""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional
import json
import logging
import time

import jsonschema
import pandas as pd
import yaml

from ..core.errors import BurauForgeError
from ..utils.config import Settings
from .checks import Check, selected

logger = logging.getLogger(__name__)

COLUMNS = ["id", "description", "passed", "seconds", "message"]


@dataclass
class ScoreEntry:
    """Outcome of one check"""
    id: str
    description: str
    passed: bool
    seconds: float
    message: str = ""


@dataclass
class Scorecard:
    """Check outcomes sorted by id"""
    entries: List[ScoreEntry] = field(default_factory=list)
    prefix: Optional[str] = None

    REPORT_SCHEMA = {
        "type": "object",
        "required": ["passed", "total", "failed", "entries"],
        "properties": {
            "passed": {"type": "boolean"},
            "total": {"type": "integer", "minimum": 0},
            "failed": {"type": "array", "items": {"type": "string"}},
            "prefix": {"type": ["string", "null"]},
            "entries": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["id", "passed"],
                    "properties": {
                        "id": {"type": "string"},
                        "description": {"type": "string"},
                        "passed": {"type": "boolean"},
                        "seconds": {"type": "number"},
                        "message": {"type": "string"}
                    }
                }
            }
        }
    }

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failed(self) -> List[str]:
        return [e.id for e in self.entries if not e.passed]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([asdict(e) for e in self.entries], columns=COLUMNS)

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "passed": self.passed,
            "total": len(self.entries),
            "failed": self.failed(),
            "prefix": self.prefix,
            "entries": [asdict(e) for e in self.entries],
        }
        jsonschema.validate(instance=data, schema=self.REPORT_SCHEMA)
        return data

    def format_table(self) -> str:
        if not self.entries:
            return "no checks selected"
        df = self.to_frame()
        df["passed"] = df["passed"].map({True: "PASS", False: "FAIL"})
        df["seconds"] = df["seconds"].map(lambda s: f"{s:.2f}")
        summary = f"{len(self.entries) - len(self.failed())}/{len(self.entries)} checks passed"
        return df[["id", "passed", "seconds", "message"]].to_string(index=False) + "\n" + summary

    def export(self, path: Path):
        """Write the scorecard; the format follows the file suffix."""
        path = Path(path)
        handlers = {
            ".json": self._handle_json,
            ".csv": self._handle_csv,
            ".yaml": self._handle_yaml,
            ".yml": self._handle_yaml,
        }
        handler = handlers.get(path.suffix.lower())
        if handler is None:
            raise BurauForgeError(f"Unsupported scorecard format '{path.suffix}'")
        path.parent.mkdir(parents=True, exist_ok=True)
        handler(path)
        logger.info(f"Scorecard written to {path}")

    def _handle_json(self, path: Path):
        with open(path, "w") as f:
            json.dump(self.to_dict(), f, indent=2)

    def _handle_csv(self, path: Path):
        self.to_frame().to_csv(path, index=False)

    def _handle_yaml(self, path: Path):
        with open(path, "w") as f:
            yaml.safe_dump(self.to_dict(), f, sort_keys=False)


def _run_one(check: Check, settings: Settings) -> ScoreEntry:
    start = time.perf_counter()
    message = ""
    try:
        passed = bool(check.func(settings))
    except BurauForgeError as e:
        passed, message = False, str(e)
        logger.warning(f"{check.id} failed: {e}")
    except Exception as e:
        passed, message = False, f"{type(e).__name__}: {e}"
        logger.exception(f"Unexpected error in check {check.id}")
    seconds = time.perf_counter() - start
    logger.debug(f"{check.id}: {'pass' if passed else 'FAIL'} in {seconds:.2f}s")
    return ScoreEntry(check.id, check.description, passed, seconds, message)


def run_scorecard(prefix: Optional[str] = None, settings: Optional[Settings] = None) -> Scorecard:
    """Run every check whose id starts with ``prefix``; failures are recorded, never raised."""
    settings = settings or Settings()
    checks = selected(prefix)
    logger.info(f"Running {len(checks)} checks with {settings.threads} workers")
    with ThreadPoolExecutor(max_workers=max(1, settings.threads)) as pool:
        entries = list(pool.map(lambda c: _run_one(c, settings), checks))
    card = Scorecard(sorted(entries, key=lambda e: e.id), prefix)
    logger.info(f"{len(entries) - len(card.failed())}/{len(entries)} checks passed")
    return card
