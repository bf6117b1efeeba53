"""File-based storage for sweep, run and acceptance outputs."""

import logging
from pathlib import Path

from src.consts import DEFAULT_DATA_DIR
from src.models.model_acceptance import AcceptanceReport
from src.models.model_sweep import SweepMetadata

logger = logging.getLogger(__name__)


class ResultStore:
    """Results directory manager.

    Directory structure:
        data/
        ├── sweeps/{name}.csv         # One row per grid value, regime and police
        ├── sweeps/{name}.meta.json   # Config echo, grid, seed, network statistics
        ├── sweeps/{name}.gp          # Optional gnuplot script
        ├── runs/{name}.csv           # Single-configuration runs
        └── acceptance/{suite}.json   # Pass/fail reports
    """

    def __init__(self, data_dir: Path | str = DEFAULT_DATA_DIR):
        """Initialize ResultStore.

        Args:
            data_dir: Root directory for all outputs
        """
        self.data_dir = Path(data_dir)
        self._sweeps_dir = self.data_dir / "sweeps"
        self._runs_dir = self.data_dir / "runs"
        self._acceptance_dir = self.data_dir / "acceptance"

    def _write(self, path: Path, text: str) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8", newline="")
        logger.info(f"Wrote {path}")
        return path

    # === SWEEPS ===

    def save_sweep(
        self, name: str, csv_text: str, metadata: SweepMetadata, script: str | None = None
    ) -> Path:
        """Save a sweep CSV with its metadata sidecar and optional gnuplot script.

        Returns:
            Path to the CSV file
        """
        csv_path = self._write(self._sweeps_dir / f"{name}.csv", csv_text)
        self._write(self._sweeps_dir / f"{name}.meta.json", metadata.model_dump_json(indent=2))
        if script is not None:
            self._write(self._sweeps_dir / f"{name}.gp", script)
        return csv_path

    def load_sweep_metadata(self, name: str) -> SweepMetadata | None:
        path = self._sweeps_dir / f"{name}.meta.json"
        if not path.exists():
            logger.warning(f"Sweep metadata not found: {path}")
            return None
        return SweepMetadata.model_validate_json(path.read_text(encoding="utf-8"))

    # === RUNS ===

    def save_run(self, name: str, csv_text: str) -> Path:
        """Save the per-trial CSV of a single run.

        Args:
            name: Run name, used as the file stem
            csv_text: Rendered CSV

        Returns:
            Path to runs/{name}.csv
        """
        return self._write(self._runs_dir / f"{name}.csv", csv_text)

    # === ACCEPTANCE ===

    def save_acceptance(self, report: AcceptanceReport) -> Path:
        return self._write(self._acceptance_dir / f"{report.suite}.json", report.model_dump_json(indent=2))

    def load_acceptance(self, suite: str) -> AcceptanceReport | None:
        path = self._acceptance_dir / f"{suite}.json"
        if not path.exists():
            return None
        return AcceptanceReport.model_validate_json(path.read_text(encoding="utf-8"))
