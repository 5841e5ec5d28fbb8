"""JSON output for run manifests."""

import json
from collections import Counter
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from engines.base import Flag, Severity
from engines.engine_final import RunManifest


class JSONReporter:
    """Generate JSON for a manifest and the flags raised during the run."""

    def __init__(self, pretty: bool = True):
        self.pretty = pretty

    def generate(self, manifest: RunManifest, flags: Optional[List[Flag]] = None) -> str:
        """Generate JSON report string."""
        report = self._build_report(manifest, flags or [])

        if self.pretty:
            return json.dumps(report, indent=2, ensure_ascii=False)
        else:
            return json.dumps(report, ensure_ascii=False)

    def write(
        self,
        manifest: RunManifest,
        output_path: Union[str, Path],
        flags: Optional[List[Flag]] = None,
    ) -> None:
        """Write JSON report to file."""
        json_content = self.generate(manifest, flags)

        path = Path(output_path)
        path.parent.mkdir(parents=True, exist_ok=True)

        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(json_content + "\n")

    def _build_report(self, manifest: RunManifest, flags: List[Flag]) -> Dict[str, Any]:
        """Manifest fields plus a flag summary."""
        report = manifest.to_dict()
        report["summary"] = self._build_summary(flags)
        report["flags"] = [f.to_dict() for f in flags]
        return report

    def _build_summary(self, flags: List[Flag]) -> Dict[str, Any]:
        """Build summary statistics."""
        severity_counts = Counter(f.severity.value for f in flags)
        stage_counts = Counter(f.stage.value for f in flags)
        code_counts = Counter(f.code for f in flags)

        return {
            "total": len(flags),
            "by_severity": dict(severity_counts),
            "by_stage": dict(stage_counts),
            "by_code": dict(code_counts),
            "has_errors": any(f.severity == Severity.ERROR for f in flags),
        }

