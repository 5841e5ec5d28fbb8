"""Final stage: run manifests for reproducibility.

A manifest records the tool version, the numeric settings, every resolved
scenario (atmosphere table included) in output-row order, RNG seeds and
algorithm, derived intermediates and the SHA256 digest of each output file.
Re-evaluating the stored scenarios under the stored settings must reproduce
the digests exactly; `satrep replay` checks this.
"""

import hashlib
import json
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np

from config import TOOL_NAME, TOOL_VERSION
from engines.base import Flag, PipelineStage, ScenarioContext, Severity, Stage
from errors import ConfigurationError
from montecarlo.sampler import RNG_ALGORITHM


def sha256_digest(content: bytes) -> str:
    return hashlib.sha256(content).hexdigest()


@dataclass
class RunManifest:
    """Everything needed to re-execute a run byte for byte."""

    command: str
    scenarios: List[Dict[str, Any]]
    seeds: List[int]
    intermediates: List[Dict[str, Any]]
    outputs: Dict[str, str] = field(default_factory=dict)
    options: Dict[str, Any] = field(default_factory=dict)
    config: Dict[str, Any] = field(default_factory=dict)
    sensitivity: List[Dict[str, Any]] = field(default_factory=list)
    tool: str = TOOL_NAME
    tool_version: str = TOOL_VERSION
    rng_algorithm: str = RNG_ALGORITHM
    numpy_version: str = np.__version__
    created: str = field(default_factory=lambda: datetime.now().isoformat())

    def to_dict(self) -> Dict[str, Any]:
        """Convert manifest to dictionary."""
        return {
            "tool": self.tool,
            "tool_version": self.tool_version,
            "created": self.created,
            "command": self.command,
            "options": self.options,
            "config": self.config,
            "rng_algorithm": self.rng_algorithm,
            "numpy_version": self.numpy_version,
            "seeds": self.seeds,
            "scenarios": self.scenarios,
            "intermediates": self.intermediates,
            "outputs": self.outputs,
            "sensitivity": self.sensitivity,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunManifest":
        try:
            return cls(
                command=data["command"],
                scenarios=list(data["scenarios"]),
                seeds=list(data.get("seeds", [])),
                intermediates=list(data.get("intermediates", [])),
                outputs=dict(data.get("outputs", {})),
                options=dict(data.get("options", {})),
                config=dict(data.get("config", {})),
                sensitivity=list(data.get("sensitivity", [])),
                tool=data.get("tool", TOOL_NAME),
                tool_version=data.get("tool_version", TOOL_VERSION),
                rng_algorithm=data.get("rng_algorithm", RNG_ALGORITHM),
                numpy_version=data.get("numpy_version", np.__version__),
                created=data.get("created", ""),
            )
        except (KeyError, TypeError) as e:
            raise ConfigurationError(f"malformed manifest: missing {e}") from e

    @classmethod
    def read(cls, path: Union[str, Path]) -> "RunManifest":
        path = Path(path)
        if not path.exists():
            raise ConfigurationError(f"manifest not found: {path}")
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"manifest {path} is not valid JSON: {e}") from e
        return cls.from_dict(data)


class ManifestEngine(PipelineStage):
    """
    Final stage: assemble and verify manifests.

    Flags:
    - FN-001: Replayed output digest differs from the manifest
    """

    @property
    def stage_type(self) -> Stage:
        return Stage.FINAL

    def run(self, context: ScenarioContext) -> List[Flag]:
        return []

    def build(
        self,
        command: str,
        contexts: Sequence[ScenarioContext],
        outputs: Dict[str, bytes],
        options: Optional[Dict[str, Any]] = None,
    ) -> RunManifest:
        return RunManifest(
            command=command,
            scenarios=[ctx.scenario.model_dump() for ctx in contexts],
            seeds=sorted({ctx.scenario.mc_seed for ctx in contexts}),
            intermediates=[ctx.intermediates() for ctx in contexts],
            outputs={name: sha256_digest(content) for name, content in outputs.items()},
            options=dict(options or {}),
            config=self.config.numerics(),
        )

    def verify(self, manifest: RunManifest, outputs: Dict[str, bytes]) -> List[Flag]:
        """Compare regenerated outputs with the recorded digests."""
        flags = []
        for name, expected in manifest.outputs.items():
            actual = sha256_digest(outputs[name]) if name in outputs else "missing"
            if actual != expected:
                flags.append(
                    self.flag(
                        Severity.ERROR,
                        "FN-001",
                        f"Replayed {name} differs",
                        value=actual[:16],
                        expected=expected[:16],
                    )
                )
        return flags
