import json
from dataclasses import asdict, dataclass, field
from typing import Dict

from model.custom_json_encoder import CustomJsonEncoder


@dataclass
class RunManifest:
    """Everything needed to replay one command invocation."""

    command: str
    config: Dict[str, object]
    seed: int
    input_hashes: Dict[str, str] = field(default_factory=dict)
    outputs: Dict[str, str] = field(default_factory=dict)
    timestamp: str = ""
    version: str = ""

    def to_json(self):
        return json.dumps(asdict(self), cls=CustomJsonEncoder, indent=2, sort_keys=True)

    def __repr__(self) -> str:
        return self.to_json()
