"""Run configuration shared by the command-line entry points."""
from dataclasses import dataclass, field

from .errors import InputError
from .extract import ExtractConfig
from .store import Mode


@dataclass
class RunConfig:
    mode: Mode = Mode.RELAXED
    extract: ExtractConfig = None
    sort_inputs: bool = True
    # search-phrase mode: keep sentences matching these words in order
    anchors: tuple = field(default_factory=tuple)
    max_gap: int = 5

    def __post_init__(self):
        self.mode = Mode(self.mode)
        self.anchors = tuple(self.anchors)
        if self.max_gap < 0:
            raise InputError(f"max_gap must be >= 0, got {self.max_gap}")
        if self.extract is None:
            self.extract = ExtractConfig.for_mode(self.mode)
