from dataclasses import dataclass
from os import getenv
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from stemmer import GuardKind, StemMode

load_dotenv()

PROJECT_ROOT = Path(__file__).resolve().parent


class ConfigError(ValueError):
    """A configuration value is not one of the accepted choices."""


class Config:
    """Stemmer defaults, overridable through the environment or a .env file."""

    LEXICON_PATH = getenv('GUJSTEM_LEXICON', str(PROJECT_ROOT / 'data' / 'gujarati_suffixes.txt'))
    MODE = getenv('GUJSTEM_MODE', StemMode.SINGLE_PASS.value)
    GUARD = getenv('GUJSTEM_GUARD', GuardKind.ORTHOGRAPHIC_BASE.value)
    LOG_LEVEL = getenv('GUJSTEM_LOG_LEVEL', 'WARNING')
    LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


@dataclass(frozen=True)
class RunConfig:
    """Settings for one command invocation.

    ``input_path``/``output_path`` of None mean standard input/output.
    """

    lexicon_path: Path
    mode: StemMode = StemMode.SINGLE_PASS
    guard: GuardKind = GuardKind.ORTHOGRAPHIC_BASE
    input_path: Optional[Path] = None
    output_path: Optional[Path] = None

    @classmethod
    def from_args(cls, args) -> 'RunConfig':
        """Layer parsed command-line arguments over Config defaults."""
        lexicon = getattr(args, 'lexicon', None) or Config.LEXICON_PATH
        mode = getattr(args, 'mode', None) or Config.MODE
        guard = getattr(args, 'guard', None) or Config.GUARD
        input_path = getattr(args, 'input', None)
        output_path = getattr(args, 'output', None)

        try:
            stem_mode = StemMode(mode)
        except ValueError:
            raise ConfigError(f"invalid mode '{mode}' (expected single or iterative)")
        try:
            guard_kind = GuardKind(guard)
        except ValueError:
            raise ConfigError(f"invalid guard '{guard}' (expected base or nonempty)")

        return cls(
            lexicon_path=Path(lexicon),
            mode=stem_mode,
            guard=guard_kind,
            input_path=Path(input_path) if input_path and input_path != '-' else None,
            output_path=Path(output_path) if output_path and output_path != '-' else None,
        )
