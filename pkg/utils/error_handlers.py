import logging
import sys
from functools import wraps
from typing import Callable, Optional, TextIO, Tuple, Type

from config import ConfigError
from evaluation import GoldError
from lexicon import LexiconError

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2

# Most specific first; the first isinstance match wins
ERROR_HANDLERS: Tuple[Tuple[Type[BaseException], int, str], ...] = (
    (LexiconError, EXIT_INVALID, 'lexicon_error'),
    (GoldError, EXIT_INVALID, 'gold_error'),
    (ConfigError, EXIT_INVALID, 'config_error'),
    (UnicodeDecodeError, EXIT_IO, 'decode_error'),
    (OSError, EXIT_IO, 'io_error'),
)


def describe_error(error: BaseException) -> str:
    """One-line diagnosis naming the failing class, e.g. 'DuplicateSuffix: line 3: ...'."""
    if isinstance(error, OSError) and error.filename:
        return f"{type(error).__name__}: {error.filename}: {error.strerror or error}"
    return f"{type(error).__name__}: {error}"


def handle_command_error(error: BaseException, stderr: Optional[TextIO] = None) -> int:
    """Log an error, report it on stderr and return its exit code.

    Exceptions outside the known families are re-raised.
    """
    stderr = stderr or sys.stderr
    for error_type, exit_code, error_code in ERROR_HANDLERS:
        if isinstance(error, error_type):
            logging.error(f"Command failed ({error_code}): {error}")
            print(f"error: {describe_error(error)}", file=stderr)
            return exit_code
    raise error


def setup_error_handlers(handler: Callable[..., int]) -> Callable[..., int]:
    """Wrap a command handler so known failures become exit codes."""
    @wraps(handler)
    def wrapped(*args, **kwargs) -> int:
        try:
            return handler(*args, **kwargs)
        except BrokenPipeError:
            return EXIT_IO
        except Exception as e:
            return handle_command_error(e)
    return wrapped

