import io
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional, TextIO


def _force_utf8(stream: TextIO) -> None:
    # Replaced streams (StringIO, capture buffers) may not support this
    reconfigure = getattr(stream, 'reconfigure', None)
    if reconfigure is None:
        return
    try:
        reconfigure(encoding='utf-8')
    except (ValueError, io.UnsupportedOperation):
        pass


@contextmanager
def open_input(path: Optional[Path]) -> Iterator[TextIO]:
    """Open ``path`` for UTF-8 reading, or yield stdin when it is None."""
    if path is None:
        _force_utf8(sys.stdin)
        yield sys.stdin
        return
    with open(path, 'r', encoding='utf-8-sig') as handle:
        yield handle


@contextmanager
def open_output(path: Optional[Path]) -> Iterator[TextIO]:
    """Open ``path`` for UTF-8 writing, or yield stdout when it is None."""
    if path is None:
        _force_utf8(sys.stdout)
        yield sys.stdout
        sys.stdout.flush()
        return
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        yield handle
