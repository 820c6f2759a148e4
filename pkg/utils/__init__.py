from .error_handlers import EXIT_INVALID, EXIT_IO, EXIT_OK, handle_command_error, setup_error_handlers
from .streams import open_input, open_output

__all__ = ['EXIT_INVALID', 'EXIT_IO', 'EXIT_OK', 'handle_command_error', 'setup_error_handlers', 'open_input', 'open_output']
