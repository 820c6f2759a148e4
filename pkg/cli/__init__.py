from .eval_commands import init_eval_commands
from .lexicon_commands import init_lexicon_commands
from .options import build_policy, policy_options
from .stem_commands import init_stem_commands

__all__ = ['build_policy', 'init_eval_commands', 'init_lexicon_commands', 'init_stem_commands', 'policy_options']
