"""psiab - numerics and sharp radii for the log-quotient class F[A, B]."""

__version__ = "0.1.0"

from .cli.app import PsiabApp
from .cli.commands import CommandProcessor
from .core.config import ConfigManager, Settings, get_settings
from .core.records import RecordWriter
from .models.params import Mode, PsiParams

__all__ = [
    'PsiabApp',
    'CommandProcessor',
    'ConfigManager',
    'Settings',
    'get_settings',
    'RecordWriter',
    'Mode',
    'PsiParams',
]
