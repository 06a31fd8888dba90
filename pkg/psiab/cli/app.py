"""Main psiab application."""

import logging
from dataclasses import replace
from pathlib import Path
from typing import Optional

from ..core.config import ConfigManager, use_settings
from ..core.errors import PsiabError
from ..core.records import RecordWriter
from ..models.run import RunConfig
from .commands import CommandProcessor
from .display import Display

logger = logging.getLogger(__name__)

FIGURE_DIR = Path("figures")


class PsiabApp:
    """Wires configuration, output and commands for one invocation."""

    def __init__(
        self,
        cfg: RunConfig,
        config_dir: Optional[Path] = None,
        display: Optional[Display] = None,
    ):
        """Initialize the application.

        Args:
            cfg (RunConfig): Parsed command-line options
            config_dir (Path, optional): Override for the settings directory
            display (Display, optional): Console output, mainly for tests
        """
        self.cfg = cfg
        self.config_manager = ConfigManager(config_dir)

        settings = self.config_manager.settings
        if cfg.samples is not None:
            settings = replace(settings, polygon_samples=cfg.samples, circle_samples=cfg.samples)
        self.settings = settings
        use_settings(settings)

        if cfg.command == "figure":
            self.writer = RecordWriter(cfg.output or FIGURE_DIR, settings, directory=True)
        else:
            self.writer = RecordWriter(cfg.output, settings)
        self.display = display or Display()
        self.command_processor = CommandProcessor(self.writer, self.display, settings)

    def run(self) -> int:
        """Run the configured command.

        Returns:
            int: 0 on success, 1 on a computational or verification failure
        """
        try:
            return self.command_processor.process_command(self.cfg)
        except (PsiabError, ValueError) as e:
            logger.debug("command failed", exc_info=True)
            self.display.display_error(str(e))
            return 1
