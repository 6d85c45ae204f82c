from .commands import CliConfig, cli, main, parse_args, run

__all__ = ["CliConfig", "cli", "main", "parse_args", "run"]
