from .threshold_checks import CheckLevel, CheckManager, ResidualCheck

__all__ = ["CheckLevel", "CheckManager", "ResidualCheck"]
