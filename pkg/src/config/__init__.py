from .solver_config import ConfigManager, resolve_config_path

__all__ = ["ConfigManager", "resolve_config_path"]
