"""
Config Package
Exports para configuraciones y settings
"""

from .settings import settings, validate_settings, Settings

__all__ = ["settings", "validate_settings", "Settings"]
