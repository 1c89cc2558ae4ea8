"""Version information for supercocycle-kit.

This file is automatically updated by hatch-vcs during build.
For development installs, it falls back to a placeholder version.
"""

try:
    from supercocycle_kit._version import __version__
except ImportError:
    # Editable install without a hatch-vcs build
    __version__ = "0.0.0.dev0+local"

__all__ = ["__version__"]
