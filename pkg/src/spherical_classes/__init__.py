"""$DOC"""

__version__ = "$VERSION"
