"""Result storage"""

from .file_storage import ResultStorage

__all__ = ['ResultStorage']
