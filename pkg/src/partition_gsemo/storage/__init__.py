"""Result persistence module."""

from partition_gsemo.storage.result_store import ResultStore

__all__ = ["ResultStore"]
