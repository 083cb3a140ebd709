from .compute import app

__all__ = ["app"]
