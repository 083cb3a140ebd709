from .verify import app

__all__ = ["app"]
