from .oeis_check import app

__all__ = ["app"]
