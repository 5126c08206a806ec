"""Top-level package for hadamard_star."""

__author__ = """Nikita Toloknov"""
__email__ = "4170407@gmail.com"
__version__ = "0.1.0"

__all__ = [
    "api",
    "apolarity",
    "data",
    "field",
    "geometry",
    "linalg",
    "search",
    "star",
]
