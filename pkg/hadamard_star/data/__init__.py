__all__ = ["fixtures", "base", "triples"]
