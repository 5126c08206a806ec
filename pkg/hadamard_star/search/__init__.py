from .strategies import RandomConfigurations, random_apolar_hsc

__all__ = ["strategies", "RandomConfigurations", "random_apolar_hsc"]
