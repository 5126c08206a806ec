import sys

from bestconfig import Config

from hadamard_star.hadamard_star import main
from hadamard_star.settings import SECTION, Settings

config = Config()

settings = Settings.from_mapping(config.get(SECTION))

sys.exit(main(settings=settings))
