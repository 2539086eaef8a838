#  Copyright (c) 2024 by the mmvsdr developers.
#  All rights reserved.
from ._version import __version__  # noqa
