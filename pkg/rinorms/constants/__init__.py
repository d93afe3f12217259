from .consts import *  # noqa
