# -*- coding: utf-8 -*-


import os
from string import Template


def on_rtd():
    """ True when building documentation on readthedocs """
    return bool(os.environ.get("READTHEDOCS"))


class DocstringTemplate(Template):
    """
    :class:`string.Template` substituting ``$(name)``
    instead of ``${name}``, so that braces in
    :code:`:math:` roles are left alone.

    .. code-block:: python

        DOC = DocstringTemplate("Runs on $(array_type) arrays")
        DOC.substitute(array_type=":class:`numpy.ndarray`")
    """
    # Compiled by Template with IGNORECASE | VERBOSE
    pattern = r"""
        \$(?:
          (?P<escaped>\$)                      |
          (?P<named>[_a-z][_a-z0-9]*)          |
          \((?P<braced>[_a-z][_a-z0-9]*)\)     |
          (?P<invalid>)
        )
        """
