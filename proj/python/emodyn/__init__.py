"""Lexicon-based emotion arcs and utterance emotion dynamics for dialogue corpora.

Thin package wrapper around the compiled extension; everything public lives
in ``emodyn._emodyn``.
"""

from ._emodyn import *  # noqa: F401,F403
from ._emodyn import __doc__ as _native_doc  # noqa: F401

__version__ = "0.1.0"
