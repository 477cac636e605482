"""MAML toolchain: parse, validate, format, transpile, translate, analyze."""

from .analyze import DeltaReport, PageReport, compare, report_page
from .document import Diagnostic, MamlDocument, validate_document
from .fileformat import format_document, parse_document, serialize_document
from .model import MamlElement, get_prop, make_element
from .script import EventWiring, ScriptAst, check_script, lower_script, parse_script
from .translate import LayoutSnapshot, load_snapshot, translate_snapshot
from .transpile import HtmlPage, ScaleModel, scale_geometry, transpile_document

__all__ = [
    "DeltaReport",
    "Diagnostic",
    "EventWiring",
    "HtmlPage",
    "LayoutSnapshot",
    "MamlDocument",
    "MamlElement",
    "PageReport",
    "ScaleModel",
    "ScriptAst",
    "check_script",
    "compare",
    "format_document",
    "get_prop",
    "load_snapshot",
    "lower_script",
    "make_element",
    "parse_document",
    "parse_script",
    "report_page",
    "scale_geometry",
    "serialize_document",
    "translate_snapshot",
    "transpile_document",
    "validate_document",
]

__version__ = "0.1.0"
